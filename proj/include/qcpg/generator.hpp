#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcpg/dataset.hpp"
#include "qcpg/parse_tree.hpp"
#include "qcpg/quality.hpp"
#include "qcpg/semantic.hpp"

namespace qcpg {

struct GeneratorSpec {
  enum class Kind { kIdentity, kRetrievalOracle, kNoisyOracle, kExternalCommand };

  Kind kind = Kind::kIdentity;
  double noise_std = 0.0;
  std::string command;
  std::uint64_t seed = 42;

  static GeneratorSpec identity() { return {}; }
  static GeneratorSpec retrieval_oracle();
  static GeneratorSpec noisy_oracle(double noise_std, std::uint64_t seed);
  static GeneratorSpec external(std::string command);

  // "identity", "retrieval", "noisy:<std>" or "external:<command>".
  static GeneratorSpec parse(std::string_view spec, std::uint64_t seed = 42);
  std::string describe() const;

  bool needs_context() const {
    return kind == Kind::kRetrievalOracle || kind == Kind::kNoisyOracle;
  }
};

// A cluster with its bracketed trees parsed; missing parses stay empty.
struct ParsedCluster {
  Cluster cluster;
  std::vector<std::optional<ParseTree>> trees;

  static ParsedCluster from(const Cluster& cluster);
  std::optional<std::size_t> index_of(std::string_view sentence) const;
};

struct Generation {
  std::string text;
  std::optional<ParseTree> tree;  // known when the output is a cluster member
};

// A cluster member other than the source, with its quality q(source, member).
struct Candidate {
  std::size_t index = 0;
  QualityVector quality;
};

// q(source, member) for every other member that has a parse. Members without
// a parse are skipped.
std::vector<Candidate> score_candidates(const ParsedCluster& context, std::size_t source_index,
                                        const SemanticScorer& scorer);

// Oracle choice among precomputed candidates: nearest (Euclidean) to the
// control, lowest cluster index on ties. The noisy oracle perturbs each
// candidate's quality with Gaussian noise keyed by (seed, source, member),
// so a given candidate always sees the same perturbation.
const Candidate& pick_candidate(const GeneratorSpec& spec, std::string_view source,
                                const std::vector<Candidate>& candidates, const ControlVector& c);

// QCPG(s, c). Oracles need `context`, the cluster containing `s`.
Generation generate(const GeneratorSpec& spec, const std::string& s, const ControlVector& c,
                    const ParsedCluster* context, const SemanticScorer& scorer);

struct ExternalOutput {
  std::string text;
  std::optional<std::string> tree;
};

// Writes `<sem_K> <syn_K> <lex_K> sentence` lines and reads one paraphrase
// per line. A paraphrase line may carry its bracketed parse after a TAB.
std::vector<ExternalOutput> external_generate(
    const std::string& command, const std::vector<std::pair<std::string, ControlVector>>& batch);

}  // namespace qcpg
