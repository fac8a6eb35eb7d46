#include "qcpg/generator.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "qcpg/errors.hpp"
#include "qcpg/random.hpp"
#include "qcpg/subprocess.hpp"

namespace qcpg {

GeneratorSpec GeneratorSpec::retrieval_oracle() {
  GeneratorSpec g;
  g.kind = Kind::kRetrievalOracle;
  return g;
}

GeneratorSpec GeneratorSpec::noisy_oracle(double noise_std, std::uint64_t seed) {
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
    throw Error(ErrorCode::kInvalidArgument, "noisy oracle needs a finite noise_std >= 0");
  }
  GeneratorSpec g;
  g.kind = Kind::kNoisyOracle;
  g.noise_std = noise_std;
  g.seed = seed;
  return g;
}

GeneratorSpec GeneratorSpec::external(std::string command) {
  if (command.empty()) throw Error(ErrorCode::kInvalidArgument, "external generator needs a command");
  GeneratorSpec g;
  g.kind = Kind::kExternalCommand;
  g.command = std::move(command);
  return g;
}

GeneratorSpec GeneratorSpec::parse(std::string_view spec, std::uint64_t seed) {
  GeneratorSpec g;
  if (spec == "identity") {
    g = identity();
  } else if (spec == "retrieval" || spec == "retrieval_oracle") {
    g = retrieval_oracle();
  } else if (spec.starts_with("noisy:") || spec.starts_with("noisy_oracle:")) {
    const auto value = spec.substr(spec.find(':') + 1);
    double std_dev = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), std_dev);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad noise std in '" + std::string(spec) + "'");
    }
    g = noisy_oracle(std_dev, seed);
  } else if (spec.starts_with("external:")) {
    g = external(std::string(spec.substr(9)));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(spec) + "'");
  }
  g.seed = seed;
  return g;
}

std::string GeneratorSpec::describe() const {
  switch (kind) {
    case Kind::kIdentity: return "identity";
    case Kind::kRetrievalOracle: return "retrieval";
    case Kind::kNoisyOracle: return "noisy:" + std::to_string(noise_std);
    case Kind::kExternalCommand: return "external:" + command;
  }
  return "identity";
}

ParsedCluster ParsedCluster::from(const Cluster& cluster) {
  ParsedCluster p;
  p.cluster = cluster;
  p.trees.resize(cluster.sentences.size());
  if (cluster.trees) {
    for (std::size_t i = 0; i < cluster.sentences.size(); ++i) {
      const auto& text = (*cluster.trees)[i];
      if (text.find_first_not_of(" \t\r\n") != std::string::npos) p.trees[i] = parse_bracketed(text);
    }
  }
  return p;
}

std::optional<std::size_t> ParsedCluster::index_of(std::string_view sentence) const {
  for (std::size_t i = 0; i < cluster.sentences.size(); ++i) {
    if (cluster.sentences[i] == sentence) return i;
  }
  return std::nullopt;
}

std::vector<Candidate> score_candidates(const ParsedCluster& context, std::size_t source_index,
                                        const SemanticScorer& scorer) {
  std::vector<Candidate> out;
  const auto& source_tree = context.trees.at(source_index);
  if (!source_tree) return out;
  const std::string& s = context.cluster.sentences[source_index];

  std::vector<std::size_t> members;
  std::vector<SentencePairView> pairs;
  for (std::size_t j = 0; j < context.cluster.sentences.size(); ++j) {
    if (j == source_index || !context.trees[j]) continue;
    members.push_back(j);
    pairs.emplace_back(s, context.cluster.sentences[j]);
  }
  const auto raws = raw_scores(scorer, pairs);
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t j = members[k];
    out.push_back({j, quality_vector_from_raw(raws[k], s, context.cluster.sentences[j],
                                              *source_tree, *context.trees[j])});
  }
  return out;
}

const Candidate& pick_candidate(const GeneratorSpec& spec, std::string_view source,
                                const std::vector<Candidate>& candidates, const ControlVector& c) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyContext, "no paraphrase candidates for '" + std::string(source) + "'");
  }
  const bool noisy = spec.kind == GeneratorSpec::Kind::kNoisyOracle && spec.noise_std > 0.0;
  const std::uint64_t source_key = noisy ? hash_string(source) : 0;

  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    QualityVector q = candidates[k].quality;
    if (noisy) {
      CounterRng rng(spec.seed, RngStream::kNoisyGenerator, mix64(source_key ^ candidates[k].index));
      q.sem += spec.noise_std * rng.normal();
      q.syn += spec.noise_std * rng.normal();
      q.lex += spec.noise_std * rng.normal();
    }
    const double d = distance(q, c);
    if (d < best_dist) {
      best_dist = d;
      best = k;
    }
  }
  return candidates[best];
}

Generation generate(const GeneratorSpec& spec, const std::string& s, const ControlVector& c,
                    const ParsedCluster* context, const SemanticScorer& scorer) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::kIdentity: {
      Generation g{s, std::nullopt};
      if (context) {
        if (auto i = context->index_of(s)) g.tree = context->trees[*i];
      }
      return g;
    }
    case GeneratorSpec::Kind::kRetrievalOracle:
    case GeneratorSpec::Kind::kNoisyOracle: {
      if (context == nullptr) {
        throw Error(ErrorCode::kEmptyContext, "oracle generators need the source's cluster");
      }
      const auto source_index = context->index_of(s);
      if (!source_index) {
        throw Error(ErrorCode::kInvalidArgument,
                    "sentence is not a member of cluster '" + context->cluster.cluster_id + "'");
      }
      const auto candidates = score_candidates(*context, *source_index, scorer);
      const Candidate& pick = pick_candidate(spec, s, candidates, c);
      return {context->cluster.sentences[pick.index], context->trees[pick.index]};
    }
    case GeneratorSpec::Kind::kExternalCommand: {
      auto out = external_generate(spec.command, {{s, c}});
      Generation g{std::move(out.front().text), std::nullopt};
      if (g.text.empty() && !s.empty()) {
        throw Error(ErrorCode::kProtocolError, "external generator returned an empty paraphrase");
      }
      if (out.front().tree) {
        g.tree = parse_bracketed(*out.front().tree);
      } else if (context) {
        if (auto i = context->index_of(g.text)) g.tree = context->trees[*i];
      }
      return g;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator kind");
}

std::vector<ExternalOutput> external_generate(
    const std::string& command, const std::vector<std::pair<std::string, ControlVector>>& batch) {
  std::vector<std::string> lines;
  lines.reserve(batch.size());
  for (const auto& [sentence, control] : batch) lines.push_back(prepend_control(sentence, control));
  const auto out = run_line_command(command, lines);
  if (out.size() != batch.size()) {
    throw LocatedError(ErrorCode::kProtocolError,
                       "generator returned " + std::to_string(out.size()) + " lines for " +
                           std::to_string(batch.size()) + " inputs",
                       std::min(out.size(), batch.size()) + 1);
  }
  std::vector<ExternalOutput> result;
  result.reserve(out.size());
  for (const auto& line : out) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      result.push_back({line, std::nullopt});
    } else {
      result.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
  }
  return result;
}

}  // namespace qcpg
