#pragma once

#include <cstdint>
#include <vector>

#include "qcpg/dataset.hpp"

namespace qcpg {

struct SyntheticCorpusOptions {
  std::size_t clusters = 50;
  std::size_t sentences_per_cluster = 6;
  std::uint64_t seed = 42;
};

// Clusters of template-generated paraphrases with gold bracketed parses.
// Each cluster shares one event (agent, action, object, place); members vary
// the syntactic template and the synonym chosen for every content word, so
// pairs cover a spread of syntactic and lexical distances.
std::vector<Cluster> synthetic_corpus(const SyntheticCorpusOptions& options);

}  // namespace qcpg
