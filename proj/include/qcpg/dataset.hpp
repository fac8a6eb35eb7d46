#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcpg {

// Sentences annotated as mutual paraphrases. `trees`, when present, is
// aligned with `sentences`; an empty string marks a missing parse.
struct Cluster {
  std::string cluster_id;
  std::vector<std::string> sentences;
  std::optional<std::vector<std::string>> trees;

  bool has_trees() const { return trees.has_value(); }
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct SentencePair {
  std::string source;
  std::string target;
  std::string cluster_id;
  std::optional<std::string> source_tree;
  std::optional<std::string> target_tree;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

enum class PairMode { kAllOrdered, kAllUnordered, kStarFirst };

PairMode parse_pair_mode(std::string_view name);
std::string_view pair_mode_name(PairMode mode);

struct SplitSizes {
  std::size_t train = 0;
  std::size_t dev = 0;
  std::size_t test = 0;
};

struct DatasetSplit {
  std::vector<SentencePair> train;
  std::vector<SentencePair> dev;
  std::vector<SentencePair> test;
  std::vector<std::string> train_clusters;
  std::vector<std::string> dev_clusters;
  std::vector<std::string> test_clusters;
  std::uint64_t seed = 0;
};

// JSON lines: {"cluster_id": str, "sentences": [str, ...], "trees": [str, ...]?}
std::vector<Cluster> load_clusters(const std::string& path);
std::vector<Cluster> read_clusters(std::istream& in);
Cluster parse_cluster_record(std::string_view line, std::size_t line_no);
void write_clusters(std::ostream& out, const std::vector<Cluster>& clusters);
void save_clusters(const std::string& path, const std::vector<Cluster>& clusters);

std::size_t pair_count(const Cluster& cluster, PairMode mode);
std::vector<SentencePair> extract_pairs(const Cluster& cluster, PairMode mode);
std::vector<SentencePair> extract_pairs(const std::vector<Cluster>& clusters, PairMode mode);

// Whole clusters are dealt to test, then dev, then train in seeded shuffled
// order until each quota (counted in pairs under `mode`) is reached. Throws
// InsufficientData when the corpus cannot fill the quotas.
DatasetSplit split_clusters(const std::vector<Cluster>& clusters, const SplitSizes& sizes,
                            std::uint64_t seed, PairMode mode = PairMode::kAllUnordered);

// Seeded shuffle, then whole clusters until at least `n_pairs` pairs.
std::vector<Cluster> subsample(const std::vector<Cluster>& clusters, std::size_t n_pairs,
                               std::uint64_t seed, PairMode mode = PairMode::kAllUnordered);

// source<TAB>target<TAB>cluster_id[<TAB>source_tree<TAB>target_tree]
void write_pairs_tsv(std::ostream& out, const std::vector<SentencePair>& pairs);
std::vector<SentencePair> read_pairs_tsv(std::istream& in);

}  // namespace qcpg
