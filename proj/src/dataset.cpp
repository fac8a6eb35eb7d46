#include "qcpg/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/random.hpp"

namespace qcpg {

namespace {

using nlohmann::json;

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

SentencePair make_pair(const Cluster& c, std::size_t i, std::size_t j) {
  SentencePair p{c.sentences[i], c.sentences[j], c.cluster_id, std::nullopt, std::nullopt};
  if (c.trees) {
    p.source_tree = (*c.trees)[i];
    p.target_tree = (*c.trees)[j];
  }
  return p;
}

}  // namespace

PairMode parse_pair_mode(std::string_view name) {
  if (name == "all_ordered") return PairMode::kAllOrdered;
  if (name == "all_unordered") return PairMode::kAllUnordered;
  if (name == "star_first") return PairMode::kStarFirst;
  throw Error(ErrorCode::kInvalidArgument, "unknown pair mode '" + std::string(name) + "'");
}

std::string_view pair_mode_name(PairMode mode) {
  switch (mode) {
    case PairMode::kAllOrdered: return "all_ordered";
    case PairMode::kAllUnordered: return "all_unordered";
    case PairMode::kStarFirst: return "star_first";
  }
  return "all_unordered";
}

Cluster parse_cluster_record(std::string_view line, std::size_t line_no) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw LocatedError(ErrorCode::kMalformedRecord, std::string("invalid JSON: ") + e.what(), line_no);
  }
  auto malformed = [&](const std::string& why) {
    throw LocatedError(ErrorCode::kMalformedRecord, why, line_no);
  };
  if (!record.is_object()) malformed("record is not an object");

  Cluster c;
  const auto id = record.find("cluster_id");
  if (id == record.end() || !id->is_string()) malformed("missing string field 'cluster_id'");
  c.cluster_id = id->get<std::string>();

  const auto sentences = record.find("sentences");
  if (sentences == record.end() || !sentences->is_array() || sentences->empty()) {
    malformed("'sentences' must be a non-empty array");
  }
  for (const auto& s : *sentences) {
    if (!s.is_string()) malformed("'sentences' must contain strings");
    c.sentences.push_back(s.get<std::string>());
  }

  if (const auto trees = record.find("trees"); trees != record.end() && !trees->is_null()) {
    if (!trees->is_array()) malformed("'trees' must be an array");
    std::vector<std::string> ts;
    for (const auto& t : *trees) {
      if (!t.is_string()) malformed("'trees' must contain strings");
      ts.push_back(t.get<std::string>());
    }
    if (ts.size() != c.sentences.size()) {
      throw LocatedError(ErrorCode::kTreeLengthMismatch,
                         "cluster '" + c.cluster_id + "' has " + std::to_string(ts.size()) +
                             " trees for " + std::to_string(c.sentences.size()) + " sentences",
                         line_no);
    }
    c.trees = std::move(ts);
  }
  return c;
}

std::vector<Cluster> read_clusters(std::istream& in) {
  std::vector<Cluster> clusters;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    clusters.push_back(parse_cluster_record(line, line_no));
  }
  return clusters;
}

std::vector<Cluster> load_clusters(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open cluster file '" + path + "'");
  return read_clusters(in);
}

void write_clusters(std::ostream& out, const std::vector<Cluster>& clusters) {
  for (const auto& c : clusters) {
    json record = {{"cluster_id", c.cluster_id}, {"sentences", c.sentences}};
    if (c.trees) record["trees"] = *c.trees;
    out << record.dump() << '\n';
  }
}

void save_clusters(const std::string& path, const std::vector<Cluster>& clusters) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  write_clusters(out, clusters);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

std::size_t pair_count(const Cluster& cluster, PairMode mode) {
  const std::size_t n = cluster.sentences.size();
  if (n < 2) return 0;
  switch (mode) {
    case PairMode::kAllOrdered: return n * (n - 1);
    case PairMode::kAllUnordered: return n * (n - 1) / 2;
    case PairMode::kStarFirst: return n - 1;
  }
  return 0;
}

std::vector<SentencePair> extract_pairs(const Cluster& cluster, PairMode mode) {
  std::vector<SentencePair> pairs;
  const std::size_t n = cluster.sentences.size();
  pairs.reserve(pair_count(cluster, mode));
  switch (mode) {
    case PairMode::kAllOrdered:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) pairs.push_back(make_pair(cluster, i, j));
      break;
    case PairMode::kAllUnordered:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back(make_pair(cluster, i, j));
      break;
    case PairMode::kStarFirst:
      for (std::size_t j = 1; j < n; ++j) pairs.push_back(make_pair(cluster, 0, j));
      break;
  }
  return pairs;
}

std::vector<SentencePair> extract_pairs(const std::vector<Cluster>& clusters, PairMode mode) {
  std::vector<SentencePair> pairs;
  for (const auto& c : clusters) {
    auto more = extract_pairs(c, mode);
    pairs.insert(pairs.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  }
  return pairs;
}

DatasetSplit split_clusters(const std::vector<Cluster>& clusters, const SplitSizes& sizes,
                            std::uint64_t seed, PairMode mode) {
  std::vector<std::size_t> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  CounterRng rng(seed, RngStream::kSplit);
  rng.shuffle(order);

  DatasetSplit split;
  split.seed = seed;
  const std::size_t quota[3] = {sizes.test, sizes.dev, sizes.train};
  std::size_t filled[3] = {0, 0, 0};
  std::vector<SentencePair>* pairs_out[3] = {&split.test, &split.dev, &split.train};
  std::vector<std::string>* ids_out[3] = {&split.test_clusters, &split.dev_clusters,
                                          &split.train_clusters};

  std::size_t target = 0;
  for (std::size_t idx : order) {
    const Cluster& c = clusters[idx];
    const std::size_t n = pair_count(c, mode);
    if (n == 0) continue;
    while (target < 3 && filled[target] >= quota[target]) ++target;
    if (target == 3) break;
    auto pairs = extract_pairs(c, mode);
    pairs_out[target]->insert(pairs_out[target]->end(), pairs.begin(), pairs.end());
    ids_out[target]->push_back(c.cluster_id);
    filled[target] += n;
  }

  if (filled[0] < quota[0] || filled[1] < quota[1] || filled[2] < quota[2]) {
    std::size_t available = 0;
    for (const auto& c : clusters) available += pair_count(c, mode);
    std::ostringstream msg;
    msg << "cannot fill split quotas (train " << sizes.train << ", dev " << sizes.dev << ", test "
        << sizes.test << "): corpus has " << available << " " << pair_mode_name(mode)
        << " pairs; achieved train " << filled[2] << ", dev " << filled[1] << ", test "
        << filled[0];
    throw Error(ErrorCode::kInsufficientData, msg.str());
  }
  return split;
}

std::vector<Cluster> subsample(const std::vector<Cluster>& clusters, std::size_t n_pairs,
                               std::uint64_t seed, PairMode mode) {
  std::vector<std::size_t> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  CounterRng rng(seed, RngStream::kSubsample);
  rng.shuffle(order);

  std::vector<Cluster> picked;
  std::size_t total = 0;
  for (std::size_t idx : order) {
    if (total >= n_pairs) break;
    picked.push_back(clusters[idx]);
    total += pair_count(clusters[idx], mode);
  }
  return picked;
}

void write_pairs_tsv(std::ostream& out, const std::vector<SentencePair>& pairs) {
  for (const auto& p : pairs) {
    out << p.source << '\t' << p.target << '\t' << p.cluster_id;
    if (p.source_tree || p.target_tree) {
      out << '\t' << p.source_tree.value_or("") << '\t' << p.target_tree.value_or("");
    }
    out << '\n';
  }
}

std::vector<SentencePair> read_pairs_tsv(std::istream& in) {
  std::vector<SentencePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3 && fields.size() != 5) {
      throw LocatedError(ErrorCode::kMalformedRecord,
                         "pairs TSV rows need 3 or 5 columns, got " + std::to_string(fields.size()),
                         line_no);
    }
    SentencePair p{fields[0], fields[1], fields[2], std::nullopt, std::nullopt};
    if (fields.size() == 5) {
      p.source_tree = fields[3];
      p.target_tree = fields[4];
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace qcpg
