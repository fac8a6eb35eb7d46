#include "qcpg/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "qcpg/errors.hpp"

namespace qcpg {

namespace {

constexpr int kMaxOrder = 4;

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < s.size()) {
    while (i < s.size() && blank(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !blank(s[j])) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

using NgramCounts = std::map<std::vector<std::string_view>, int>;

NgramCounts count_ngrams(const std::vector<std::string_view>& words, int n) {
  NgramCounts counts;
  if (static_cast<int>(words.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    counts[std::vector<std::string_view>(words.begin() + i, words.begin() + i + n)] += 1;
  }
  return counts;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  if (std::string_view(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

double bleu(std::string_view candidate, const std::vector<std::string>& references) {
  if (references.empty()) throw Error(ErrorCode::kInvalidArgument, "BLEU needs at least one reference");
  const auto cand = split_words(candidate);
  if (cand.empty()) return 0.0;
  std::vector<std::vector<std::string_view>> refs;
  for (const auto& r : references) refs.push_back(split_words(r));

  double log_sum = 0.0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    const NgramCounts cand_counts = count_ngrams(cand, n);
    // Clip each candidate n-gram by its maximum count in any reference.
    NgramCounts max_ref;
    for (const auto& r : refs) {
      for (const auto& [g, c] : count_ngrams(r, n)) max_ref[g] = std::max(max_ref[g], c);
    }
    int matched = 0, total = 0;
    for (const auto& [g, c] : cand_counts) {
      total += c;
      if (auto it = max_ref.find(g); it != max_ref.end()) matched += std::min(c, it->second);
    }
    double precision;
    if (matched > 0) {
      precision = static_cast<double>(matched) / total;
    } else if (n == 1) {
      return 0.0;
    } else {
      precision = 1.0 / (total + 1);
    }
    log_sum += std::log(precision);
  }

  const std::size_t c = cand.size();
  std::size_t r = refs.front().size();
  for (const auto& ref : refs) {
    const auto diff = [&](std::size_t len) { return len > c ? len - c : c - len; };
    if (diff(ref.size()) < diff(r) || (diff(ref.size()) == diff(r) && ref.size() < r)) r = ref.size();
  }
  const double bp = c < r ? std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c)) : 1.0;
  return 100.0 * bp * std::exp(log_sum / kMaxOrder);
}

double self_bleu(std::string_view generated, std::string_view source) {
  return bleu(generated, {std::string(source)});
}

double corpus_self_bleu(const std::vector<std::string>& generated,
                        const std::vector<std::string>& sources) {
  if (generated.size() != sources.size()) {
    throw Error(ErrorCode::kLengthMismatch, "generated and source lists differ in length");
  }
  if (generated.empty()) throw Error(ErrorCode::kEmptyEvalSet, "no sentences");
  double sum = 0.0;
  for (std::size_t i = 0; i < generated.size(); ++i) sum += self_bleu(generated[i], sources[i]);
  return sum / static_cast<double>(generated.size());
}

EvalReport evaluate_systems(const std::vector<SystemOutput>& systems,
                            const std::vector<std::string>& sources,
                            const std::vector<std::optional<ParseTree>>& source_trees,
                            const std::optional<std::vector<std::vector<std::string>>>& references,
                            const SemanticScorer& scorer) {
  if (source_trees.size() != sources.size()) {
    throw Error(ErrorCode::kLengthMismatch, "source trees are not aligned with sources");
  }
  if (references && references->size() != sources.size()) {
    throw Error(ErrorCode::kLengthMismatch, "references are not aligned with sources");
  }
  EvalReport report;
  for (const auto& sys : systems) {
    if (sys.generated.size() != sources.size() || sys.trees.size() != sources.size()) {
      throw Error(ErrorCode::kLengthMismatch, "system '" + sys.name + "' has " +
                                                  std::to_string(sys.generated.size()) + " outputs for " +
                                                  std::to_string(sources.size()) + " sources");
    }
    std::vector<std::size_t> items;
    std::vector<SentencePairView> pairs;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (!source_trees[i] || !sys.trees[i]) continue;
      items.push_back(i);
      pairs.emplace_back(sources[i], sys.generated[i]);
    }
    if (items.empty()) {
      throw Error(ErrorCode::kEmptyEvalSet, "system '" + sys.name + "' has no item with both parses");
    }
    const auto raws = raw_scores(scorer, pairs);
    EvalRow row;
    row.name = sys.name;
    std::array<double, 3> sum{};
    double sb = 0.0, bl = 0.0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      const std::size_t i = items[k];
      const auto q = quality_vector_from_raw(raws[k], sources[i], sys.generated[i], *source_trees[i],
                                             *sys.trees[i]).as_array();
      for (int d = 0; d < 3; ++d) sum[d] += q[d];
      sb += self_bleu(sys.generated[i], sources[i]);
      if (references) bl += bleu(sys.generated[i], (*references)[i]);
    }
    const double n = static_cast<double>(items.size());
    for (auto& v : sum) v /= n;
    row.mean = QualityVector::from_array(sum);
    row.self_bleu = sb / n;
    if (references) row.bleu = bl / n;
    row.n = items.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report_tsv(std::ostream& out, const EvalReport& report) {
  out << "system\tsem\tsyn\tlex\tself_bleu\tbleu\tn\n";
  for (const auto& r : report.rows) {
    out << r.name << '\t' << fixed2(r.mean.sem) << '\t' << fixed2(r.mean.syn) << '\t'
        << fixed2(r.mean.lex) << '\t' << fixed2(r.self_bleu) << '\t'
        << (r.bleu ? fixed2(*r.bleu) : std::string("-")) << '\t' << r.n << '\n';
  }
}

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kLengthMismatch, "Kendall tau needs equal lengths");
  if (x.size() < 2) throw Error(ErrorCode::kLengthMismatch, "Kendall tau needs at least 2 points");
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0) {
        ++ties_x;
      } else if (dy == 0.0) {
        ++ties_y;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double denom = std::sqrt(static_cast<double>(concordant + discordant + ties_x) *
                                 static_cast<double>(concordant + discordant + ties_y));
  if (denom == 0.0) throw Error(ErrorCode::kAllTied, "Kendall tau is undefined when a side is constant");
  return static_cast<double>(concordant - discordant) / denom;
}

}  // namespace qcpg
