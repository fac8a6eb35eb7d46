#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcpg {

using SentencePairView = std::pair<std::string, std::string>;

struct SemanticScorer {
  enum class Kind { kBuiltinTrigram, kExternalCommand };

  Kind kind = Kind::kBuiltinTrigram;
  std::string command;

  static SemanticScorer builtin() { return {}; }
  static SemanticScorer external(std::string command);

  // "builtin" or "external:<command>".
  static SemanticScorer parse(std::string_view spec);
  std::string describe() const;
};

// Character-trigram cosine of the lower-cased sentences, mapped to
// 4 * (cosine - 0.5). Two sentences without trigrams have cosine 1 when
// they are equal after lower-casing and 0 otherwise.
double builtin_trigram_raw(std::string_view s1, std::string_view s2);

// Sends `s1<TAB>s2` lines to the command and reads one decimal score per line.
std::vector<double> external_raw(const std::string& command,
                                 const std::vector<SentencePairView>& pairs);

std::vector<double> raw_scores(const SemanticScorer& scorer,
                               const std::vector<SentencePairView>& pairs);
double raw_score(const SemanticScorer& scorer, const std::string& s1, const std::string& s2);

// 100 * sigmoid(raw). Throws NonFinite for NaN or infinite input.
double semantic_similarity(double raw);

}  // namespace qcpg
