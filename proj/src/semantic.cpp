#include "qcpg/semantic.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "qcpg/errors.hpp"
#include "qcpg/subprocess.hpp"
#include "qcpg/utf8.hpp"

namespace qcpg {

namespace {

std::map<std::uint64_t, double> trigram_counts(const std::u32string& text) {
  std::map<std::uint64_t, double> counts;
  for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
    const std::uint64_t key = (static_cast<std::uint64_t>(text[i]) << 42) |
                              (static_cast<std::uint64_t>(text[i + 1]) << 21) |
                              static_cast<std::uint64_t>(text[i + 2]);
    counts[key] += 1.0;
  }
  return counts;
}

double parse_score(const std::string& line, std::size_t line_no) {
  std::size_t b = 0, e = line.size();
  while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
  while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t')) --e;
  double value = 0.0;
  const char* first = line.data() + b;
  const char* last = line.data() + e;
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (b == e || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw LocatedError(ErrorCode::kProtocolError, "scorer returned a non-numeric line '" + line + "'",
                       line_no);
  }
  return value;
}

}  // namespace

SemanticScorer SemanticScorer::external(std::string command) {
  if (command.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "external scorer needs a command");
  }
  SemanticScorer s;
  s.kind = Kind::kExternalCommand;
  s.command = std::move(command);
  return s;
}

SemanticScorer SemanticScorer::parse(std::string_view spec) {
  if (spec == "builtin" || spec == "builtin_trigram") return builtin();
  constexpr std::string_view kPrefix = "external:";
  if (spec.substr(0, kPrefix.size()) == kPrefix) {
    return external(std::string(spec.substr(kPrefix.size())));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scorer '" + std::string(spec) + "'");
}

std::string SemanticScorer::describe() const {
  return kind == Kind::kBuiltinTrigram ? "builtin" : "external:" + command;
}

double builtin_trigram_raw(std::string_view s1, std::string_view s2) {
  const std::u32string a = utf8::to_lower(utf8::decode(s1));
  const std::u32string b = utf8::to_lower(utf8::decode(s2));
  const auto ca = trigram_counts(a);
  const auto cb = trigram_counts(b);

  double cosine = 0.0;
  if (ca.empty() && cb.empty()) {
    cosine = (a == b) ? 1.0 : 0.0;
  } else if (!ca.empty() && !cb.empty()) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [k, v] : ca) {
      na += v * v;
      if (auto it = cb.find(k); it != cb.end()) dot += v * it->second;
    }
    for (const auto& [k, v] : cb) nb += v * v;
    cosine = dot / std::sqrt(na * nb);
    // Identical vectors must give exactly 1.
    if (ca == cb) cosine = 1.0;
  }
  return 4.0 * (cosine - 0.5);
}

std::vector<double> external_raw(const std::string& command,
                                 const std::vector<SentencePairView>& pairs) {
  std::vector<std::string> lines;
  lines.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [s1, s2] = pairs[i];
    if (s1.find('\t') != std::string::npos || s2.find('\t') != std::string::npos) {
      throw LocatedError(ErrorCode::kProtocolError, "sentence contains a tab", i + 1);
    }
    lines.push_back(s1 + '\t' + s2);
  }
  const auto out = run_line_command(command, lines);
  std::vector<double> scores;
  scores.reserve(out.size());
  for (std::size_t i = 0; i < out.size() && i < pairs.size(); ++i) {
    scores.push_back(parse_score(out[i], i + 1));
  }
  if (out.size() != pairs.size()) {
    throw LocatedError(ErrorCode::kProtocolError,
                       "scorer returned " + std::to_string(out.size()) + " lines for " +
                           std::to_string(pairs.size()) + " pairs",
                       std::min(out.size(), pairs.size()) + 1);
  }
  return scores;
}

std::vector<double> raw_scores(const SemanticScorer& scorer,
                               const std::vector<SentencePairView>& pairs) {
  if (scorer.kind == SemanticScorer::Kind::kExternalCommand) {
    return external_raw(scorer.command, pairs);
  }
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.push_back(builtin_trigram_raw(a, b));
  return out;
}

double raw_score(const SemanticScorer& scorer, const std::string& s1, const std::string& s2) {
  if (scorer.kind == SemanticScorer::Kind::kBuiltinTrigram) return builtin_trigram_raw(s1, s2);
  return external_raw(scorer.command, {{s1, s2}}).front();
}

double semantic_similarity(double raw) {
  if (!std::isfinite(raw)) {
    throw Error(ErrorCode::kNonFinite, "semantic raw score is not finite");
  }
  return 100.0 / (1.0 + std::exp(-raw));
}

}  // namespace qcpg
