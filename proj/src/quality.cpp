#include "qcpg/quality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qcpg/errors.hpp"
#include "qcpg/lexical.hpp"
#include "qcpg/tree_edit_distance.hpp"

namespace qcpg {

namespace {

bool admissible(int v) {
  return v >= 0 && v < kQuantizationStep * kQuantizationLevels && v % kQuantizationStep == 0;
}

// Reads `<name_K>` followed by a single space; advances `rest`.
int read_token(std::string_view& rest, std::string_view name, std::string_view whole) {
  auto fail = [&] {
    throw Error(ErrorCode::kMalformedControlPrefix,
                "expected control token <" + std::string(name) + "_K> in '" + std::string(whole) + "'");
  };
  const std::string open = "<" + std::string(name) + "_";
  if (rest.substr(0, open.size()) != open) fail();
  rest.remove_prefix(open.size());
  const std::size_t close = rest.find('>');
  if (close == std::string_view::npos || close == 0) fail();
  int value = -1;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + close, value);
  if (ec != std::errc() || ptr != rest.data() + close || !admissible(value)) fail();
  rest.remove_prefix(close + 1);
  return value;
}

}  // namespace

bool ControlVector::valid() const { return admissible(sem) && admissible(syn) && admissible(lex); }

QualityVector quality_vector_from_raw(double sem_raw, const std::string& s, const std::string& t,
                                      const ParseTree& tree_s, const ParseTree& tree_t) {
  return {semantic_similarity(sem_raw), syntactic_distance(tree_s, tree_t), lexical_distance(s, t)};
}

QualityVector quality_vector(const std::string& s, const std::string& t, const ParseTree& tree_s,
                             const ParseTree& tree_t, const SemanticScorer& scorer) {
  return quality_vector_from_raw(raw_score(scorer, s, t), s, t, tree_s, tree_t);
}

int quantize(double value) {
  if (std::isnan(value)) throw Error(ErrorCode::kNonFinite, "cannot quantize NaN");
  const double clamped = std::clamp(value, 0.0, 100.0);
  const int bin = std::min(static_cast<int>(std::floor(clamped / kQuantizationStep)),
                           kQuantizationLevels - 1);
  return bin * kQuantizationStep;
}

std::string encode_control(const ControlVector& c) {
  return "<sem_" + std::to_string(c.sem) + "> <syn_" + std::to_string(c.syn) + "> <lex_" +
         std::to_string(c.lex) + ">";
}

std::string prepend_control(std::string_view sentence, const ControlVector& c) {
  return encode_control(c) + " " + std::string(sentence);
}

std::pair<ControlVector, std::string> decode_control(std::string_view text) {
  std::string_view rest = text;
  ControlVector c;
  auto space = [&] {
    if (rest.empty() || rest.front() != ' ') {
      throw Error(ErrorCode::kMalformedControlPrefix,
                  "control tokens must be separated by single spaces in '" + std::string(text) + "'");
    }
    rest.remove_prefix(1);
  };
  c.sem = read_token(rest, "sem", text);
  space();
  c.syn = read_token(rest, "syn", text);
  space();
  c.lex = read_token(rest, "lex", text);
  if (!rest.empty()) space();
  return {c, std::string(rest)};
}

ControlVector apply_offset(const QualityVector& reference, const Offset& offset) {
  return {quantize(reference.sem + offset.sem), quantize(reference.syn + offset.syn),
          quantize(reference.lex + offset.lex)};
}

double distance(const QualityVector& q, const ControlVector& c) {
  const double ds = q.sem - c.sem, dy = q.syn - c.syn, dl = q.lex - c.lex;
  return std::sqrt(ds * ds + dy * dy + dl * dl);
}

}  // namespace qcpg
