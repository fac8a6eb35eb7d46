#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "qcpg/parse_tree.hpp"
#include "qcpg/semantic.hpp"

namespace qcpg {

// Paraphrase quality on the 0-100 scale: semantic similarity, syntactic
// distance, lexical distance.
struct QualityVector {
  double sem = 0.0;
  double syn = 0.0;
  double lex = 0.0;

  std::array<double, 3> as_array() const { return {sem, syn, lex}; }
  static QualityVector from_array(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

  friend bool operator==(const QualityVector&, const QualityVector&) = default;
};

// Signed displacement added to the reference before quantization.
struct Offset {
  double sem = 0.0;
  double syn = 0.0;
  double lex = 0.0;

  bool is_zero() const { return sem == 0.0 && syn == 0.0 && lex == 0.0; }
  friend bool operator==(const Offset&, const Offset&) = default;
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

inline constexpr int kQuantizationStep = 5;
inline constexpr int kQuantizationLevels = 20;

// Each component one of {0, 5, ..., 95}.
struct ControlVector {
  int sem = 0;
  int syn = 0;
  int lex = 0;

  bool valid() const;
  friend bool operator==(const ControlVector&, const ControlVector&) = default;
};

QualityVector quality_vector(const std::string& s, const std::string& t, const ParseTree& tree_s,
                             const ParseTree& tree_t, const SemanticScorer& scorer);

// Same as quality_vector with an already computed semantic raw score.
QualityVector quality_vector_from_raw(double sem_raw, const std::string& s, const std::string& t,
                                      const ParseTree& tree_s, const ParseTree& tree_t);

// Clamp to [0, 100] and floor into one of 20 bins of width 5.
int quantize(double value);

std::string encode_control(const ControlVector& c);
std::string prepend_control(std::string_view sentence, const ControlVector& c);
// Parses the three leading control tokens; throws MalformedControlPrefix.
std::pair<ControlVector, std::string> decode_control(std::string_view text);

ControlVector apply_offset(const QualityVector& reference, const Offset& offset);

double distance(const QualityVector& q, const ControlVector& c);

}  // namespace qcpg
