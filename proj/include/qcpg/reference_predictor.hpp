#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcpg/quality.hpp"

namespace qcpg {

inline constexpr std::size_t kFeatureCount = 8;
using FeatureVector = std::array<double, kFeatureCount>;

const std::array<std::string_view, kFeatureCount>& feature_names();

// token count, character count, mean token length, digit count,
// upper-case-initial token count, punctuation count, type/token ratio,
// question-mark indicator.
FeatureVector featurize(std::string_view sentence);

struct QualitySample {
  std::string sentence;
  QualityVector quality;
};

// Ridge regressor r(s) over standardized features. Rows are sem, syn, lex.
struct ReferenceModel {
  std::vector<std::string> feature_names;
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  std::array<std::vector<double>, 3> weights;
  std::array<double, 3> bias{};
  double lambda = 1.0;

  QualityVector predict(std::string_view sentence) const;
  // Linear output before clamping.
  std::array<double, 3> predict_unclamped(std::string_view sentence) const;
};

inline constexpr double kDefaultLambda = 1.0;
inline constexpr const char* kModelFormat = "qcpg-kit/reference-model/v1";

// Closed-form ridge fit: minimizes sum |q - W z - b|^2 + lambda |W|^2 where z
// are z-scored features and the bias is unpenalized. Deterministic.
ReferenceModel fit_reference_model(const std::vector<QualitySample>& samples,
                                   double lambda = kDefaultLambda);

QualityVector predict(const ReferenceModel& model, std::string_view sentence);

// Per-dimension mean squared error; throws EmptyEvalSet.
std::array<double, 3> evaluate_mse(const ReferenceModel& model,
                                   const std::vector<QualitySample>& samples);
// MSE of always predicting `mean`.
std::array<double, 3> constant_predictor_mse(const QualityVector& mean,
                                             const std::vector<QualitySample>& samples);
QualityVector mean_quality(const std::vector<QualitySample>& samples);

std::string model_to_json(const ReferenceModel& model);
ReferenceModel model_from_json(std::string_view text);
void save_model(const std::string& path, const ReferenceModel& model);
ReferenceModel load_model(const std::string& path);

}  // namespace qcpg
