#include "qcpg/reference_predictor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/utf8.hpp"

namespace qcpg {

namespace {

using nlohmann::json;

std::vector<std::u32string> whitespace_tokens(const std::u32string& text) {
  std::vector<std::u32string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !utf8::is_space(text[j])) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<double> standardized(const ReferenceModel& m, const FeatureVector& f) {
  std::vector<double> z(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) z[k] = (f[k] - m.feature_mean[k]) / m.feature_scale[k];
  return z;
}

[[noreturn]] void bad_model(const std::string& why) {
  throw Error(ErrorCode::kModelFormat, "invalid reference model: " + why);
}

}  // namespace

const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "token_count",   "char_count",        "mean_token_length", "digit_count",
      "upper_initial", "punctuation_count", "type_token_ratio",  "question_mark"};
  return names;
}

FeatureVector featurize(std::string_view sentence) {
  const std::u32string text = utf8::decode(sentence);
  const auto tokens = whitespace_tokens(text);

  double token_chars = 0.0, upper_initial = 0.0, digits = 0.0, punct = 0.0;
  std::set<std::u32string> types;
  for (const auto& t : tokens) {
    token_chars += static_cast<double>(t.size());
    if (utf8::is_upper(t.front())) upper_initial += 1.0;
    types.insert(utf8::to_lower(t));
  }
  bool question = false;
  for (char32_t c : text) {
    if (utf8::is_digit(c)) digits += 1.0;
    if (utf8::is_punct(c)) punct += 1.0;
    if (c == U'?') question = true;
  }
  const double n = static_cast<double>(tokens.size());
  return {n,
          static_cast<double>(text.size()),
          n > 0 ? token_chars / n : 0.0,
          digits,
          upper_initial,
          punct,
          n > 0 ? static_cast<double>(types.size()) / n : 1.0,
          question ? 1.0 : 0.0};
}

std::array<double, 3> ReferenceModel::predict_unclamped(std::string_view sentence) const {
  const auto z = standardized(*this, featurize(sentence));
  std::array<double, 3> out{};
  for (int d = 0; d < 3; ++d) {
    double v = bias[d];
    for (std::size_t k = 0; k < z.size(); ++k) v += weights[d][k] * z[k];
    out[d] = v;
  }
  return out;
}

QualityVector ReferenceModel::predict(std::string_view sentence) const {
  auto raw = predict_unclamped(sentence);
  for (auto& v : raw) v = std::clamp(v, 0.0, 100.0);
  return QualityVector::from_array(raw);
}

QualityVector predict(const ReferenceModel& model, std::string_view sentence) {
  return model.predict(sentence);
}

ReferenceModel fit_reference_model(const std::vector<QualitySample>& samples, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "ridge lambda must be positive and finite");
  }
  if (samples.size() < 2) {
    throw Error(ErrorCode::kDegenerateDesign,
                "need at least 2 samples to fit the reference model, got " +
                    std::to_string(samples.size()));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index d = kFeatureCount;

  Eigen::MatrixXd x(n, d);
  Eigen::MatrixXd y(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto f = featurize(samples[i].sentence);
    for (Eigen::Index k = 0; k < d; ++k) x(i, k) = f[k];
    const auto q = samples[i].quality.as_array();
    for (int t = 0; t < 3; ++t) {
      if (!std::isfinite(q[t])) throw Error(ErrorCode::kNonFinite, "non-finite quality target");
      y(i, t) = q[t];
    }
  }

  ReferenceModel model;
  model.lambda = lambda;
  for (auto name : feature_names()) model.feature_names.emplace_back(name);
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  Eigen::RowVectorXd scale = (centered.array().square().colwise().sum() / static_cast<double>(n)).sqrt();
  for (Eigen::Index k = 0; k < d; ++k) {
    if (!(scale(k) > 1e-12)) scale(k) = 1.0;  // constant feature
  }
  const Eigen::MatrixXd z = centered.array().rowwise() / scale.array();
  const Eigen::RowVectorXd y_mean = y.colwise().mean();
  const Eigen::MatrixXd y_centered = y.rowwise() - y_mean;

  Eigen::MatrixXd gram = z.transpose() * z;
  gram.diagonal().array() += lambda;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw Error(ErrorCode::kDegenerateDesign, "regularized normal equations are not positive definite");
  }
  const Eigen::MatrixXd w = ldlt.solve(z.transpose() * y_centered);
  if (!w.allFinite()) throw Error(ErrorCode::kDegenerateDesign, "ridge solution is not finite");

  model.feature_mean.assign(mean.data(), mean.data() + d);
  model.feature_scale.assign(scale.data(), scale.data() + d);
  for (int t = 0; t < 3; ++t) {
    model.weights[t].resize(d);
    for (Eigen::Index k = 0; k < d; ++k) model.weights[t][k] = w(k, t);
    model.bias[t] = y_mean(t);
  }
  return model;
}

QualityVector mean_quality(const std::vector<QualitySample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyEvalSet, "no samples");
  std::array<double, 3> sum{};
  for (const auto& s : samples) {
    const auto q = s.quality.as_array();
    for (int d = 0; d < 3; ++d) sum[d] += q[d];
  }
  for (auto& v : sum) v /= static_cast<double>(samples.size());
  return QualityVector::from_array(sum);
}

std::array<double, 3> evaluate_mse(const ReferenceModel& model,
                                   const std::vector<QualitySample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyEvalSet, "evaluation set is empty");
  std::array<double, 3> sum{};
  for (const auto& s : samples) {
    const auto p = model.predict(s.sentence).as_array();
    const auto q = s.quality.as_array();
    for (int d = 0; d < 3; ++d) sum[d] += (p[d] - q[d]) * (p[d] - q[d]);
  }
  for (auto& v : sum) v /= static_cast<double>(samples.size());
  return sum;
}

std::array<double, 3> constant_predictor_mse(const QualityVector& mean,
                                             const std::vector<QualitySample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyEvalSet, "evaluation set is empty");
  const auto m = mean.as_array();
  std::array<double, 3> sum{};
  for (const auto& s : samples) {
    const auto q = s.quality.as_array();
    for (int d = 0; d < 3; ++d) sum[d] += (m[d] - q[d]) * (m[d] - q[d]);
  }
  for (auto& v : sum) v /= static_cast<double>(samples.size());
  return sum;
}

std::string model_to_json(const ReferenceModel& model) {
  json j;
  j["format"] = kModelFormat;
  j["feature_names"] = model.feature_names;
  j["feature_mean"] = model.feature_mean;
  j["feature_scale"] = model.feature_scale;
  j["weights"] = {{"sem", model.weights[0]}, {"syn", model.weights[1]}, {"lex", model.weights[2]}};
  j["bias"] = {{"sem", model.bias[0]}, {"syn", model.bias[1]}, {"lex", model.bias[2]}};
  j["lambda"] = model.lambda;
  return j.dump(2);
}

ReferenceModel model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_model(std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) bad_model("top level is not an object");
  const auto format = j.find("format");
  if (format == j.end() || !format->is_string()) bad_model("missing format tag");
  if (*format != kModelFormat) {
    bad_model("unsupported format '" + format->get<std::string>() + "', expected '" + kModelFormat + "'");
  }

  ReferenceModel m;
  try {
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.feature_mean = j.at("feature_mean").get<std::vector<double>>();
    m.feature_scale = j.at("feature_scale").get<std::vector<double>>();
    const auto& w = j.at("weights");
    const auto& b = j.at("bias");
    const char* dims[3] = {"sem", "syn", "lex"};
    for (int d = 0; d < 3; ++d) {
      m.weights[d] = w.at(dims[d]).get<std::vector<double>>();
      m.bias[d] = b.at(dims[d]).get<double>();
    }
    m.lambda = j.at("lambda").get<double>();
  } catch (const json::exception& e) {
    bad_model(e.what());
  }

  std::vector<std::string> expected(feature_names().begin(), feature_names().end());
  if (m.feature_names != expected) bad_model("feature names do not match this featurizer");
  const std::size_t d = expected.size();
  if (m.feature_mean.size() != d || m.feature_scale.size() != d) bad_model("standardization size mismatch");
  for (const auto& row : m.weights) {
    if (row.size() != d) bad_model("weight row size mismatch");
  }
  if (!(m.lambda > 0.0)) bad_model("lambda must be positive");
  for (double s : m.feature_scale) {
    if (!(s > 0.0)) bad_model("feature scale must be positive");
  }
  return m;
}

void save_model(const std::string& path, const ReferenceModel& model) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write model '" + path + "'");
  out << model_to_json(model) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

ReferenceModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open model '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace qcpg
