#include "qcpg/control_selection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/parallel.hpp"

namespace qcpg {

namespace {

constexpr const char* kHeatmapHeader =
    "o_sem,o_syn,o_lex,q_sem,q_syn,q_lex,r_sem,r_syn,r_lex,diversity,n";

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  // Avoid "-0.0000".
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

std::string describe(const Offset& o) {
  return "(" + fixed4(o.sem) + ", " + fixed4(o.syn) + ", " + fixed4(o.lex) + ")";
}

double l1(const Offset& o) { return std::abs(o.sem) + std::abs(o.syn) + std::abs(o.lex); }

// True when row a is preferred over row b.
bool better(const GridRow& a, const GridRow& b) {
  if (a.diversity() != b.diversity()) return a.diversity() > b.diversity();
  if (a.q_tilde.sem != b.q_tilde.sem) return a.q_tilde.sem > b.q_tilde.sem;
  if (l1(a.offset) != l1(b.offset)) return l1(a.offset) < l1(b.offset);
  return a.offset < b.offset;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw LocatedError(ErrorCode::kMalformedRecord, "bad number '" + std::string(field) + "'", line_no);
  }
  return v;
}

}  // namespace

std::vector<DevItem> make_dev_items(const std::vector<Cluster>& clusters, DevSources sources,
                                    std::vector<std::string>* skipped) {
  std::vector<DevItem> items;
  for (const auto& c : clusters) {
    auto parsed = std::make_shared<const ParsedCluster>(ParsedCluster::from(c));
    const std::size_t limit = sources == DevSources::kFirst ? 1 : c.sentences.size();
    for (std::size_t i = 0; i < limit && i < c.sentences.size(); ++i) {
      if (!parsed->trees[i]) {
        if (skipped) skipped->push_back(c.cluster_id + "[" + std::to_string(i) + "]");
        continue;
      }
      items.push_back({parsed, i});
    }
  }
  return items;
}

QualityEstimator::QualityEstimator(GeneratorSpec generator, ReferenceModel model,
                                   std::vector<DevItem> dev, SemanticScorer scorer)
    : generator_(std::move(generator)),
      model_(std::move(model)),
      dev_(std::move(dev)),
      scorer_(std::move(scorer)) {
  const std::size_t n = dev_.size();
  references_.reserve(n);
  for (const auto& item : dev_) references_.push_back(model_.predict(item.sentence()));

  candidates_.resize(n);
  self_quality_.resize(n);
  if (generator_.needs_context()) {
    for (std::size_t i = 0; i < n; ++i) {
      candidates_[i] = score_candidates(*dev_[i].cluster, dev_[i].index, scorer_);
    }
  }
  if (generator_.kind == GeneratorSpec::Kind::kIdentity) {
    std::vector<SentencePairView> pairs;
    for (const auto& item : dev_) pairs.emplace_back(item.sentence(), item.sentence());
    const auto raws = raw_scores(scorer_, pairs);
    for (std::size_t i = 0; i < n; ++i) {
      if (const auto& t = dev_[i].tree()) {
        self_quality_[i] = quality_vector_from_raw(raws[i], dev_[i].sentence(), dev_[i].sentence(), *t, *t);
      }
    }
  }
}

std::optional<QualityVector> QualityEstimator::output_quality(std::size_t item,
                                                              const Generation& g) const {
  const DevItem& d = dev_[item];
  if (g.text == d.sentence() && self_quality_[item]) return self_quality_[item];
  for (const auto& c : candidates_[item]) {
    if (d.cluster->cluster.sentences[c.index] == g.text) return c.quality;
  }
  if (!g.tree || !d.tree()) return std::nullopt;
  return quality_vector(d.sentence(), g.text, *d.tree(), *g.tree, scorer_);
}

ExpectedQuality QualityEstimator::estimate(const Offset& offset) const {
  if (dev_.empty()) throw Error(ErrorCode::kEmptyEvalSet, "dev set is empty");
  if (generator_.kind == GeneratorSpec::Kind::kExternalCommand) return estimate_external(offset);

  std::array<double, 3> sum{};
  ExpectedQuality result;
  for (std::size_t i = 0; i < dev_.size(); ++i) {
    const ControlVector c = apply_offset(references_[i], offset);
    std::optional<QualityVector> q;
    if (generator_.needs_context()) {
      if (!candidates_[i].empty()) {
        q = pick_candidate(generator_, dev_[i].sentence(), candidates_[i], c).quality;
      }
    } else {
      q = output_quality(i, Generation{dev_[i].sentence(), dev_[i].tree()});
    }
    if (!q) {
      ++result.failed;
      continue;
    }
    const auto a = q->as_array();
    for (int k = 0; k < 3; ++k) sum[k] += a[k];
    ++result.n;
  }
  if (result.n == 0) {
    throw Error(ErrorCode::kAllGenerationsFailed, "no generation succeeded at offset " + describe(offset));
  }
  for (auto& v : sum) v /= static_cast<double>(result.n);
  result.mean = QualityVector::from_array(sum);
  return result;
}

ExpectedQuality QualityEstimator::estimate_external(const Offset& offset) const {
  std::vector<std::pair<std::string, ControlVector>> batch;
  batch.reserve(dev_.size());
  for (std::size_t i = 0; i < dev_.size(); ++i) {
    batch.emplace_back(dev_[i].sentence(), apply_offset(references_[i], offset));
  }
  const auto outputs = external_generate(generator_.command, batch);

  // Resolve a parse for every output, then score all of them in one batch.
  std::vector<std::size_t> ok_items;
  std::vector<ParseTree> out_trees;
  std::vector<SentencePairView> pairs;
  ExpectedQuality result;
  for (std::size_t i = 0; i < dev_.size(); ++i) {
    const auto& out = outputs[i];
    std::optional<ParseTree> tree;
    if (!out.text.empty()) {
      if (out.tree) {
        try {
          tree = parse_bracketed(*out.tree);
        } catch (const Error&) {
          tree.reset();
        }
      } else if (auto j = dev_[i].cluster->index_of(out.text)) {
        tree = dev_[i].cluster->trees[*j];
      }
    }
    if (!tree) {
      ++result.failed;
      continue;
    }
    ok_items.push_back(i);
    out_trees.push_back(std::move(*tree));
    pairs.emplace_back(dev_[i].sentence(), out.text);
  }
  if (ok_items.empty()) {
    throw Error(ErrorCode::kAllGenerationsFailed, "no generation succeeded at offset " + describe(offset));
  }
  const auto raws = raw_scores(scorer_, pairs);
  std::array<double, 3> sum{};
  for (std::size_t k = 0; k < ok_items.size(); ++k) {
    const DevItem& d = dev_[ok_items[k]];
    const auto q = quality_vector_from_raw(raws[k], d.sentence(), pairs[k].second, *d.tree(), out_trees[k]);
    const auto a = q.as_array();
    for (int t = 0; t < 3; ++t) sum[t] += a[t];
  }
  result.n = ok_items.size();
  for (auto& v : sum) v /= static_cast<double>(result.n);
  result.mean = QualityVector::from_array(sum);
  return result;
}

std::array<double, 3> QualityEstimator::dimension_std() const {
  std::vector<std::array<double, 3>> values;
  for (std::size_t i = 0; i < dev_.size(); ++i) {
    const auto cands = generator_.needs_context()
                           ? candidates_[i]
                           : score_candidates(*dev_[i].cluster, dev_[i].index, scorer_);
    for (const auto& c : cands) values.push_back(c.quality.as_array());
  }
  std::array<double, 3> out{};
  if (values.empty()) return out;
  for (int d = 0; d < 3; ++d) {
    double mean = 0.0;
    for (const auto& v : values) mean += v[d];
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const auto& v : values) var += (v[d] - mean) * (v[d] - mean);
    out[d] = std::sqrt(var / static_cast<double>(values.size()));
  }
  return out;
}

ExpectedQuality expected_quality(const GeneratorSpec& generator, const ReferenceModel& model,
                                 const std::vector<DevItem>& dev, const Offset& offset,
                                 const SemanticScorer& scorer) {
  return QualityEstimator(generator, model, dev, scorer).estimate(offset);
}

const GridRow* GridResult::find(const Offset& o) const {
  for (const auto& r : rows) {
    if (r.offset == o) return &r;
  }
  return nullptr;
}

std::vector<Offset> GridSpec::offsets() const {
  auto values = [](const Axis& a) {
    if (!(a.step > 0.0) || a.max < a.min) {
      throw Error(ErrorCode::kInvalidArgument, "grid axis needs step > 0 and max >= min");
    }
    std::vector<double> v;
    const auto count = static_cast<long>(std::floor((a.max - a.min) / a.step + 1e-9));
    for (long k = 0; k <= count; ++k) v.push_back(a.min + static_cast<double>(k) * a.step);
    return v;
  };
  const auto vs = values(sem), vy = values(syn), vl = values(lex);
  std::vector<Offset> out;
  out.reserve(vs.size() * vy.size() * vl.size());
  for (double s : vs)
    for (double y : vy)
      for (double l : vl) out.push_back({s, y, l});
  return out;
}

std::array<double, 3> responsiveness(const GridResult& grid, const Offset& o) {
  const GridRow* zero = grid.find(Offset{});
  if (zero == nullptr) {
    throw Error(ErrorCode::kMissingZeroPoint, "grid has no estimate at the zero offset");
  }
  const GridRow* row = grid.find(o);
  if (row == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "offset " + describe(o) + " is not in the grid");
  }
  return {row->q_tilde.sem - zero->q_tilde.sem, row->q_tilde.syn - zero->q_tilde.syn,
          row->q_tilde.lex - zero->q_tilde.lex};
}

std::array<double, 3> in_std_units(const std::array<double, 3>& values,
                                   const std::array<double, 3>& dim_std) {
  std::array<double, 3> out{};
  for (int d = 0; d < 3; ++d) out[d] = dim_std[d] > 0.0 ? values[d] / dim_std[d] : 0.0;
  return out;
}

GridResult grid_search(const QualityEstimator& estimator, const std::vector<Offset>& grid) {
  if (std::find(grid.begin(), grid.end(), Offset{}) == grid.end()) {
    throw Error(ErrorCode::kMissingZeroPoint, "grid must contain the zero offset");
  }
  std::vector<Offset> offsets = grid;
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

  std::vector<std::optional<ExpectedQuality>> estimates(offsets.size());
  std::vector<std::string> failures(offsets.size());
  parallel_for(offsets.size(), [&](std::size_t k) {
    try {
      estimates[k] = estimator.estimate(offsets[k]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAllGenerationsFailed) throw;
      failures[k] = e.what();
    }
  });

  GridResult result;
  const auto zero_it = std::find(offsets.begin(), offsets.end(), Offset{});
  const auto& zero = estimates[static_cast<std::size_t>(zero_it - offsets.begin())];
  if (!zero) {
    throw Error(ErrorCode::kMissingZeroPoint, "zero offset could not be estimated: " +
                                                  failures[static_cast<std::size_t>(zero_it - offsets.begin())]);
  }
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (!estimates[k]) {
      result.dropped.push_back(offsets[k]);
      result.warnings.push_back("dropped offset " + describe(offsets[k]) + ": " + failures[k]);
      continue;
    }
    const ExpectedQuality& e = *estimates[k];
    if (e.failed > 0) {
      result.warnings.push_back("offset " + describe(offsets[k]) + ": " + std::to_string(e.failed) +
                                " generations excluded");
    }
    GridRow row;
    row.offset = offsets[k];
    row.q_tilde = e.mean;
    row.n = e.n;
    row.responsiveness = {e.mean.sem - zero->mean.sem, e.mean.syn - zero->mean.syn,
                          e.mean.lex - zero->mean.lex};
    result.rows.push_back(row);
  }
  result.dim_std = estimator.dimension_std();
  return result;
}

OperationPoint select_operation_point(const GridResult& grid, const SelectionConstraint& constraint) {
  if (grid.rows.empty()) throw Error(ErrorCode::kInvalidArgument, "grid is empty");
  const double floor = constraint.baseline_sem + constraint.min_sem_advantage;
  const GridRow* best = nullptr;
  double max_sem = -std::numeric_limits<double>::infinity();
  for (const auto& row : grid.rows) {
    max_sem = std::max(max_sem, row.q_tilde.sem);
    if (row.q_tilde.sem < floor) continue;
    if (best == nullptr || better(row, *best)) best = &row;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kNoFeasibleOffset,
                "no offset reaches semantic similarity " + fixed4(floor) +
                    "; the best attainable is " + fixed4(max_sem));
  }
  return {best->offset, best->q_tilde, best->diversity()};
}

void write_heatmap_csv(std::ostream& out, const GridResult& grid) {
  out << kHeatmapHeader << '\n';
  std::vector<const GridRow*> rows;
  for (const auto& r : grid.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const GridRow* a, const GridRow* b) { return a->offset < b->offset; });
  for (const GridRow* r : rows) {
    out << fixed4(r->offset.sem) << ',' << fixed4(r->offset.syn) << ',' << fixed4(r->offset.lex) << ','
        << fixed4(r->q_tilde.sem) << ',' << fixed4(r->q_tilde.syn) << ',' << fixed4(r->q_tilde.lex) << ','
        << fixed4(r->responsiveness[0]) << ',' << fixed4(r->responsiveness[1]) << ','
        << fixed4(r->responsiveness[2]) << ',' << fixed4(r->diversity()) << ',' << r->n << '\n';
  }
}

void export_heatmap_csv(const GridResult& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write heatmap '" + path + "'");
  write_heatmap_csv(out, grid);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

GridResult read_heatmap_csv(std::istream& in) {
  GridResult grid;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw Error(ErrorCode::kMalformedRecord, "heatmap CSV is empty");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeatmapHeader) {
    throw LocatedError(ErrorCode::kMalformedRecord, "unexpected heatmap header '" + line + "'", line_no);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 11) {
      throw LocatedError(ErrorCode::kMalformedRecord, "heatmap rows need 11 columns", line_no);
    }
    GridRow row;
    row.offset = {parse_double(f[0], line_no), parse_double(f[1], line_no), parse_double(f[2], line_no)};
    row.q_tilde = {parse_double(f[3], line_no), parse_double(f[4], line_no), parse_double(f[5], line_no)};
    row.responsiveness = {parse_double(f[6], line_no), parse_double(f[7], line_no),
                          parse_double(f[8], line_no)};
    const double n = parse_double(f[10], line_no);
    if (n < 1 || n != std::floor(n)) {
      throw LocatedError(ErrorCode::kMalformedRecord, "sample count must be a positive integer", line_no);
    }
    row.n = static_cast<std::size_t>(n);
    grid.rows.push_back(row);
  }
  return grid;
}

std::string operation_point_to_json(const OperationPoint& point) {
  const nlohmann::json j = {
      {"offset", {{"sem", point.offset.sem}, {"syn", point.offset.syn}, {"lex", point.offset.lex}}},
      {"expected",
       {{"sem", point.expected.sem}, {"syn", point.expected.syn}, {"lex", point.expected.lex}}},
      {"diversity", point.diversity}};
  return j.dump(2);
}

OperationPoint operation_point_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    OperationPoint p;
    const auto& o = j.at("offset");
    p.offset = {o.at("sem").get<double>(), o.at("syn").get<double>(), o.at("lex").get<double>()};
    if (j.contains("expected")) {
      const auto& e = j.at("expected");
      p.expected = {e.at("sem").get<double>(), e.at("syn").get<double>(), e.at("lex").get<double>()};
    }
    p.diversity = j.value("diversity", (p.expected.syn + p.expected.lex) / 2.0);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("bad operation point JSON: ") + e.what());
  }
}

}  // namespace qcpg
