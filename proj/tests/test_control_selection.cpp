#include <functional>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qcpg/control_selection.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/parallel.hpp"
#include "qcpg/random.hpp"
#include "qcpg/synthetic.hpp"

using namespace qcpg;

namespace {

const double kIdentitySem = 100.0 / (1.0 + std::exp(-2.0));

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

std::string csv(const GridResult& g) {
  std::ostringstream out;
  write_heatmap_csv(out, g);
  return out.str();
}

// Direct recomputation of Q~(o) for the retrieval oracle: brute-force argmin
// over members and a fresh quality_vector, no estimator caches.
QualityVector direct_q(const ReferenceModel& model, const std::vector<DevItem>& dev, const Offset& o,
                       const SemanticScorer& scorer) {
  std::array<double, 3> sum{};
  std::size_t n = 0;
  for (const auto& item : dev) {
    const auto& cl = item.cluster->cluster;
    const auto c = apply_offset(model.predict(item.sentence()), o);
    double best = 1e300;
    QualityVector best_q;
    for (std::size_t j = 0; j < cl.sentences.size(); ++j) {
      if (j == item.index) continue;
      const auto q = quality_vector(item.sentence(), cl.sentences[j], *item.tree(),
                                    *item.cluster->trees[j], scorer);
      if (distance(q, c) < best) {
        best = distance(q, c);
        best_q = q;
      }
    }
    const auto a = best_q.as_array();
    for (int d = 0; d < 3; ++d) sum[d] += a[d];
    ++n;
  }
  for (auto& v : sum) v /= static_cast<double>(n);
  return QualityVector::from_array(sum);
}

GridRow row(Offset o, QualityVector q) {
  GridRow r;
  r.offset = o;
  r.q_tilde = q;
  r.n = 1;
  return r;
}

}  // namespace

TEST_CASE("identity generator: constant Q~ and zero responsiveness") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({6, 4, 2});
  const auto dev = make_dev_items(clusters);
  CHECK(dev.size() == 24);
  QualityEstimator est(GeneratorSpec::identity(), fixtures::fit_on_clusters(clusters, scorer), dev,
                       scorer);
  const auto e = est.estimate({10, 20, 30});
  CHECK(e.n == 24);
  CHECK(e.mean.sem == doctest::Approx(kIdentitySem));
  CHECK(e.mean.syn == 0.0);
  CHECK(e.mean.lex == 0.0);

  const auto grid = grid_search(est, GridSpec{{0, 25, 50}, {0, 25, 50}, {0, 25, 50}}.offsets());
  CHECK(grid.rows.size() == 27);
  for (const auto& r : grid.rows) {
    CHECK(r.q_tilde == grid.rows.front().q_tilde);
    CHECK(r.responsiveness == std::array<double, 3>{0, 0, 0});
  }
}

TEST_CASE("single-sentence dev set") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({1, 5, 9});
  const auto dev = make_dev_items(clusters, DevSources::kFirst);
  REQUIRE(dev.size() == 1);
  const auto model = fixtures::constant_model({60, 30, 40});
  const auto e = expected_quality(GeneratorSpec::retrieval_oracle(), model, dev, {}, scorer);
  CHECK(e.n == 1);
  const auto g = generate(GeneratorSpec::retrieval_oracle(), dev[0].sentence(), {60, 30, 40},
                          dev[0].cluster.get(), scorer);
  const auto q = quality_vector(dev[0].sentence(), g.text, *dev[0].tree(), *g.tree, scorer);
  CHECK(e.mean == q);
}

TEST_CASE("retrieval oracle grid matches direct recomputation") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({8, 5, 4});
  const auto model = fixtures::fit_on_clusters(clusters, scorer);
  auto dev = make_dev_items(clusters, DevSources::kFirst);
  dev.resize(5);
  QualityEstimator est(GeneratorSpec::retrieval_oracle(), model, dev, scorer);
  const auto grid = grid_search(est, GridSpec{{0, 5, 5}, {0, 5, 5}, {0, 5, 5}}.offsets());
  REQUIRE(grid.rows.size() == 8);
  CHECK(grid.rows.front().offset == Offset{});
  CHECK(grid.rows.front().responsiveness == std::array<double, 3>{0, 0, 0});
  const auto zero = direct_q(model, dev, {}, scorer);
  for (const auto& r : grid.rows) {
    const auto q = direct_q(model, dev, r.offset, scorer);
    CHECK(r.q_tilde.sem == doctest::Approx(q.sem).epsilon(1e-12));
    CHECK(r.q_tilde.syn == doctest::Approx(q.syn).epsilon(1e-12));
    CHECK(r.q_tilde.lex == doctest::Approx(q.lex).epsilon(1e-12));
    CHECK(r.responsiveness[1] == doctest::Approx(q.syn - zero.syn).epsilon(1e-12));
    CHECK(r.responsiveness[2] == doctest::Approx(q.lex - zero.lex).epsilon(1e-12));
    CHECK(r.n == 5);
    const auto rr = responsiveness(grid, r.offset);
    CHECK(rr == r.responsiveness);
  }
  for (std::size_t k = 1; k < grid.rows.size(); ++k) {
    CHECK(grid.rows[k - 1].offset < grid.rows[k].offset);
  }
}

TEST_CASE("grid CSV is deterministic across runs and thread counts") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({10, 5, 12});
  const auto model = fixtures::fit_on_clusters(clusters, scorer);
  const auto offsets = GridSpec{{0, 10, 20}, {0, 10, 30}, {0, 10, 30}}.offsets();
  auto run = [&](const char* threads) {
    setenv("QCPG_KIT_THREADS", threads, 1);
    QualityEstimator est(GeneratorSpec::noisy_oracle(5.0, 3), model, make_dev_items(clusters), scorer);
    return csv(grid_search(est, offsets));
  };
  const auto a = run("1");
  CHECK(a == run("1"));
  CHECK(a == run("4"));
  unsetenv("QCPG_KIT_THREADS");
}

TEST_CASE("dimension_std is the population std of dev pair qualities") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({5, 4, 6});
  const auto samples = fixtures::pair_samples(clusters, scorer);
  QualityEstimator est(GeneratorSpec::identity(), fixtures::constant_model({50, 50, 50}),
                       make_dev_items(clusters), scorer);
  const auto sd = est.dimension_std();
  for (int d = 0; d < 3; ++d) {
    double mean = 0.0;
    for (const auto& s : samples) mean += s.quality.as_array()[d];
    mean /= samples.size();
    double var = 0.0;
    for (const auto& s : samples) var += std::pow(s.quality.as_array()[d] - mean, 2);
    CHECK(sd[d] == doctest::Approx(std::sqrt(var / samples.size())).epsilon(1e-12));
  }
  CHECK(in_std_units({sd[0], 2 * sd[1], 0.0}, sd) == std::array<double, 3>{1.0, 2.0, 0.0});
}

TEST_CASE("failures, drops and missing zero point") {
  const auto scorer = SemanticScorer::builtin();
  std::vector<Cluster> singles = {{"a", {"lonely"}, std::vector<std::string>{"(S (NN lonely))"}}};
  const auto model = fixtures::constant_model({50, 50, 50});
  CHECK(code_of([&] {
          expected_quality(GeneratorSpec::retrieval_oracle(), model, make_dev_items(singles), {}, scorer);
        }) == ErrorCode::kAllGenerationsFailed);
  CHECK(code_of([&] {
          QualityEstimator est(GeneratorSpec::retrieval_oracle(), model, make_dev_items(singles), scorer);
          grid_search(est, {Offset{}});
        }) == ErrorCode::kMissingZeroPoint);
  CHECK(code_of([&] {
          QualityEstimator est(GeneratorSpec::identity(), model, make_dev_items(singles), scorer);
          grid_search(est, {Offset{5, 0, 0}});
        }) == ErrorCode::kMissingZeroPoint);
  CHECK(code_of([&] { responsiveness(GridResult{{row({5, 0, 0}, {})}}, {5, 0, 0}); }) ==
        ErrorCode::kMissingZeroPoint);

  // Mixed dev set: the singleton fails and is excluded from the mean.
  auto mixed = synthetic_corpus({2, 3, 1});
  mixed.push_back(singles[0]);
  std::vector<std::string> skipped;
  mixed.push_back({"nt", {"no tree"}, std::vector<std::string>{""}});
  const auto dev = make_dev_items(mixed, DevSources::kAll, &skipped);
  CHECK(skipped == std::vector<std::string>{"nt[0]"});
  const auto e = expected_quality(GeneratorSpec::retrieval_oracle(), model, dev, {}, scorer);
  CHECK(e.n == 6);
  CHECK(e.failed == 1);
  QualityEstimator est(GeneratorSpec::retrieval_oracle(), model, dev, scorer);
  const auto grid = grid_search(est, {Offset{}, Offset{0, 5, 0}});
  CHECK(grid.rows.size() == 2);
  CHECK(grid.warnings.size() == 2);
}

TEST_CASE("external generator inside the estimator") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({4, 3, 5});
  const auto model = fixtures::constant_model({50, 50, 50});
  const auto dev = make_dev_items(clusters);
  const std::string echo = "sed -E 's/^<sem_[0-9]+> <syn_[0-9]+> <lex_[0-9]+> //'";
  const auto e = expected_quality(GeneratorSpec::external(echo), model, dev, {5, 5, 5}, scorer);
  CHECK(e.n == dev.size());
  CHECK(e.mean.sem == doctest::Approx(kIdentitySem));
  CHECK(e.mean.syn == 0.0);
  CHECK(e.mean.lex == 0.0);
  // Unknown outputs without a parse are failures.
  CHECK(code_of([&] {
          expected_quality(GeneratorSpec::external("awk '{print \"novel words\"}'"), model, dev, {}, scorer);
        }) == ErrorCode::kAllGenerationsFailed);
  const auto parsed = expected_quality(
      GeneratorSpec::external("awk '{print \"novel words\\t(S (NP (JJ novel) (NNS words)))\"}'"), model,
      dev, {}, scorer);
  CHECK(parsed.n == dev.size());
  CHECK(parsed.mean.lex > 50.0);
}

TEST_CASE("select_operation_point") {
  const SelectionConstraint paper_default;
  CHECK(paper_default.min_sem_advantage == 5.0);

  GridResult one{{row({0, 0, 0}, {80, 10, 20})}};
  const auto p = select_operation_point(one, {5.0, 70.0});
  CHECK(p.offset == Offset{});
  CHECK(p.diversity == 15.0);
  CHECK(p.expected == QualityVector{80, 10, 20});

  // The diversity argmax violates the constraint; the runner-up wins.
  GridResult three{{row({0, 0, 0}, {85, 10, 10}), row({0, 0, 5}, {80, 20, 20}),
                    row({0, 5, 5}, {70, 40, 40})}};
  CHECK(select_operation_point(three, {5.0, 74.0}).offset == Offset{0, 0, 5});
  CHECK(select_operation_point(three, {5.0, 60.0}).offset == Offset{0, 5, 5});
  CHECK(select_operation_point(three, {5.0, 80.0}).offset == Offset{});
  try {
    select_operation_point(three, {5.0, 81.0});
    FAIL("expected NoFeasibleOffset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoFeasibleOffset);
    CHECK(std::string(e.what()).find("85.0000") != std::string::npos);
  }

  // Tie-breaks: diversity, then sem, then L1, then lexicographic.
  GridResult ties{{row({0, 10, 0}, {70, 30, 30}), row({0, 0, 5}, {70, 30, 30}),
                   row({5, 0, 0}, {70, 30, 30}), row({0, 5, 5}, {75, 40, 20})}};
  CHECK(select_operation_point(ties, {0.0, 0.0}).offset == Offset{0, 5, 5});
  ties.rows.pop_back();
  CHECK(select_operation_point(ties, {0.0, 0.0}).offset == Offset{0, 0, 5});
  CHECK(code_of([] { select_operation_point(GridResult{}, {}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("heatmap CSV") {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({6, 5, 3});
  QualityEstimator est(GeneratorSpec::retrieval_oracle(), fixtures::fit_on_clusters(clusters, scorer),
                       make_dev_items(clusters), scorer);
  const auto grid = grid_search(est, GridSpec{{0, 10, 10}, {0, 10, 20}, {0, 10, 20}}.offsets());
  const auto text = csv(grid);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "o_sem,o_syn,o_lex,q_sem,q_syn,q_lex,r_sem,r_syn,r_lex,diversity,n");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<double> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(std::stod(cell));
    REQUIRE(f.size() == 11);
    CHECK(std::abs(f[9] - (f[4] + f[5]) / 2.0) <= 1e-4);
    if (f[0] == 0 && f[1] == 0 && f[2] == 0) {
      CHECK(f[6] == 0.0);
      CHECK(f[7] == 0.0);
      CHECK(f[8] == 0.0);
    }
  }
  CHECK(rows == 18);

  std::istringstream back(text);
  const auto parsed = read_heatmap_csv(back);
  CHECK(parsed.rows.size() == grid.rows.size());
  CHECK(select_operation_point(parsed, {5.0, 40.0}).offset ==
        select_operation_point(grid, {5.0, 40.0}).offset);

  std::istringstream bad_header("a,b\n");
  CHECK(code_of([&] { read_heatmap_csv(bad_header); }) == ErrorCode::kMalformedRecord);

  OperationPoint op{{5, 10, 15}, {70, 30, 40}, 35};
  const auto op2 = operation_point_from_json(operation_point_to_json(op));
  CHECK(op2.offset == op.offset);
  CHECK(op2.expected == op.expected);
  CHECK(op2.diversity == op.diversity);
}
