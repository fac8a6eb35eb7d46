// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcpg/control_selection.hpp"
#include "qcpg/dataset.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/evaluation.hpp"
#include "qcpg/lexical.hpp"
#include "qcpg/parallel.hpp"
#include "qcpg/quality.hpp"
#include "qcpg/random.hpp"
#include "qcpg/reference_predictor.hpp"
#include "qcpg/synthetic.hpp"
#include "qcpg/tree_edit_distance.hpp"

using namespace qcpg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Exhaustive TED oracle equivalence, trees <= 6 nodes, 3 labels.
//
// Every valid mapping extends to a maximal one at lower cost (each added pair
// saves 2 and costs at most 1 relabel), so the minimum over all mappings is the
// minimum over maximal mappings. Maximal mappings per shape pair are found by
// the brute-force enumerator and stored as bitmasks over the 6x6 cell grid;
// for a labeling, cost = na + nb - max_M(|M| + |M & EQ|) with EQ the cells
// whose labels agree.
//
// Labelings of the left tree are restricted to canonical form (labels numbered
// by first appearance). The implementation interns labels and only compares
// them for equality, so renaming the alphabet on both sides maps every pair to
// one with a canonical left tree; all right labelings are kept.

struct Shape {
  std::vector<int> parent;
  int n = 0;
};

struct ShapePairMappings {
  std::vector<std::uint64_t> masks;  // bit i*6+j
};

std::uint64_t cell(int i, int j) { return std::uint64_t{1} << (i * 6 + j); }

std::vector<std::vector<int>> labelings(int n, bool canonical) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  std::function<void(int, int)> go = [&](int k, int used) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    const int limit = canonical ? std::min(3, used + 1) : 3;
    for (int l = 0; l < limit; ++l) {
      cur[k] = l;
      go(k + 1, std::max(used, l + 1));
    }
  };
  go(0, 0);
  return out;
}

Outcome criterion_ted() {
  const auto start = Clock::now();
  std::vector<Shape> shapes;
  for (int n = 1; n <= 6; ++n) {
    for (auto& p : oracle::tree_shapes(n)) shapes.push_back({p, n});
  }
  const std::size_t ns = shapes.size();

  // Maximal mappings per ordered shape pair.
  std::vector<ShapePairMappings> maps(ns * ns);
  parallel_for(ns * ns, [&](std::size_t k) {
    const Shape& a = shapes[k / ns];
    const Shape& b = shapes[k % ns];
    oracle::PreorderTree ta{a.parent, std::vector<int>(a.n, 0)};
    oracle::PreorderTree tb{b.parent, std::vector<int>(b.n, 0)};
    std::unordered_set<std::uint64_t> all;
    for (const auto& m : oracle::valid_mappings(ta, tb, false)) {
      std::uint64_t mask = 0;
      for (auto [i, j] : m) mask |= cell(i, j);
      all.insert(mask);
    }
    // Valid mappings are closed under subsets, so a mapping is maximal iff no
    // single added cell gives another valid mapping.
    for (std::uint64_t m : all) {
      bool maximal = true;
      for (int c = 0; c < a.n * 6 && maximal; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if ((c % 6) < b.n && !(m & bit) && all.count(m | bit)) maximal = false;
      }
      if (maximal) maps[k].masks.push_back(m);
    }
  });

  // outer[rows][cols]: cells (i, j) with i in rows and j in cols.
  static std::uint64_t outer[64][64];
  for (int r = 0; r < 64; ++r) {
    for (int c = 0; c < 64; ++c) {
      std::uint64_t m = 0;
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          if ((r >> i & 1) && (c >> j & 1)) m |= cell(i, j);
        }
      }
      outer[r][c] = m;
    }
  }

  struct Labeled {
    std::size_t shape;
    std::vector<int> labels;   // preorder
    std::array<int, 3> rows;   // preorder positions per label, as bitmasks
    PostorderTree post;
  };
  auto build = [&](bool canonical) {
    std::vector<Labeled> out;
    for (std::size_t s = 0; s < ns; ++s) {
      for (auto& l : labelings(shapes[s].n, canonical)) {
        Labeled t{s, l, {0, 0, 0}, PostorderTree::from_preorder(shapes[s].parent, l)};
        for (int i = 0; i < shapes[s].n; ++i) t.rows[l[i]] |= 1 << i;
        out.push_back(std::move(t));
      }
    }
    return out;
  };
  const auto left = build(true);
  const auto right = build(false);

  std::atomic<std::uint64_t> compared{0}, mismatches{0};
  std::mutex first_mutex;
  std::string first_mismatch;
  parallel_for(left.size(), [&](std::size_t li) {
    thread_local TreeEditDistance ted;
    const Labeled& a = left[li];
    const int na = shapes[a.shape].n;
    std::uint64_t bad = 0;
    for (const Labeled& b : right) {
      const int nb = shapes[b.shape].n;
      const std::uint64_t eq = outer[a.rows[0]][b.rows[0]] | outer[a.rows[1]][b.rows[1]] |
                               outer[a.rows[2]][b.rows[2]];
      int best = 0;
      for (std::uint64_t m : maps[a.shape * ns + b.shape].masks) {
        best = std::max(best, std::popcount(m) + std::popcount(m & eq));
      }
      const int expected = na + nb - best;
      const double got = ted(a.post, b.post);
      if (got != expected) {
        ++bad;
        std::lock_guard lock(first_mutex);
        if (first_mismatch.empty()) {
          first_mismatch = format("left %zu right shape %zu: got %g expected %d", li, b.shape, got, expected);
        }
      }
    }
    compared += right.size();
    mismatches += bad;
  });

  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && elapsed < 60.0;
  o.detail = format("%llu labeled pairs (%zu canonical left x %zu right trees, %zu shapes), %llu mismatches, "
                    "%.1f s on %zu thread(s), %.0f ns per pair including the oracle (limit 60 s)",
                    static_cast<unsigned long long>(compared.load()), left.size(), right.size(), ns,
                    static_cast<unsigned long long>(mismatches.load()), elapsed, thread_count(),
                    1e9 * elapsed * static_cast<double>(thread_count()) / static_cast<double>(compared.load()));
  if (!first_mismatch.empty()) o.detail += "; first: " + first_mismatch;
  return o;
}

// ---------------------------------------------------------------------------
// 2. Assignment oracle on 200 seeded bag pairs.

Outcome criterion_assignment() {
  CounterRng rng(2024, RngStream::kSynthetic);
  static const char32_t letters[] = U"abcdeçñ";
  auto word = [&] {
    std::u32string w;
    for (std::uint64_t k = 0, n = 1 + rng.below(6); k < n; ++k) w.push_back(letters[rng.below(7)]);
    return w;
  };
  int bad = 0;
  for (int c = 0; c < 200; ++c) {
    WordBag a, b;
    for (std::uint64_t k = 0, n = rng.below(7); k < n; ++k) a.words.push_back(word());
    for (std::uint64_t k = 0, n = rng.below(7); k < n; ++k) b.words.push_back(word());
    for (const auto& w : a.words) a.total_chars += w.size();
    for (const auto& w : b.words) b.total_chars += w.size();
    if (bag_assignment_cost(a, b) != oracle::brute_force_bag_cost(a.words, b.words)) ++bad;
  }
  return {bad == 0, format("200 cases, %d mismatches", bad)};
}

// ---------------------------------------------------------------------------
// 3. Quantization bijection.

Outcome criterion_quantization() {
  int bad_roundtrip = 0, bad_idem = 0, bad_mono = 0;
  for (int s = 0; s < 100; s += 5) {
    for (int y = 0; y < 100; y += 5) {
      for (int l = 0; l < 100; l += 5) {
        const ControlVector c{s, y, l};
        const auto [back, rest] = decode_control(prepend_control("x", c));
        if (!(back == c) || rest != "x") ++bad_roundtrip;
      }
    }
  }
  int prev = -1;
  for (int k = 0; k <= 1000; ++k) {
    const int q = quantize(k / 10.0);
    if (quantize(q) != q) ++bad_idem;
    if (q < prev) ++bad_mono;
    prev = q;
  }
  return {bad_roundtrip + bad_idem + bad_mono == 0,
          format("8000 round trips (%d bad), 1001 samples: %d non-idempotent, %d monotonicity breaks",
                 bad_roundtrip, bad_idem, bad_mono)};
}

// ---------------------------------------------------------------------------
// 4. Leak-freeness over 1000 randomized splits.

std::string serialize(const DatasetSplit& s) {
  std::ostringstream out;
  for (const auto* part : {&s.train, &s.dev, &s.test}) {
    write_pairs_tsv(out, *part);
    out << "--\n";
  }
  return out.str();
}

Outcome criterion_leaks() {
  int overlaps = 0, nondeterministic = 0, errors = 0;
  for (int run = 0; run < 1000; ++run) {
    CounterRng rng(static_cast<std::uint64_t>(run), RngStream::kSynthetic, 77);
    const std::size_t count = 10 + rng.below(191);
    std::vector<Cluster> clusters;
    std::size_t total = 0;
    for (std::size_t c = 0; c < count; ++c) {
      Cluster cl;
      cl.cluster_id = "r" + std::to_string(run) + "c" + std::to_string(c);
      const auto size = 1 + rng.below(6);
      for (std::uint64_t k = 0; k < size; ++k) cl.sentences.push_back("s" + std::to_string(c) + "_" + std::to_string(k));
      total += pair_count(cl, PairMode::kAllUnordered);
      clusters.push_back(std::move(cl));
    }
    const SplitSizes sizes{total / 3, total / 10, total / 10};
    const std::uint64_t seed = rng.next();
    try {
      const auto a = split_clusters(clusters, sizes, seed);
      const auto b = split_clusters(clusters, sizes, seed);
      if (serialize(a) != serialize(b) || a.train_clusters != b.train_clusters) ++nondeterministic;
      std::set<std::string> seen;
      for (const auto* ids : {&a.train_clusters, &a.dev_clusters, &a.test_clusters}) {
        for (const auto& id : *ids) {
          if (!seen.insert(id).second) ++overlaps;
        }
      }
      // Pair-level check, independent of the id lists.
      std::set<std::string> train_ids, other_ids;
      for (const auto& p : a.train) train_ids.insert(p.cluster_id);
      for (const auto* part : {&a.dev, &a.test}) {
        for (const auto& p : *part) {
          if (train_ids.count(p.cluster_id)) ++overlaps;
        }
      }
      std::set<std::string> dev_ids;
      for (const auto& p : a.dev) dev_ids.insert(p.cluster_id);
      for (const auto& p : a.test) {
        if (dev_ids.count(p.cluster_id)) ++overlaps;
      }
    } catch (const Error& e) {
      ++errors;
    }
  }
  return {overlaps == 0 && nondeterministic == 0 && errors == 0,
          format("1000 runs: %d overlapping cluster ids, %d non-identical reruns, %d split errors", overlaps,
                 nondeterministic, errors)};
}

// ---------------------------------------------------------------------------
// 5. Responsiveness definition.

Outcome criterion_responsiveness() {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({20, 5, 42});
  const auto model = fixtures::fit_on_clusters(clusters, scorer);
  const auto dev = make_dev_items(clusters);
  const auto full = GridSpec{}.offsets();
  int nonzero_at_origin = 0, identity_nonzero = 0;
  for (const auto& gen : {GeneratorSpec::retrieval_oracle(), GeneratorSpec::noisy_oracle(8.0, 42)}) {
    QualityEstimator est(gen, model, dev, scorer);
    const auto grid = grid_search(est, GridSpec{{0, 10, 50}, {0, 10, 50}, {0, 10, 50}}.offsets());
    const GridRow* z = grid.find(Offset{});
    if (z == nullptr || z->responsiveness != std::array<double, 3>{0, 0, 0} ||
        responsiveness(grid, Offset{}) != std::array<double, 3>{0, 0, 0}) {
      ++nonzero_at_origin;
    }
  }
  QualityEstimator identity(GeneratorSpec::identity(), model, dev, scorer);
  const auto grid = grid_search(identity, full);
  for (const auto& r : grid.rows) {
    if (r.responsiveness != std::array<double, 3>{0, 0, 0}) ++identity_nonzero;
  }
  const bool ok = nonzero_at_origin == 0 && identity_nonzero == 0 && grid.rows.size() == 1331;
  return {ok, format("R(0) exact for retrieval and noisy oracles (%d violations); identity over %zu offsets: "
                     "%d nonzero R",
                     nonzero_at_origin, grid.rows.size(), identity_nonzero)};
}

// ---------------------------------------------------------------------------
// 6. Qualitative monotonicity with the retrieval oracle.

Outcome criterion_monotonicity() {
  const auto start = Clock::now();
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({50, 6, 42});
  const auto model = fixtures::fit_on_clusters(clusters, scorer);
  QualityEstimator est(GeneratorSpec::retrieval_oracle(), model, make_dev_items(clusters), scorer);
  const auto sd = est.dimension_std();

  bool ok = true;
  std::string detail;
  for (int dim : {2, 1}) {
    std::vector<Offset> offsets;
    for (int k = 0; k <= 4; ++k) {
      Offset o;
      (dim == 1 ? o.syn : o.lex) = 0.5 * k * sd[dim];
      offsets.push_back(o);
    }
    const auto grid = grid_search(est, offsets);
    std::vector<double> r;
    for (const auto& o : offsets) r.push_back(responsiveness(grid, o)[dim]);
    int inversions = 0;
    bool big = false;
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r[k] < r[k - 1]) {
        ++inversions;
        if (r[k - 1] - r[k] >= 0.5) big = true;
      }
    }
    const bool dim_ok = inversions <= 1 && !big;
    ok = ok && dim_ok;
    detail += format("%s (sigma %.2f): R =", dim == 1 ? "syn" : "lex", sd[dim]);
    for (double v : r) detail += format(" %.2f", v);
    detail += format(", %d inversion(s); ", inversions);
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 120.0;
  detail += format("%.1f s (limit 120 s)", elapsed);
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 7. Operation point selection against an exhaustive scan.

Outcome criterion_selection() {
  CounterRng rng(7, RngStream::kSynthetic);
  int disagreements = 0, infeasible = 0;
  for (int g = 0; g < 100; ++g) {
    GridResult grid;
    std::set<std::tuple<int, int, int>> used;
    const auto rows = 1 + rng.below(60);
    while (grid.rows.size() < rows) {
      const int s = static_cast<int>(rng.below(11)) * 5, y = static_cast<int>(rng.below(11)) * 5,
                l = static_cast<int>(rng.below(11)) * 5;
      if (!used.insert({s, y, l}).second) continue;
      GridRow r;
      r.offset = {double(s), double(y), double(l)};
      // Coarse values so that ties on every key occur.
      r.q_tilde = {60.0 + 2.5 * static_cast<double>(rng.below(12)), 5.0 * static_cast<double>(rng.below(6)),
                   5.0 * static_cast<double>(rng.below(6))};
      r.n = 1;
      grid.rows.push_back(r);
    }
    std::sort(grid.rows.begin(), grid.rows.end(), [](const GridRow& a, const GridRow& b) { return a.offset < b.offset; });
    const SelectionConstraint constraint{5.0, 55.0 + 2.5 * static_cast<double>(rng.below(14))};

    // Exhaustive: sort feasible rows by the full preference key.
    std::vector<GridRow> feasible;
    double max_sem = -1.0;
    for (const auto& r : grid.rows) {
      max_sem = std::max(max_sem, r.q_tilde.sem);
      if (r.q_tilde.sem >= constraint.baseline_sem + constraint.min_sem_advantage) feasible.push_back(r);
    }
    auto key = [](const GridRow& r) {
      const double div = (r.q_tilde.syn + r.q_tilde.lex) / 2.0;
      const double l1 = r.offset.sem + r.offset.syn + r.offset.lex;
      return std::make_tuple(-div, -r.q_tilde.sem, l1, r.offset.sem, r.offset.syn, r.offset.lex);
    };
    std::sort(feasible.begin(), feasible.end(), [&](const GridRow& a, const GridRow& b) { return key(a) < key(b); });
    try {
      const auto p = select_operation_point(grid, constraint);
      if (feasible.empty() || !(p.offset == feasible.front().offset)) ++disagreements;
    } catch (const Error& e) {
      ++infeasible;
      const bool right_error = e.code() == ErrorCode::kNoFeasibleOffset &&
                               std::string(e.what()).find(format("%.4f", max_sem)) != std::string::npos;
      if (!feasible.empty() || !right_error) ++disagreements;
    }
  }
  return {disagreements == 0 && infeasible > 0 && infeasible < 100,
          format("100 random grids (%d infeasible), %d disagreements; default margin %.0f", infeasible, disagreements,
                 SelectionConstraint{}.min_sem_advantage)};
}

// ---------------------------------------------------------------------------
// 8. Self-BLEU extremes.

Outcome criterion_self_bleu() {
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({40, 4, 8});
  std::vector<std::string> sources, disjoint;
  std::vector<std::optional<ParseTree>> trees;
  for (const auto& c : clusters) {
    sources.push_back(c.sentences[0]);
    trees.push_back(parse_bracketed((*c.trees)[0]));
    std::string out;
    std::istringstream words(c.sentences[0]);
    std::string w;
    while (words >> w) out += (out.empty() ? "" : " ") + std::string("zq") + std::to_string(out.size());
    disjoint.push_back(out);
  }
  std::vector<std::optional<ParseTree>> out_trees(sources.size(), parse_bracketed("(FRAG (X zq))"));
  std::vector<std::string> identity_outputs;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    identity_outputs.push_back(
        generate(GeneratorSpec::identity(), sources[i], {}, nullptr, scorer).text);
  }
  const auto report = evaluate_systems({{"identity", identity_outputs, trees}, {"disjoint", disjoint, out_trees}},
                                       sources, trees, std::nullopt, scorer);
  std::ostringstream tsv;
  write_report_tsv(tsv, report);
  const std::string id = format("%.2f", report.rows[0].self_bleu);
  const std::string dj = format("%.2f", report.rows[1].self_bleu);
  return {id == "100.00" && dj == "0.00" && tsv.str().find("\t100.00\t-\t40\n") != std::string::npos,
          "identity " + id + ", unigram-disjoint " + dj};
}

// ---------------------------------------------------------------------------
// 9. Reference predictor sanity on noisy linear targets.

Outcome criterion_qp() {
  CounterRng rng(9, RngStream::kSynthetic);
  static const char* words[] = {"the", "Cat", "sat", "on", "a", "mat", "42", "Paris", "quickly", "is",
                                "it", "big", "x", "1999", "Über", "well,", "why", "no", "dogs", "run"};
  auto sentence = [&] {
    std::string s;
    for (std::uint64_t k = 0, n = 1 + rng.below(14); k < n; ++k) s += (k ? " " : "") + std::string(words[rng.below(20)]);
    if (rng.below(3) == 0) s += "?";
    return s;
  };
  const std::array<std::array<double, kFeatureCount>, 3> w = {{
      {-1.5, 0.0, 1.0, 0.5, 2.0, -1.0, 10.0, -4.0},
      {2.0, -0.1, 0.0, 0.0, -1.0, 3.0, -8.0, 5.0},
      {1.0, 0.2, -2.0, 1.5, 0.0, 0.0, 6.0, 0.0},
  }};
  const std::array<double, 3> b = {75.0, 15.0, 20.0};
  auto make = [&](int n) {
    std::vector<QualitySample> out;
    for (int i = 0; i < n; ++i) {
      const auto s = sentence();
      const auto f = featurize(s);
      std::array<double, 3> q = b;
      for (int d = 0; d < 3; ++d) {
        for (std::size_t k = 0; k < kFeatureCount; ++k) q[d] += w[d][k] * f[k];
        q[d] += 2.0 * rng.normal();
      }
      out.push_back({s, QualityVector::from_array(q)});
    }
    return out;
  };
  const auto train = make(500);
  const auto dev = make(200);
  const auto model = fit_reference_model(train);
  const auto again = fit_reference_model(train);
  const auto mse = evaluate_mse(model, dev);
  const auto base = constant_predictor_mse(mean_quality(train), dev);
  bool ok = model_to_json(model) == model_to_json(again);
  std::string detail = "dev MSE vs mean predictor:";
  for (int d = 0; d < 3; ++d) {
    ok = ok && mse[d] <= 0.5 * base[d];
    detail += format(" %.2f/%.2f", mse[d], base[d]);
  }
  detail += ok ? "; refit identical" : "";
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 10. Full grid end to end.

Outcome criterion_full_grid() {
  const auto start = Clock::now();
  const auto scorer = SemanticScorer::builtin();
  const auto clusters = synthetic_corpus({50, 4, 10});
  const auto model = fixtures::fit_on_clusters(clusters, scorer);
  const auto dev = make_dev_items(clusters);
  QualityEstimator est(GeneratorSpec::retrieval_oracle(), model, dev, scorer);
  const auto grid = grid_search(est, GridSpec{}.offsets());
  std::ostringstream csv;
  write_heatmap_csv(csv, grid);
  const double elapsed = seconds_since(start);

  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0, bad = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<double> f;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) f.push_back(std::stod(c));
    // Each printed value is rounded to 4 decimals.
    if (f.size() != 11 || std::abs(f[9] - (f[4] + f[5]) / 2.0) > 1e-4 + 1e-9) ++bad;
  }
  return {dev.size() == 200 && rows == 1331 && bad == 0 && elapsed < 300.0,
          format("%zu dev sentences, %zu rows, %zu diversity mismatches, %.1f s (limit 300 s)", dev.size(), rows, bad,
                 elapsed)};
}

// ---------------------------------------------------------------------------
// 11. Kendall tau-b against pair enumeration.

Outcome criterion_kendall() {
  std::size_t cases = 0, bad = 0;
  double worst = 0.0;
  auto check = [&](const std::vector<double>& x, const std::vector<double>& y) {
    ++cases;
    bool lib_tied = false, ref_tied = false;
    double lib = 0, ref = 0;
    try {
      lib = kendall_tau(x, y);
    } catch (const Error& e) {
      lib_tied = e.code() == ErrorCode::kAllTied;
    }
    try {
      ref = oracle::kendall_tau_b(x, y);
    } catch (const std::domain_error&) {
      ref_tied = true;
    }
    if (lib_tied != ref_tied) {
      ++bad;
    } else if (!lib_tied) {
      worst = std::max(worst, std::abs(lib - ref));
      if (std::abs(lib - ref) > 1e-12) ++bad;
    }
  };
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> x(n);
    std::iota(x.begin(), x.end(), 1.0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i) y[i] = perm[i] + 1.0;
      check(x, y);
      // Injected ties: merge adjacent ranks on one or both sides.
      for (int t = 1; t < n; ++t) {
        auto ty = y, tx = x;
        for (auto& v : ty) v = std::floor(v / (t + 1));
        for (auto& v : tx) v = std::floor(v / 2.0);
        check(x, ty);
        check(tx, y);
        check(tx, ty);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {bad == 0, format("%zu cases up to length 6, %zu mismatches, max |diff| %.2e", cases, bad, worst)};
}

}  // namespace

int main() {
  std::printf("qcpg-kit acceptance (%zu worker thread(s))\n", thread_count());
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"TED oracle equivalence, all labeled trees <= 6 nodes", criterion_ted},
      {"assignment oracle equivalence", criterion_assignment},
      {"quantization bijection", criterion_quantization},
      {"split leak-freeness and determinism", criterion_leaks},
      {"responsiveness definition", criterion_responsiveness},
      {"monotone responsiveness with the retrieval oracle", criterion_monotonicity},
      {"operation point selection", criterion_selection},
      {"Self-BLEU extremes", criterion_self_bleu},
      {"reference predictor sanity", criterion_qp},
      {"full 1331-offset grid", criterion_full_grid},
      {"Kendall tau-b", criterion_kendall},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(static_cast<int>(i + 1), criteria[i].first, o);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
