#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcpg/generator.hpp"
#include "qcpg/quality.hpp"
#include "qcpg/reference_predictor.hpp"

namespace qcpg {

// One dev-set source sentence with the cluster it came from.
struct DevItem {
  std::shared_ptr<const ParsedCluster> cluster;
  std::size_t index = 0;

  const std::string& sentence() const { return cluster->cluster.sentences[index]; }
  const std::optional<ParseTree>& tree() const { return cluster->trees[index]; }
};

enum class DevSources { kAll, kFirst };

// Every (or every first) sentence of each cluster that has a parse.
// Sentences without a parse are skipped and reported in `skipped`.
std::vector<DevItem> make_dev_items(const std::vector<Cluster>& clusters,
                                    DevSources sources = DevSources::kAll,
                                    std::vector<std::string>* skipped = nullptr);

struct ExpectedQuality {
  QualityVector mean;
  std::size_t n = 0;       // successful generations
  std::size_t failed = 0;  // excluded from the mean
};

// Holds everything that does not depend on the offset: r(s) per dev item,
// oracle candidates and q(s, s). estimate() is safe to call concurrently for
// built-in scorers and generators.
class QualityEstimator {
 public:
  QualityEstimator(GeneratorSpec generator, ReferenceModel model, std::vector<DevItem> dev,
                   SemanticScorer scorer);

  // Q~(o): mean of q(s, QCPG(s, r(s) + o)) over the dev set, in dev order.
  // Throws AllGenerationsFailed when no item could be generated and scored.
  ExpectedQuality estimate(const Offset& offset) const;

  // Population std per dimension of the ground-truth pair qualities q(s, t)
  // over ordered pairs inside the dev clusters.
  std::array<double, 3> dimension_std() const;

  const std::vector<DevItem>& dev() const { return dev_; }
  const QualityVector& reference(std::size_t item) const { return references_[item]; }

 private:
  std::optional<QualityVector> output_quality(std::size_t item, const Generation& g) const;
  ExpectedQuality estimate_external(const Offset& offset) const;

  GeneratorSpec generator_;
  ReferenceModel model_;
  std::vector<DevItem> dev_;
  SemanticScorer scorer_;
  std::vector<QualityVector> references_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::optional<QualityVector>> self_quality_;
};

ExpectedQuality expected_quality(const GeneratorSpec& generator, const ReferenceModel& model,
                                 const std::vector<DevItem>& dev, const Offset& offset,
                                 const SemanticScorer& scorer);

struct GridRow {
  Offset offset;
  QualityVector q_tilde;
  std::array<double, 3> responsiveness{};
  std::size_t n = 0;

  double diversity() const { return (q_tilde.syn + q_tilde.lex) / 2.0; }
};

struct GridResult {
  std::vector<GridRow> rows;  // sorted lexicographically by offset
  std::array<double, 3> dim_std{};
  std::vector<Offset> dropped;
  std::vector<std::string> warnings;

  const GridRow* find(const Offset& o) const;
};

// Per-dimension inclusive ranges; offsets are the cartesian product.
struct GridSpec {
  struct Axis {
    double min = 0.0;
    double step = 5.0;
    double max = 50.0;
  };
  Axis sem, syn, lex;

  std::vector<Offset> offsets() const;
};

// R(o) = Q~(o) - Q~(0) from rows of the grid. Throws MissingZeroPoint.
std::array<double, 3> responsiveness(const GridResult& grid, const Offset& o);
std::array<double, 3> in_std_units(const std::array<double, 3>& values,
                                   const std::array<double, 3>& dim_std);

// Evaluates every offset (in parallel), drops offsets whose generations all
// failed, and fills responsiveness from the single zero-offset evaluation.
GridResult grid_search(const QualityEstimator& estimator, const std::vector<Offset>& grid);

struct OperationPoint {
  Offset offset;
  QualityVector expected;
  double diversity = 0.0;
};

inline constexpr double kDefaultSemanticMargin = 5.0;

struct SelectionConstraint {
  double min_sem_advantage = kDefaultSemanticMargin;
  double baseline_sem = 0.0;
};

// Highest diversity among rows with q_sem >= baseline + margin; ties go to
// higher q_sem, then smaller L1 offset norm, then the lexicographically
// smaller offset. Throws NoFeasibleOffset.
OperationPoint select_operation_point(const GridResult& grid, const SelectionConstraint& constraint);

void write_heatmap_csv(std::ostream& out, const GridResult& grid);
void export_heatmap_csv(const GridResult& grid, const std::string& path);
GridResult read_heatmap_csv(std::istream& in);

std::string operation_point_to_json(const OperationPoint& point);
OperationPoint operation_point_from_json(const std::string& text);

}  // namespace qcpg
