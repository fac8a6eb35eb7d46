#include "fixtures.hpp"

#include "qcpg/parse_tree.hpp"
#include "qcpg/quality.hpp"

namespace qcpg::fixtures {

std::vector<QualitySample> pair_samples(const std::vector<Cluster>& clusters,
                                        const SemanticScorer& scorer) {
  std::vector<QualitySample> samples;
  for (const auto& c : clusters) {
    if (!c.trees) continue;
    std::vector<ParseTree> trees;
    for (const auto& t : *c.trees) trees.push_back(parse_bracketed(t));
    for (std::size_t i = 0; i < c.sentences.size(); ++i) {
      for (std::size_t j = 0; j < c.sentences.size(); ++j) {
        if (i == j) continue;
        samples.push_back({c.sentences[i], quality_vector(c.sentences[i], c.sentences[j], trees[i],
                                                          trees[j], scorer)});
      }
    }
  }
  return samples;
}

ReferenceModel fit_on_clusters(const std::vector<Cluster>& clusters, const SemanticScorer& scorer) {
  return fit_reference_model(pair_samples(clusters, scorer));
}

ReferenceModel constant_model(const QualityVector& q) {
  ReferenceModel m;
  for (auto name : feature_names()) m.feature_names.emplace_back(name);
  m.feature_mean.assign(kFeatureCount, 0.0);
  m.feature_scale.assign(kFeatureCount, 1.0);
  for (auto& w : m.weights) w.assign(kFeatureCount, 0.0);
  m.bias = q.as_array();
  return m;
}

}  // namespace qcpg::fixtures
