#pragma once

// Shared setup for tests that need a trained reference model or a dev set.

#include <vector>

#include "qcpg/control_selection.hpp"
#include "qcpg/dataset.hpp"
#include "qcpg/reference_predictor.hpp"
#include "qcpg/semantic.hpp"

namespace qcpg::fixtures {

// Ordered in-cluster pairs with parses on both sides, scored with `scorer`.
std::vector<QualitySample> pair_samples(const std::vector<Cluster>& clusters,
                                        const SemanticScorer& scorer);

ReferenceModel fit_on_clusters(const std::vector<Cluster>& clusters, const SemanticScorer& scorer);

// r(s) = q for every sentence.
ReferenceModel constant_model(const QualityVector& q);

}  // namespace qcpg::fixtures
