#pragma once

#include "kakimizu/diagram.hpp"
#include "kakimizu/theta.hpp"

#include <cstdint>
#include <random>

namespace kakimizu {

struct RandomThetaOptions {
    int max_components = 3;
    int max_edges = 4;      ///< edges per component, at least 2
    int max_weight = 3;     ///< total weight per component, at least 1
    int64_t max_facets = 4000;
};

/// Number of maximal simplices of K(t): Π m_i^(k_i - 1) times the multinomial
/// coefficient of the (k_i - 1).
int64_t predicted_facets(const ThetaGraph& t);

/// Uniformly shaped random theta graph; resamples until predicted_facets fits the budget.
ThetaGraph random_theta(std::mt19937_64& rng, const RandomThetaOptions& opt = {});

/// Random connected special alternating diagram with `crossings` crossings,
/// built as the medial diagram of a random 2-connected bipartite plane graph.
/// Parallel edges are allowed, so the result may or may not be prime.
Diagram random_special_alternating(std::mt19937_64& rng, int crossings);

} // namespace kakimizu
