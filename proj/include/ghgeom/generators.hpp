#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"

namespace ghgeom {

/// Points drawn uniformly in [0, scale]^dim with pairwise Euclidean
/// distances; rejection keeps every pair at least min_sep apart.
FiniteMetricSpace random_euclidean_space(int n, std::uint64_t seed, double scale = 10.0,
                                         int dim = 3, double min_sep = 0.05,
                                         double eps = kDefaultEps);

/// rows x cols patch of the integer grid under the sup norm, spacing `step`.
FiniteMetricSpace grid_space(int rows, int cols, double step = 1.0, double eps = kDefaultEps);

/// Random tree: vertex i attaches to a uniformly chosen earlier vertex with
/// a uniform length in [min_len, max_len].
MetricTree random_tree(int n, std::uint64_t seed, double min_len = 0.5, double max_len = 2.5,
                       double eps = kDefaultEps);

/// k distinct points of the tree, roughly half vertices, half edge-interior.
TreeSubsetX random_tree_subset(const MetricTree& tree, int k, std::uint64_t seed);

/// Named instance families used by examples and the verification suite.
struct ExampleSpec {
    std::string kind;        // segment-net | star | caterpillar | random
    double length = 10.0;    // segment-net: segment length
    double net_step = 1.0;   // segment-net: net pitch
    int legs = 3;            // star: leg count
    double leg_length = 5.0; // star and caterpillar
    int spine = 4;           // caterpillar: spine vertex count
    int size = 10;           // random: vertex count
    int subset = 4;          // random: subset size
    std::uint64_t seed = 1;  // random
};

std::pair<MetricTree, TreeSubsetX> make_example(const ExampleSpec& spec);

}  // namespace ghgeom
