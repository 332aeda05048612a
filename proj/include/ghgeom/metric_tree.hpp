#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ghgeom/common.hpp"
#include "ghgeom/metric_space.hpp"

namespace ghgeom {

struct TreeEdge {
    int u = -1;
    int v = -1;
    double length = 0.0;
};

/// Weighted tree regarded as a geodesic space: points live on vertices and
/// edge interiors, distances follow the unique simple path.
///
/// Construction enforces: labels unique, exactly |V|-1 edges, endpoints in
/// range and distinct, every length > eps, connected, acyclic. A single
/// vertex with no edges is a valid (degenerate) tree.
class MetricTree {
public:
    MetricTree(std::vector<std::string> vertices, std::vector<TreeEdge> edges,
               double eps = kDefaultEps);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const TreeEdge& edge(int e) const { return edges_[e]; }
    const std::vector<TreeEdge>& edges() const { return edges_; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    /// (neighbor vertex, edge index) pairs.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adjacency_[v]; }
    double vdist(int a, int b) const { return vdist_(a, b); }
    const Matrix& vertex_matrix() const { return vdist_; }
    double eps() const { return tol_.eps; }
    const Tol& tol() const { return tol_; }
    double total_length() const;

private:
    std::vector<std::string> labels_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    Matrix vdist_;
    Tol tol_;
};

/// A point of the tree: either a vertex (edge == -1) or an edge-interior
/// point at `offset` from edge(e).u. Offsets within eps of an endpoint are
/// canonicalized to the vertex, so equality of points is structural.
struct TreePoint {
    int edge = -1;
    int vertex = -1;
    double offset = 0.0;

    static TreePoint at_vertex(const MetricTree& tree, int v);
    static TreePoint on_edge(const MetricTree& tree, int e, double offset);

    bool is_vertex() const { return edge < 0; }
};

/// Geodesic distance between two points of the same tree.
double tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q);

/// Vertices of degree <= 1 (the topological boundary of the tree).
std::vector<int> tree_boundary(const MetricTree& tree);

/// Finite nonempty subset of tree points; construction canonicalizes the
/// points and rejects duplicates closer than eps.
struct TreeSubsetX {
    std::vector<TreePoint> points;

    TreeSubsetX(const MetricTree& tree, std::vector<TreePoint> pts);
};

/// Distance matrix of a finite subset, as a metric space whose labels name
/// the tree locations.
FiniteMetricSpace subset_space(const MetricTree& tree, const TreeSubsetX& x);

/// Human-readable location, e.g. "b" or "a-b@2.5".
std::string point_label(const MetricTree& tree, const TreePoint& p);

}  // namespace ghgeom
