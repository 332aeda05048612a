#include "ghgeom/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

namespace ghgeom {

MetricTree::MetricTree(std::vector<std::string> vertices, std::vector<TreeEdge> edges, double eps)
    : labels_(std::move(vertices)), edges_(std::move(edges)), tol_{eps} {
    const int n = vertex_count();
    if (n == 0) throw Error(ErrorKind::EmptySpace, "a tree needs at least one vertex");
    if (tol_.eps <= 0.0) throw Error(ErrorKind::ValidationError, "eps must be positive");
    {
        std::set<std::string> seen;
        for (const std::string& l : labels_)
            if (!seen.insert(l).second)
                throw Error(ErrorKind::ValidationError, "duplicate vertex label '" + l + "'");
    }
    if (static_cast<int>(edges_.size()) != n - 1)
        throw Error(ErrorKind::ValidationError,
                    "a tree on " + std::to_string(n) + " vertices needs exactly " +
                        std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));

    adjacency_.assign(n, {});
    UnionFind uf(n);
    for (int e = 0; e < edge_count(); ++e) {
        const TreeEdge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range", {e});
        if (ed.u == ed.v) throw Error(ErrorKind::Cycle, "edge is a self-loop", {e, ed.u});
        if (!(ed.length > tol_.eps))
            throw Error(ErrorKind::NonpositiveLength,
                        "edge " + labels_[ed.u] + "-" + labels_[ed.v] + " has nonpositive length",
                        {e});
        if (!uf.unite(ed.u, ed.v))
            throw Error(ErrorKind::Cycle, "edge " + labels_[ed.u] + "-" + labels_[ed.v] +
                                              " closes a cycle",
                        {e});
        adjacency_[ed.u].push_back({ed.v, e});
        adjacency_[ed.v].push_back({ed.u, e});
    }
    // |E| = |V|-1 and no cycles already force connectivity, but check anyway
    // so the error is the honest one if the invariant above ever changes.
    if (uf.component_count() != 1)
        throw Error(ErrorKind::Disconnected, "edge set does not connect all vertices");

    // All-pairs vertex distances: one BFS over the tree per source. O(n^2),
    // embarrassingly parallel across sources.
    vdist_ = Matrix(n, 0.0);
#pragma omp parallel for schedule(static) if (n > 64)
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        std::vector<int> parent(n, -1);
        parent[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adjacency_[v]) {
                if (parent[w] >= 0) continue;
                parent[w] = v;
                vdist_(s, w) = vdist_(s, v) + edges_[e].length;
                stack.push_back(w);
            }
        }
    }
}

double MetricTree::total_length() const {
    double sum = 0.0;
    for (const TreeEdge& e : edges_) sum += e.length;
    return sum;
}

TreePoint TreePoint::at_vertex(const MetricTree& tree, int v) {
    if (v < 0 || v >= tree.vertex_count())
        throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range", {v});
    return TreePoint{-1, v, 0.0};
}

TreePoint TreePoint::on_edge(const MetricTree& tree, int e, double offset) {
    if (e < 0 || e >= tree.edge_count())
        throw Error(ErrorKind::IndexOutOfRange, "edge index out of range", {e});
    const TreeEdge& ed = tree.edge(e);
    const Tol& tol = tree.tol();
    if (tol.lt(offset, 0.0) || tol.gt(offset, ed.length))
        throw Error(ErrorKind::OutOfRange,
                    "offset " + std::to_string(offset) + " outside edge of length " +
                        std::to_string(ed.length),
                    {e});
    if (tol.zero(offset)) return TreePoint{-1, ed.u, 0.0};
    if (tol.eq(offset, ed.length)) return TreePoint{-1, ed.v, 0.0};
    return TreePoint{e, -1, offset};
}

double tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q) {
    if (p.is_vertex() && q.is_vertex()) return tree.vdist(p.vertex, q.vertex);
    if (p.is_vertex()) return tree_distance(tree, q, p);
    const TreeEdge& pe = tree.edge(p.edge);
    if (q.is_vertex()) {
        return std::min(tree.vdist(pe.u, q.vertex) + p.offset,
                        tree.vdist(pe.v, q.vertex) + (pe.length - p.offset));
    }
    if (p.edge == q.edge) return std::fabs(p.offset - q.offset);
    const TreeEdge& qe = tree.edge(q.edge);
    const double pu = p.offset, pv = pe.length - p.offset;
    const double qu = q.offset, qv = qe.length - q.offset;
    return std::min(std::min(pu + tree.vdist(pe.u, qe.u) + qu, pu + tree.vdist(pe.u, qe.v) + qv),
                    std::min(pv + tree.vdist(pe.v, qe.u) + qu, pv + tree.vdist(pe.v, qe.v) + qv));
}

std::vector<int> tree_boundary(const MetricTree& tree) {
    std::vector<int> out;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) <= 1) out.push_back(v);
    return out;
}

TreeSubsetX::TreeSubsetX(const MetricTree& tree, std::vector<TreePoint> pts) {
    if (pts.empty()) throw Error(ErrorKind::EmptySpace, "tree subset needs at least one point");
    // Canonicalize (endpoint offsets fold into vertices) and order
    // deterministically: vertices first by index, then edge points.
    std::vector<TreePoint> canon;
    canon.reserve(pts.size());
    for (const TreePoint& p : pts) {
        if (p.is_vertex())
            canon.push_back(TreePoint::at_vertex(tree, p.vertex));
        else
            canon.push_back(TreePoint::on_edge(tree, p.edge, p.offset));
    }
    std::sort(canon.begin(), canon.end(), [](const TreePoint& a, const TreePoint& b) {
        if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
        if (a.is_vertex()) return a.vertex < b.vertex;
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.offset < b.offset;
    });
    for (std::size_t i = 0; i + 1 < canon.size(); ++i) {
        if (tree.tol().zero(tree_distance(tree, canon[i], canon[i + 1])))
            throw Error(ErrorKind::DuplicatePoint,
                        "subset points " + point_label(tree, canon[i]) + " and " +
                            point_label(tree, canon[i + 1]) + " coincide");
    }
    points = std::move(canon);
}

FiniteMetricSpace subset_space(const MetricTree& tree, const TreeSubsetX& x) {
    const int n = static_cast<int>(x.points.size());
    Matrix d(n, 0.0);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = point_label(tree, x.points[i]);
        for (int j = i + 1; j < n; ++j) {
            double w = tree_distance(tree, x.points[i], x.points[j]);
            d(i, j) = w;
            d(j, i) = w;
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(d), tree.eps());
}

std::string point_label(const MetricTree& tree, const TreePoint& p) {
    if (p.is_vertex()) return tree.vertex_labels()[p.vertex];
    const TreeEdge& e = tree.edge(p.edge);
    std::ostringstream os;
    os << tree.vertex_labels()[e.u] << "-" << tree.vertex_labels()[e.v] << "@" << p.offset;
    return os.str();
}

}  // namespace ghgeom
