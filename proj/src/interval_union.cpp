#include "ghgeom/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

#include "ghgeom/ultrametric.hpp"

namespace ghgeom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_tree(const IntervalUnion& a, const IntervalUnion& b) {
    if (&a.tree() != &b.tree())
        throw Error(ErrorKind::DifferentAmbient, "interval unions live on different trees");
}

}  // namespace

IntervalUnion::IntervalUnion(const MetricTree& tree) : tree_(&tree), per_edge_(tree.edge_count()) {}

IntervalUnion IntervalUnion::whole(const MetricTree& tree) {
    IntervalUnion s(tree);
    for (int e = 0; e < tree.edge_count(); ++e) s.add(e, 0.0, tree.edge(e).length);
    s.normalize();
    return s;
}

IntervalUnion IntervalUnion::from_points(const MetricTree& tree,
                                         const std::vector<TreePoint>& pts) {
    IntervalUnion s(tree);
    for (const TreePoint& p : pts) s.add_point(p);
    s.normalize();
    return s;
}

IntervalUnion IntervalUnion::from_points(const MetricTree& tree, const TreeSubsetX& x) {
    return from_points(tree, x.points);
}

void IntervalUnion::add(int e, double lo, double hi) {
    if (e < 0 || e >= tree_->edge_count())
        throw Error(ErrorKind::IndexOutOfRange, "edge index out of range", {e});
    const double len = tree_->edge(e).length;
    const Tol& tol = tree_->tol();
    if (lo > hi) {
        if (lo - hi > tol.eps) return;
        lo = hi = (lo + hi) / 2.0;
    }
    if (hi < -tol.eps || lo > len + tol.eps) return;
    per_edge_[e].push_back({std::clamp(lo, 0.0, len), std::clamp(hi, 0.0, len)});
}

void IntervalUnion::add_point(const TreePoint& p) {
    if (tree_->edge_count() == 0)
        throw Error(ErrorKind::ValidationError,
                    "interval unions need a tree with at least one edge");
    TreePoint c = p.is_vertex() ? TreePoint::at_vertex(*tree_, p.vertex)
                                : TreePoint::on_edge(*tree_, p.edge, p.offset);
    if (c.is_vertex()) {
        auto [w, e] = tree_->incident(c.vertex).front();
        (void)w;
        double at = tree_->edge(e).u == c.vertex ? 0.0 : tree_->edge(e).length;
        add(e, at, at);
    } else {
        add(c.edge, c.offset, c.offset);
    }
}

void IntervalUnion::normalize() {
    const Tol& tol = tree_->tol();
    auto merge_edge = [&](std::vector<Interval>& list) {
        std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
            return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
        });
        std::vector<Interval> out;
        for (const Interval& c : list) {
            if (!out.empty() && c.lo <= out.back().hi + tol.eps)
                out.back().hi = std::max(out.back().hi, c.hi);
            else
                out.push_back(c);
        }
        list = std::move(out);
    };
    for (auto& list : per_edge_) merge_edge(list);

    // Materialize covered vertices: every edge incident to a covered vertex
    // carries at least a degenerate interval at that end, so per-edge set
    // operations see vertex points no matter which edge first produced them.
    std::vector<char> covered(tree_->vertex_count(), 0);
    for (int e = 0; e < tree_->edge_count(); ++e) {
        const TreeEdge& ed = tree_->edge(e);
        for (const Interval& iv : per_edge_[e]) {
            if (iv.lo <= tol.eps) covered[ed.u] = 1;
            if (iv.hi >= ed.length - tol.eps) covered[ed.v] = 1;
        }
    }
    bool added = false;
    for (int v = 0; v < tree_->vertex_count(); ++v) {
        if (!covered[v]) continue;
        for (const auto& [w, e] : tree_->incident(v)) {
            (void)w;
            const TreeEdge& ed = tree_->edge(e);
            const double at = ed.u == v ? 0.0 : ed.length;
            bool touched = false;
            for (const Interval& iv : per_edge_[e])
                if (iv.lo <= at + tol.eps && iv.hi >= at - tol.eps) {
                    touched = true;
                    break;
                }
            if (!touched) {
                per_edge_[e].push_back({at, at});
                added = true;
            }
        }
    }
    if (added)
        for (auto& list : per_edge_) merge_edge(list);
}

bool IntervalUnion::empty() const {
    for (const auto& list : per_edge_)
        if (!list.empty()) return false;
    return true;
}

bool IntervalUnion::vertex_covered(int v) const {
    const Tol& tol = tree_->tol();
    for (const auto& [w, e] : tree_->incident(v)) {
        (void)w;
        const TreeEdge& ed = tree_->edge(e);
        const double at = ed.u == v ? 0.0 : ed.length;
        for (const Interval& iv : per_edge_[e])
            if (iv.lo <= at + tol.eps && iv.hi >= at - tol.eps) return true;
    }
    return false;
}

bool IntervalUnion::contains(const TreePoint& p) const {
    if (p.is_vertex()) return vertex_covered(p.vertex);
    const Tol& tol = tree_->tol();
    for (const Interval& iv : per_edge_[p.edge])
        if (iv.lo - tol.eps <= p.offset && p.offset <= iv.hi + tol.eps) return true;
    return false;
}

std::vector<TreePoint> IntervalUnion::endpoints() const {
    std::vector<TreePoint> pts;
    std::map<std::tuple<int, int, double>, bool> seen;
    auto push = [&](const TreePoint& p) {
        auto key = p.is_vertex() ? std::tuple<int, int, double>(0, p.vertex, 0.0)
                                 : std::tuple<int, int, double>(1, p.edge, p.offset);
        if (!seen.emplace(key, true).second) return;
        pts.push_back(p);
    };
    for (int e = 0; e < tree_->edge_count(); ++e)
        for (const Interval& iv : per_edge_[e]) {
            push(TreePoint::on_edge(*tree_, e, iv.lo));
            push(TreePoint::on_edge(*tree_, e, iv.hi));
        }
    return pts;
}

int IntervalUnion::piece_count() const {
    int c = 0;
    for (const auto& list : per_edge_) c += static_cast<int>(list.size());
    return c;
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
    require_same_tree(a, b);
    IntervalUnion out = a;
    for (int e = 0; e < a.tree().edge_count(); ++e)
        for (const Interval& iv : b.on_edge(e)) out.add(e, iv.lo, iv.hi);
    out.normalize();
    return out;
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
    require_same_tree(a, b);
    const MetricTree& tree = a.tree();
    const Tol& tol = tree.tol();
    IntervalUnion out(tree);
    for (int e = 0; e < tree.edge_count(); ++e) {
        const auto& la = a.on_edge(e);
        const auto& lb = b.on_edge(e);
        std::size_t i = 0, j = 0;
        while (i < la.size() && j < lb.size()) {
            double lo = std::max(la[i].lo, lb[j].lo);
            double hi = std::min(la[i].hi, lb[j].hi);
            if (lo <= hi)
                out.add(e, lo, hi);
            else if (lo - hi <= tol.eps)  // touching within eps counts, as in normalize()
                out.add(e, (lo + hi) / 2.0, (lo + hi) / 2.0);
            if (la[i].hi <= lb[j].hi)
                ++i;
            else
                ++j;
        }
    }
    out.normalize();
    return out;
}

IntervalUnion complement(const IntervalUnion& s) {
    const MetricTree& tree = s.tree();
    const Tol& tol = tree.tol();
    IntervalUnion out(tree);
    for (int e = 0; e < tree.edge_count(); ++e) {
        const double len = tree.edge(e).length;
        const auto& list = s.on_edge(e);
        if (list.empty()) {
            out.add(e, 0.0, len);
            continue;
        }
        if (list.front().lo > tol.eps) out.add(e, 0.0, list.front().lo);
        for (std::size_t i = 0; i + 1 < list.size(); ++i) out.add(e, list[i].hi, list[i + 1].lo);
        if (list.back().hi < len - tol.eps) out.add(e, list.back().hi, len);
    }
    out.normalize();
    return out;
}

IntervalUnion IntervalUnion::segment(const MetricTree& tree, const TreePoint& p0,
                                     const TreePoint& q0) {
    IntervalUnion out(tree);
    TreePoint p = p0.is_vertex() ? TreePoint::at_vertex(tree, p0.vertex)
                                 : TreePoint::on_edge(tree, p0.edge, p0.offset);
    TreePoint q = q0.is_vertex() ? TreePoint::at_vertex(tree, q0.vertex)
                                 : TreePoint::on_edge(tree, q0.edge, q0.offset);
    out.add_point(p);
    out.add_point(q);

    if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) {
        out.add(p.edge, std::min(p.offset, q.offset), std::max(p.offset, q.offset));
        out.normalize();
        return out;
    }

    // Route through vertices: pick the exit pair realizing the distance (the
    // geodesic of a tree is unique, so exactly one pair qualifies), then lay
    // down the two partial edges and the full edges of the vertex path.
    struct Exit {
        int vertex;
        double cost;
    };
    auto exits_of = [&](const TreePoint& x) {
        std::vector<Exit> v;
        if (x.is_vertex()) {
            v.push_back({x.vertex, 0.0});
        } else {
            const TreeEdge& ed = tree.edge(x.edge);
            v.push_back({ed.u, x.offset});
            v.push_back({ed.v, ed.length - x.offset});
        }
        return v;
    };
    const double d = tree_distance(tree, p, q);
    const Tol& tol = tree.tol();
    Exit ep{-1, 0}, eq{-1, 0};
    for (const Exit& a : exits_of(p)) {
        for (const Exit& b : exits_of(q)) {
            if (a.cost + tree.vdist(a.vertex, b.vertex) + b.cost <= d + tol.eps) {
                ep = a;
                eq = b;
                goto found;
            }
        }
    }
found:
    if (!p.is_vertex()) {
        const TreeEdge& ed = tree.edge(p.edge);
        if (ep.vertex == ed.u)
            out.add(p.edge, 0.0, p.offset);
        else
            out.add(p.edge, p.offset, ed.length);
    }
    if (!q.is_vertex()) {
        const TreeEdge& ed = tree.edge(q.edge);
        if (eq.vertex == ed.u)
            out.add(q.edge, 0.0, q.offset);
        else
            out.add(q.edge, q.offset, ed.length);
    }
    if (ep.vertex != eq.vertex) {
        // Parent walk from ep to eq.
        std::vector<int> parent_vertex(tree.vertex_count(), -1);
        std::vector<int> parent_edge(tree.vertex_count(), -1);
        std::vector<int> stack{ep.vertex};
        parent_vertex[ep.vertex] = ep.vertex;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == eq.vertex) break;
            for (const auto& [w, e] : tree.incident(v)) {
                if (parent_vertex[w] >= 0) continue;
                parent_vertex[w] = v;
                parent_edge[w] = e;
                stack.push_back(w);
            }
        }
        for (int v = eq.vertex; v != ep.vertex; v = parent_vertex[v])
            out.add(parent_edge[v], 0.0, tree.edge(parent_edge[v]).length);
    }
    out.normalize();
    return out;
}

std::vector<double> vertex_field(const IntervalUnion& s) {
    const MetricTree& tree = s.tree();
    const int n = tree.vertex_count();
    std::vector<double> field(n, kInf);
#pragma omp parallel for schedule(static) if (n > 32)
    for (int v = 0; v < n; ++v) {
        double best = kInf;
        for (int e = 0; e < tree.edge_count(); ++e) {
            const auto& list = s.on_edge(e);
            if (list.empty()) continue;
            const TreeEdge& ed = tree.edge(e);
            const double du = tree.vdist(v, ed.u);
            const double dv = tree.vdist(v, ed.v);
            for (const Interval& iv : list)
                best = std::min(best, std::min(du + iv.lo, dv + (ed.length - iv.hi)));
        }
        field[v] = best;
    }
    return field;
}

double point_to_union(const TreePoint& p, const IntervalUnion& s) {
    if (s.empty()) throw Error(ErrorKind::EmptyTarget, "distance to an empty union");
    const MetricTree& tree = s.tree();
    double best = kInf;
    for (int e = 0; e < tree.edge_count(); ++e) {
        const auto& list = s.on_edge(e);
        if (list.empty()) continue;
        const TreeEdge& ed = tree.edge(e);
        if (!p.is_vertex() && p.edge == e) {
            for (const Interval& iv : list)
                best = std::min(best,
                                std::max({0.0, iv.lo - p.offset, p.offset - iv.hi}));
            continue;
        }
        const double du = tree_distance(tree, p, TreePoint::at_vertex(tree, ed.u));
        const double dv = tree_distance(tree, p, TreePoint::at_vertex(tree, ed.v));
        for (const Interval& iv : list)
            best = std::min(best, std::min(du + iv.lo, dv + (ed.length - iv.hi)));
    }
    return best;
}

IntervalUnion neighborhood(const IntervalUnion& s, double r) {
    const MetricTree& tree = s.tree();
    const Tol& tol = tree.tol();
    if (tol.lt(r, 0.0)) throw Error(ErrorKind::BadParams, "neighborhood radius must be >= 0");
    if (s.empty()) throw Error(ErrorKind::EmptyTarget, "neighborhood of an empty union");
    r = std::max(r, 0.0);
    const std::vector<double> field = vertex_field(s);
    IntervalUnion out(tree);
    for (int e = 0; e < tree.edge_count(); ++e) {
        const TreeEdge& ed = tree.edge(e);
        if (field[ed.u] <= r + tol.eps) out.add(e, 0.0, r - field[ed.u]);
        if (field[ed.v] <= r + tol.eps) out.add(e, ed.length - (r - field[ed.v]), ed.length);
        for (const Interval& iv : s.on_edge(e)) out.add(e, iv.lo - r, iv.hi + r);
    }
    out.normalize();
    return out;
}

namespace {

/// Max over [alpha, beta] of f(t) = min(dbu + t, dbv + len - t,
/// min_i max(0, b_i.lo - t, t - b_i.hi)): evaluate f at every candidate where
/// an increasing arm can cross a decreasing arm, plus kinks and the ends.
double sup_on_interval(double alpha, double beta, double len, double dbu, double dbv,
                       const std::vector<Interval>& bs) {
    std::vector<double> cand{alpha, beta, (dbv + len - dbu) / 2.0};
    for (const Interval& x : bs) {
        cand.push_back(x.lo);
        cand.push_back(x.hi);
        cand.push_back((x.lo - dbu) / 2.0);
        cand.push_back((x.hi + dbv + len) / 2.0);
        for (const Interval& y : bs) cand.push_back((y.lo + x.hi) / 2.0);
    }
    double sup = 0.0;
    for (double t : cand) {
        t = std::clamp(t, alpha, beta);
        double f = std::min(dbu + t, dbv + (len - t));
        for (const Interval& x : bs)
            f = std::min(f, std::max({0.0, x.lo - t, t - x.hi}));
        sup = std::max(sup, f);
    }
    return sup;
}

}  // namespace

double oriented_hausdorff_subsets(const IntervalUnion& a, const IntervalUnion& b) {
    require_same_tree(a, b);
    if (a.empty()) return 0.0;
    if (b.empty()) throw Error(ErrorKind::EmptyTarget, "hausdorff target union is empty");
    const MetricTree& tree = a.tree();
    const std::vector<double> field = vertex_field(b);
    const int ne = tree.edge_count();
    double sup = 0.0;
#pragma omp parallel for reduction(max : sup) schedule(dynamic) if (ne > 8)
    for (int e = 0; e < ne; ++e) {
        const auto& la = a.on_edge(e);
        if (la.empty()) continue;
        const TreeEdge& ed = tree.edge(e);
        for (const Interval& iv : la)
            sup = std::max(sup, sup_on_interval(iv.lo, iv.hi, ed.length, field[ed.u],
                                                field[ed.v], b.on_edge(e)));
    }
    return sup;
}

double hausdorff_subsets(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.empty() || b.empty())
        throw Error(ErrorKind::EmptyTarget, "hausdorff distance needs two nonempty unions");
    return std::max(oriented_hausdorff_subsets(a, b), oriented_hausdorff_subsets(b, a));
}

double u_diameter(const IntervalUnion& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySpace, "u-diameter of an empty union");
    const MetricTree& tree = s.tree();

    std::map<std::tuple<int, int, double>, int> index;
    std::vector<TreePoint> reps;
    auto rep_of = [&](int e, double at) {
        TreePoint p = TreePoint::on_edge(tree, e, at);
        auto key = p.is_vertex() ? std::tuple<int, int, double>(0, p.vertex, 0.0)
                                 : std::tuple<int, int, double>(1, p.edge, p.offset);
        auto [it, fresh] = index.emplace(key, static_cast<int>(reps.size()));
        if (fresh) reps.push_back(p);
        return it->second;
    };

    std::vector<std::pair<int, int>> links;
    for (int e = 0; e < tree.edge_count(); ++e)
        for (const Interval& iv : s.on_edge(e))
            links.push_back({rep_of(e, iv.lo), rep_of(e, iv.hi)});

    const int m = static_cast<int>(reps.size());
    if (m <= 1) return 0.0;
    UnionFind uf(m);
    for (const auto& [x, y] : links) uf.unite(x, y);

    Matrix d(m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            double w = uf.find(i) == uf.find(j) ? 0.0 : tree_distance(tree, reps[i], reps[j]);
            d(i, j) = w;
            d(j, i) = w;
        }
    Matrix u = minimax_of(d);
    double diam = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) diam = std::max(diam, u(i, j));
    return diam;
}

}  // namespace ghgeom
