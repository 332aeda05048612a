#include "ghgeom/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ghgeom::reference {

double distortion_plain(const Correspondence& r, const FiniteMetricSpace& x,
                        const FiniteMetricSpace& y) {
    double sup = 0.0;
    for (const auto& [x1, y1] : r.pairs)
        for (const auto& [x2, y2] : r.pairs)
            sup = std::max(sup, std::fabs(x.dist(x1, x2) - y.dist(y1, y2)));
    return sup;
}

Matrix minimax_floyd(const Matrix& dist) {
    const int n = dist.size();
    Matrix u = dist;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                u(i, j) = std::min(u(i, j), std::max(u(i, k), u(k, j)));
    return u;
}

Matrix minimax_paths(const Matrix& dist) {
    const int n = dist.size();
    if (n > 12) throw Error(ErrorKind::BadParams, "minimax_paths is limited to 12 points");
    Matrix u(n, 0.0);
    if (n <= 1) return u;
    const std::uint32_t full = (1u << n) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    // dp[mask][v]: best bottleneck over dotted lines from s through exactly
    // `mask` ending at v.
    std::vector<std::vector<double>> dp(full + 1, std::vector<double>(n, inf));
    for (int s = 0; s < n; ++s) {
        for (auto& row : dp) std::fill(row.begin(), row.end(), inf);
        dp[1u << s][s] = 0.0;
        std::vector<double> best(n, inf);
        best[s] = 0.0;
        for (std::uint32_t mask = 1u << s; mask <= full; ++mask) {
            if (!(mask & (1u << s))) continue;
            for (int v = 0; v < n; ++v) {
                if (dp[mask][v] == inf) continue;
                for (int w = 0; w < n; ++w) {
                    if (mask & (1u << w)) continue;
                    double cand = std::max(dp[mask][v], dist(v, w));
                    std::uint32_t next = mask | (1u << w);
                    if (cand < dp[next][w]) dp[next][w] = cand;
                    if (cand < best[w]) best[w] = cand;
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (v != s) u(s, v) = best[v];
    }
    return u;
}

double gh_enumerate(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    const int nx = x.size();
    const int ny = y.size();
    const int cells = nx * ny;
    if (cells > 16)
        throw Error(ErrorKind::BadParams, "gh_enumerate is limited to |X|*|Y| <= 16");
    std::vector<std::uint32_t> row_mask(nx, 0), col_mask(ny, 0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            row_mask[i] |= 1u << (i * ny + j);
            col_mask[j] |= 1u << (i * ny + j);
        }
    const std::uint32_t full = cells == 32 ? 0xffffffffu : (1u << cells) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t rel = 1; rel <= full; ++rel) {
        bool covers = true;
        for (int i = 0; covers && i < nx; ++i) covers = (rel & row_mask[i]) != 0;
        for (int j = 0; covers && j < ny; ++j) covers = (rel & col_mask[j]) != 0;
        if (!covers) continue;
        double dis = 0.0;
        for (std::uint32_t a = rel; a; a &= a - 1) {
            const int ca = std::countr_zero(a);
            const int xa = ca / ny, ya = ca % ny;
            for (std::uint32_t b = a; b; b &= b - 1) {
                const int cb = std::countr_zero(b);
                const int xb = cb / ny, yb = cb % ny;
                dis = std::max(dis, std::fabs(x.dist(xa, xb) - y.dist(ya, yb)));
                if (dis >= best) break;
            }
            if (dis >= best) break;
        }
        best = std::min(best, dis);
    }
    return best / 2.0;
}

double hausdorff_plain(const FiniteMetricSpace& space, const std::vector<int>& a,
                       const std::vector<int>& b) {
    auto oriented = [&](const std::vector<int>& from, const std::vector<int>& to) {
        double sup = 0.0;
        for (int p : from) {
            double inf = std::numeric_limits<double>::infinity();
            for (int q : to) inf = std::min(inf, space.dist(p, q));
            sup = std::max(sup, inf);
        }
        return sup;
    };
    return std::max(oriented(a, b), oriented(b, a));
}

std::vector<TreePoint> sample_tree(const MetricTree& tree, double step) {
    if (step <= 0.0) throw Error(ErrorKind::BadParams, "sampling step must be positive");
    std::vector<TreePoint> out;
    for (int v = 0; v < tree.vertex_count(); ++v) out.push_back(TreePoint::at_vertex(tree, v));
    for (int e = 0; e < tree.edge_count(); ++e) {
        const double len = tree.edge(e).length;
        for (double t = step; t < len; t += step) out.push_back(TreePoint::on_edge(tree, e, t));
    }
    return out;
}

std::vector<TreePoint> sample_union(const IntervalUnion& s, double step) {
    if (step <= 0.0) throw Error(ErrorKind::BadParams, "sampling step must be positive");
    const MetricTree& tree = s.tree();
    std::vector<TreePoint> out;
    for (int e = 0; e < tree.edge_count(); ++e)
        for (const Interval& iv : s.on_edge(e)) {
            for (double t = iv.lo; t < iv.hi; t += step)
                out.push_back(TreePoint::on_edge(tree, e, t));
            out.push_back(TreePoint::on_edge(tree, e, iv.hi));
        }
    return out;
}

double tree_hausdorff_sampled(const MetricTree& tree, const TreeSubsetX& x, double step) {
    double sup = 0.0;
    for (const TreePoint& p : sample_tree(tree, step)) {
        double inf = std::numeric_limits<double>::infinity();
        for (const TreePoint& q : x.points) inf = std::min(inf, tree_distance(tree, p, q));
        sup = std::max(sup, inf);
    }
    return sup;
}

double union_hausdorff_sampled(const IntervalUnion& a, const IntervalUnion& b, double step) {
    const MetricTree& tree = a.tree();
    std::vector<TreePoint> sa = sample_union(a, step);
    std::vector<TreePoint> sb = sample_union(b, step);
    auto oriented = [&](const std::vector<TreePoint>& from, const std::vector<TreePoint>& to) {
        double sup = 0.0;
        for (const TreePoint& p : from) {
            double inf = std::numeric_limits<double>::infinity();
            for (const TreePoint& q : to) inf = std::min(inf, tree_distance(tree, p, q));
            sup = std::max(sup, inf);
        }
        return sup;
    };
    return std::max(oriented(sa, sb), oriented(sb, sa));
}

double u_diameter_sampled(const IntervalUnion& s, double step) {
    std::vector<TreePoint> pts = sample_union(s, step);
    const int n = static_cast<int>(pts.size());
    Matrix d(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double w = tree_distance(s.tree(), pts[i], pts[j]);
            d(i, j) = w;
            d(j, i) = w;
        }
    Matrix u = minimax_floyd(d);
    double diam = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) diam = std::max(diam, u(i, j));
    return diam;
}

}  // namespace ghgeom::reference
