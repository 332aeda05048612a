#include "ghgeom/kuratowski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ghgeom/ultrametric.hpp"

namespace ghgeom {

std::vector<std::vector<double>> kuratowski_embed(const FiniteMetricSpace& x, int base) {
    const int n = x.size();
    if (base < 0 || base >= n)
        throw Error(ErrorKind::IndexOutOfRange, "base point out of range", {base});
    std::vector<std::vector<double>> coords(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) coords[i][j] = x.dist(i, j) - x.dist(base, j);
    return coords;
}

double sup_norm_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
    return m;
}

double embedding_residual(const FiniteMetricSpace& x,
                          const std::vector<std::vector<double>>& coords) {
    const int n = x.size();
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static) if (n > 64)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            worst = std::max(worst, std::fabs(sup_norm_dist(coords[i], coords[j]) - x.dist(i, j)));
    return worst;
}

SampledComplex build_dt(const FiniteMetricSpace& x, double t, double delta) {
    const Tol& tol = x.tol();
    if (tol.lt(t, 0.0)) throw Error(ErrorKind::BadParams, "threshold t must be >= 0");
    if (delta <= 0.0) delta = t / 10.0;
    SampledComplex cx;
    cx.t = t;
    cx.delta = delta;
    cx.points = kuratowski_embed(x);
    cx.anchor_count = x.size();
    for (int i = 0; i < cx.anchor_count; ++i) cx.origins.push_back({i, -1, 0.0});

    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j)
            if (tol.le(x.dist(i, j), t)) cx.segments.push_back({i, j});
    if (!cx.segments.empty() && !(delta > 0.0))
        throw Error(ErrorKind::BadParams, "sampling pitch delta must be positive");

    for (int s = 0; s < static_cast<int>(cx.segments.size()); ++s) {
        auto [i, j] = cx.segments[s];
        const double d = x.dist(i, j);
        const int steps = std::max(1, static_cast<int>(std::ceil(d / delta - 1e-12)));
        for (int k = 1; k < steps; ++k) {
            const double frac = static_cast<double>(k) / steps;
            std::vector<double> p(cx.points[i].size());
            for (std::size_t c = 0; c < p.size(); ++c)
                p[c] = (1.0 - frac) * cx.points[i][c] + frac * cx.points[j][c];
            cx.points.push_back(std::move(p));
            cx.origins.push_back({-1, s, frac});
        }
    }
    return cx;
}

DtCheckResult dt_check(const FiniteMetricSpace& x, double t, double delta,
                       const GhBudget& budget) {
    const Tol& tol = x.tol();
    SampledComplex cx = build_dt(x, t, delta);
    DtCheckResult res;
    res.x_threshold_connected = threshold_connected(x, t);
    {
        UnionFind uf(cx.anchor_count);
        for (const auto& [i, j] : cx.segments) uf.unite(i, j);
        res.complex_connected = uf.component_count() == 1;
    }

    // Nearest-anchor correspondence: anchors map to themselves, interior
    // samples to the closer segment end (ties toward the lower index).
    const int total = static_cast<int>(cx.points.size());
    std::vector<int> mapped(total);
    for (int p = 0; p < total; ++p) {
        const SampledComplex::Origin& o = cx.origins[p];
        if (o.anchor >= 0)
            mapped[p] = o.anchor;
        else
            mapped[p] = o.s <= 0.5 ? cx.segments[o.seg].first : cx.segments[o.seg].second;
    }
    double dis = 0.0;
#pragma omp parallel for reduction(max : dis) schedule(dynamic) if (total > 64)
    for (int p = 0; p < total; ++p)
        for (int q = p + 1; q < total; ++q)
            dis = std::max(dis, std::fabs(sup_norm_dist(cx.points[p], cx.points[q]) -
                                          x.dist(mapped[p], mapped[q])));
    res.correspondence_distortion = dis;
    res.distortion_limit = t;

    res.gh_cross_limit = t / 2.0 + cx.delta;
    if (static_cast<long long>(x.size()) * total <= budget.max_cells) {
        // Deduplicate near-coincident samples so the complex is a genuine
        // metric space, then compare exactly.
        std::vector<int> keep;
        for (int p = 0; p < total; ++p) {
            bool fresh = true;
            for (int q : keep)
                if (tol.zero(sup_norm_dist(cx.points[p], cx.points[q]))) {
                    fresh = false;
                    break;
                }
            if (fresh) keep.push_back(p);
        }
        const int m = static_cast<int>(keep.size());
        Matrix d(m, 0.0);
        std::vector<std::string> labels(m);
        for (int a = 0; a < m; ++a) {
            labels[a] = "s" + std::to_string(keep[a]);
            for (int b = a + 1; b < m; ++b) {
                double w = sup_norm_dist(cx.points[keep[a]], cx.points[keep[b]]);
                d(a, b) = w;
                d(b, a) = w;
            }
        }
        res.gh_cross =
            gh_exact(x, FiniteMetricSpace(std::move(labels), std::move(d), x.eps()), budget).value;
    }

    res.pass = res.x_threshold_connected == res.complex_connected &&
               tol.le(res.correspondence_distortion, res.distortion_limit) &&
               (!res.gh_cross || tol.le(*res.gh_cross, res.gh_cross_limit));
    return res;
}

}  // namespace ghgeom
