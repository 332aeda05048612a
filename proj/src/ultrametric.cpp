#include "ghgeom/ultrametric.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <utility>

#include "ghgeom/common.hpp"

namespace ghgeom {

double dotted_length(const std::vector<int>& line, const FiniteMetricSpace& space) {
    if (line.empty()) throw Error(ErrorKind::BadParams, "dotted line has no points");
    const int n = space.size();
    for (int v : line) {
        if (v < 0 || v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "dotted line point out of range", {v});
    }
    double longest = 0.0;
    for (std::size_t k = 0; k + 1 < line.size(); ++k)
        longest = std::max(longest, space.dist(line[k], line[k + 1]));
    return longest;
}

Matrix minimax_of(const Matrix& dist) {
    const int n = dist.size();
    Matrix u(n, 0.0);
    if (n <= 1) return u;

    // Pair list sorted by weight (ties by index so the merge order, and with
    // it nothing observable, is deterministic).
    struct Pair {
        double w;
        int i, j;
    };
    std::vector<Pair> order;
    order.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) order.push_back({dist(i, j), i, j});
    std::sort(order.begin(), order.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.w, a.i, a.j) < std::tie(b.w, b.i, b.j);
    });

    // members[r] lists the points of the component rooted at r. Each merge
    // writes the merge weight for every cross pair; every pair is written
    // exactly once, so the fill work is O(n^2) overall and each batch is an
    // independent rectangle -- the natural parallel kernel.
    UnionFind uf(n);
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) members[i] = {i};

    int components = n;
    for (const Pair& p : order) {
        int ra = uf.find(p.i);
        int rb = uf.find(p.j);
        if (ra == rb) continue;
        const std::vector<int>& a = members[ra];
        const std::vector<int>& b = members[rb];
        const int na = static_cast<int>(a.size());
        const int nb = static_cast<int>(b.size());
#pragma omp parallel for collapse(2) if (static_cast<long>(na) * nb > 2048)
        for (int s = 0; s < na; ++s) {
            for (int t = 0; t < nb; ++t) {
                u(a[s], b[t]) = p.w;
                u(b[t], a[s]) = p.w;
            }
        }
        uf.unite(ra, rb);
        int root = uf.find(ra);
        int other = root == ra ? rb : ra;
        members[root].insert(members[root].end(), members[other].begin(), members[other].end());
        members[other].clear();
        members[other].shrink_to_fit();
        if (--components == 1) break;
    }
    return u;
}

Matrix minimax_matrix(const FiniteMetricSpace& space) { return minimax_of(space.matrix()); }

UltrametricResult ultrametrize_matrix(const Matrix& dist, const std::vector<std::string>& labels,
                                      double eps) {
    const int n = dist.size();
    if (n == 0) throw Error(ErrorKind::EmptySpace, "cannot ultrametrize an empty matrix");
    if (static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::ValidationError, "label count does not match matrix size");
    Tol tol{eps};

    Matrix u = minimax_of(dist);

    // Zero classes: components of the graph {u <= eps}.
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (tol.zero(u(i, j))) uf.unite(i, j);

    std::vector<int> projection(n, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (projection[r] < 0) {
            projection[r] = static_cast<int>(classes.size());
            classes.push_back({});
        }
        classes[projection[r]].push_back(i);
    }
    for (int i = 0; i < n; ++i) projection[i] = projection[uf.find(i)];

    const int m = static_cast<int>(classes.size());
    Matrix q(m, 0.0);
    std::vector<std::string> qlabels(m);
    for (int a = 0; a < m; ++a) {
        qlabels[a] = labels[classes[a][0]];
        for (int b = a + 1; b < m; ++b) {
            // u is constant on classes up to eps; the representative value is
            // what the quotient carries.
            double w = u(classes[a][0], classes[b][0]);
            q(a, b) = w;
            q(b, a) = w;
        }
    }
    return UltrametricResult{std::move(u), std::move(classes), std::move(projection),
                             FiniteMetricSpace(std::move(qlabels), std::move(q), eps)};
}

UltrametricResult ultrametrize(const FiniteMetricSpace& space) {
    return ultrametrize_matrix(space.matrix(), space.labels(), space.eps());
}

double gh_lower_ultra(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                      const GhBudget& budget) {
    UltrametricResult ux = ultrametrize(x);
    UltrametricResult uy = ultrametrize(y);
    return gh_exact(ux.quotient, uy.quotient, budget).value;
}

double connectivity_defect(const FiniteMetricSpace& space) {
    Matrix u = minimax_matrix(space);
    double diam = 0.0;
    const int n = u.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) diam = std::max(diam, u(i, j));
    return diam / 2.0;
}

bool threshold_connected(const FiniteMetricSpace& space, double t) {
    const int n = space.size();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.tol().le(space.dist(i, j), t)) uf.unite(i, j);
    return uf.component_count() == 1;
}

}  // namespace ghgeom
