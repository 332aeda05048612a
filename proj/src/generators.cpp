#include "ghgeom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace ghgeom {

FiniteMetricSpace random_euclidean_space(int n, std::uint64_t seed, double scale, int dim,
                                         double min_sep, double eps) {
    if (n < 1 || dim < 1 || scale <= 0.0 || min_sep < 0.0)
        throw Error(ErrorKind::BadParams, "bad random space parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, scale);
    std::vector<std::vector<double>> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > 1000 * n)
            throw Error(ErrorKind::BadParams, "could not place separated random points");
        std::vector<double> p(dim);
        for (double& c : p) c = coord(rng);
        bool ok = true;
        for (const auto& q : pts) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
            if (std::sqrt(s) < min_sep) {
                ok = false;
                break;
            }
        }
        if (ok) pts.push_back(std::move(p));
    }
    Matrix d(n, 0.0);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = "p" + std::to_string(i);
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            double w = std::sqrt(s);
            d(i, j) = w;
            d(j, i) = w;
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(d), eps);
}

FiniteMetricSpace grid_space(int rows, int cols, double step, double eps) {
    if (rows < 1 || cols < 1 || step <= 0.0)
        throw Error(ErrorKind::BadParams, "bad grid parameters");
    const int n = rows * cols;
    Matrix d(n, 0.0);
    std::vector<std::string> labels(n);
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            labels[at(r, c)] = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ri = i / cols, ci = i % cols, rj = j / cols, cj = j % cols;
            double w = step * std::max(std::abs(ri - rj), std::abs(ci - cj));
            d(i, j) = w;
            d(j, i) = w;
        }
    return FiniteMetricSpace(std::move(labels), std::move(d), eps);
}

MetricTree random_tree(int n, std::uint64_t seed, double min_len, double max_len, double eps) {
    if (n < 1 || min_len <= 0.0 || max_len < min_len)
        throw Error(ErrorKind::BadParams, "bad random tree parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> len(min_len, max_len);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
    std::vector<TreeEdge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.push_back({pick(rng), i, len(rng)});
    }
    return MetricTree(std::move(labels), std::move(edges), eps);
}

TreeSubsetX random_tree_subset(const MetricTree& tree, int k, std::uint64_t seed) {
    if (k < 1) throw Error(ErrorKind::BadParams, "subset size must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_vertex(0, tree.vertex_count() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<TreePoint> pts;
    int attempts = 0;
    const double sep = 16.0 * tree.eps();
    while (static_cast<int>(pts.size()) < k) {
        if (++attempts > 1000 * k)
            throw Error(ErrorKind::BadParams, "could not place distinct subset points");
        TreePoint p;
        if (tree.edge_count() == 0 || unit(rng) < 0.5) {
            p = TreePoint::at_vertex(tree, pick_vertex(rng));
        } else {
            std::uniform_int_distribution<int> pick_edge(0, tree.edge_count() - 1);
            int e = pick_edge(rng);
            double off = tree.edge(e).length * (0.1 + 0.8 * unit(rng));
            p = TreePoint::on_edge(tree, e, off);
        }
        bool fresh = true;
        for (const TreePoint& q : pts)
            if (tree_distance(tree, p, q) <= sep) {
                fresh = false;
                break;
            }
        if (fresh) pts.push_back(p);
    }
    return TreeSubsetX(tree, std::move(pts));
}

std::pair<MetricTree, TreeSubsetX> make_example(const ExampleSpec& spec) {
    if (spec.kind == "segment-net") {
        if (spec.length <= 0.0 || spec.net_step <= 0.0 || spec.net_step > spec.length)
            throw Error(ErrorKind::BadParams, "segment-net needs 0 < step <= length");
        MetricTree tree({"a", "b"}, {{0, 1, spec.length}});
        std::vector<TreePoint> pts;
        for (double t = 0.0; t < spec.length - 1e-9; t += spec.net_step)
            pts.push_back(TreePoint::on_edge(tree, 0, t));
        pts.push_back(TreePoint::at_vertex(tree, 1));
        TreeSubsetX x(tree, std::move(pts));
        return {std::move(tree), std::move(x)};
    }
    if (spec.kind == "star") {
        if (spec.legs < 1 || spec.leg_length <= 0.0)
            throw Error(ErrorKind::BadParams, "star needs legs >= 1 and positive length");
        std::vector<std::string> labels{"c"};
        std::vector<TreeEdge> edges;
        for (int i = 0; i < spec.legs; ++i) {
            labels.push_back("l" + std::to_string(i));
            edges.push_back({0, i + 1, spec.leg_length});
        }
        MetricTree tree(std::move(labels), std::move(edges));
        std::vector<TreePoint> pts;
        for (int i = 0; i < spec.legs; ++i) pts.push_back(TreePoint::at_vertex(tree, i + 1));
        TreeSubsetX x(tree, std::move(pts));
        return {std::move(tree), std::move(x)};
    }
    if (spec.kind == "caterpillar") {
        if (spec.spine < 2 || spec.leg_length <= 0.0)
            throw Error(ErrorKind::BadParams, "caterpillar needs spine >= 2 and positive length");
        std::vector<std::string> labels;
        std::vector<TreeEdge> edges;
        for (int i = 0; i < spec.spine; ++i) labels.push_back("s" + std::to_string(i));
        for (int i = 0; i + 1 < spec.spine; ++i) edges.push_back({i, i + 1, 2.0});
        for (int i = 0; i < spec.spine; ++i) {
            labels.push_back("t" + std::to_string(i));
            edges.push_back({i, spec.spine + i, spec.leg_length});
        }
        MetricTree tree(std::move(labels), std::move(edges));
        std::vector<TreePoint> pts;
        for (int i = 0; i < spec.spine; ++i)
            pts.push_back(TreePoint::at_vertex(tree, spec.spine + i));
        TreeSubsetX x(tree, std::move(pts));
        return {std::move(tree), std::move(x)};
    }
    if (spec.kind == "random") {
        MetricTree tree = random_tree(std::max(spec.size, 1), spec.seed);
        int k = std::clamp(spec.subset, 1, tree.vertex_count());
        TreeSubsetX x = random_tree_subset(tree, k, mix_seed(spec.seed, 17));
        return {std::move(tree), std::move(x)};
    }
    throw Error(ErrorKind::BadParams, "unknown example kind '" + spec.kind + "'");
}

}  // namespace ghgeom
