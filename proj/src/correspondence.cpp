#include "ghgeom/correspondence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ghgeom {

Correspondence::Correspondence(int nx_, int ny_, std::vector<std::pair<int, int>> pairs_)
    : nx(nx_), ny(ny_), pairs(std::move(pairs_)) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<char> xc(nx, 0), yc(ny, 0);
    for (auto [px, py] : pairs) {
        if (px < 0 || px >= nx || py < 0 || py >= ny)
            throw Error(ErrorKind::IndexOutOfRange, "correspondence pair out of range", {px, py});
        xc[px] = 1;
        yc[py] = 1;
    }
    for (int i = 0; i < nx; ++i)
        if (!xc[i]) throw Error(ErrorKind::CoverageViolation, "left point not covered", {i});
    for (int j = 0; j < ny; ++j)
        if (!yc[j]) throw Error(ErrorKind::CoverageViolation, "right point not covered", {j});
}

Correspondence Correspondence::identity(int n) {
    std::vector<std::pair<int, int>> p(n);
    for (int i = 0; i < n; ++i) p[i] = {i, i};
    return Correspondence(n, n, std::move(p));
}

Correspondence Correspondence::transposed() const {
    std::vector<std::pair<int, int>> p;
    p.reserve(pairs.size());
    for (auto [px, py] : pairs) p.emplace_back(py, px);
    return Correspondence(ny, nx, std::move(p));
}

double distortion(const Correspondence& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    if (r.nx != x.size() || r.ny != y.size())
        throw Error(ErrorKind::CoverageViolation, "correspondence sizes do not match the spaces");
    const int np = static_cast<int>(r.pairs.size());
    double sup = 0.0;
#pragma omp parallel for reduction(max : sup) schedule(static) if (np > 128)
    for (int i = 0; i < np; ++i) {
        const auto [xi, yi] = r.pairs[i];
        for (int j = i + 1; j < np; ++j) {
            const auto [xj, yj] = r.pairs[j];
            const double d = std::abs(x.dist(xi, xj) - y.dist(yi, yj));
            if (d > sup) sup = d;
        }
    }
    return sup;
}

double gh_lower_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    return std::abs(diameter(x) - diameter(y)) / 2.0;
}

namespace {

using Mask = std::uint32_t;

// Order on pair sets: subsets of the same x compare by their sorted member
// sequences, where a strict prefix loses to its extension (the extension's
// extra (x, y) pair precedes any (x', .) with x' > x in the flattened list).
// Equivalent bit form: a precedes b iff the lowest differing bit is in a.
bool mask_precedes(Mask a, Mask b) {
    const Mask diff = a ^ b;
    if (diff == 0) return false;
    return (diff & (~diff + 1)) & a;
}

struct SearchLevel {
    std::vector<double> h;   // h[y]: distortion forced by pairing the level's point with y
    std::vector<int> yorder;  // y indices sorted by (h, y)
};

struct SearchState {
    std::vector<Mask> assigned;  // subsets chosen for levels < level
    Mask covered = 0;            // union of assigned
    Mask partial = 0;            // subset under construction at `level`
    int level = 0;
    int pos = 0;  // next index into the level's yorder
    double dis = 0.0;
};

struct SearchCtx {
    const Matrix* da = nullptr;
    const Matrix* db = nullptr;
    int m = 0;
    int n = 0;
    Mask full = 0;
    std::vector<int> order;  // points of the first space, decreasing eccentricity
    double floor = 0.0;      // proven lower bound on the minimal distortion

    double local_best = std::numeric_limits<double>::infinity();
    std::atomic<double>* shared_best = nullptr;
    long long nodes = 0;

    double best() const {
        return shared_best ? shared_best->load(std::memory_order_relaxed) : local_best;
    }
    void offer(double v) {
        if (shared_best) {
            double cur = shared_best->load(std::memory_order_relaxed);
            while (v < cur && !shared_best->compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
            }
        } else if (v < local_best) {
            local_best = v;
        }
    }
    bool done() const { return best() <= floor; }
};

std::vector<int> eccentricity_order(const Matrix& d) {
    const int n = d.size();
    std::vector<double> ecc(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], d(i, j));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ecc[a] > ecc[b]; });
    return order;
}

// h[y] for pairing order[level] with y, given the subsets already assigned.
SearchLevel make_level(const SearchCtx& c, const std::vector<Mask>& assigned, int level) {
    SearchLevel lv;
    lv.h.assign(c.n, 0.0);
    const int p = c.order[level];
    for (int j = 0; j < level; ++j) {
        const double axx = (*c.da)(c.order[j], p);
        for (int yp = 0; yp < c.n; ++yp) {
            if (!((assigned[j] >> yp) & 1)) continue;
            for (int y = 0; y < c.n; ++y) {
                const double d = std::abs(axx - (*c.db)(yp, y));
                if (d > lv.h[y]) lv.h[y] = d;
            }
        }
    }
    lv.yorder.resize(c.n);
    std::iota(lv.yorder.begin(), lv.yorder.end(), 0);
    std::stable_sort(lv.yorder.begin(), lv.yorder.end(),
                     [&](int a, int b) { return lv.h[a] < lv.h[b]; });
    return lv;
}

double include_cost(const SearchCtx& c, const SearchLevel& lv, Mask partial, int y) {
    double cost = lv.h[y];
    for (int yp = 0; yp < c.n; ++yp)
        if ((partial >> yp) & 1) cost = std::max(cost, (*c.db)(yp, y));
    return cost;
}

void explore(SearchCtx& c, std::vector<SearchLevel>& levels, SearchState st);

void explore_descend(SearchCtx& c, std::vector<SearchLevel>& levels, SearchState& st) {
    if (st.level == c.m - 1) {
        c.offer(st.dis);  // complete correspondence; coverage was forced
        return;
    }
    SearchState next;
    next.assigned = st.assigned;
    next.assigned.push_back(st.partial);
    next.covered = st.covered | st.partial;
    next.level = st.level + 1;
    next.dis = st.dis;
    levels[next.level] = make_level(c, next.assigned, next.level);
    explore(c, levels, std::move(next));
}

void explore(SearchCtx& c, std::vector<SearchLevel>& levels, SearchState st) {
    ++c.nodes;
    if (st.dis >= c.best() || c.done()) return;
    const SearchLevel& lv = levels[st.level];
    if (st.pos == c.n) {
        if (st.partial == 0) return;
        explore_descend(c, levels, st);
        return;
    }
    const int y = lv.yorder[st.pos];
    const bool last = st.level == c.m - 1;
    const bool forced = last && !((st.covered >> y) & 1);

    const double with_y = std::max(st.dis, include_cost(c, lv, st.partial, y));
    if (with_y < c.best()) {
        SearchState in = st;
        in.partial |= Mask{1} << y;
        in.pos += 1;
        in.dis = with_y;
        explore(c, levels, std::move(in));
    }
    if (!forced) {
        SearchState out = std::move(st);
        out.pos += 1;
        explore(c, levels, out);
    }
}

// Upper-bound seed: match the two eccentricity orders proportionally by rank,
// in both directions so coverage holds on both sides.
Correspondence rank_matching(const Matrix& da, const Matrix& db) {
    const int m = da.size(), n = db.size();
    const auto oa = eccentricity_order(da);
    const auto ob = eccentricity_order(db);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) {
        const int j = (m == 1) ? 0 : static_cast<int>(std::llround(double(i) * (n - 1) / (m - 1)));
        pairs.emplace_back(oa[i], ob[j]);
    }
    for (int j = 0; j < n; ++j) {
        const int i = (n == 1) ? 0 : static_cast<int>(std::llround(double(j) * (m - 1) / (n - 1)));
        pairs.emplace_back(oa[i], ob[j]);
    }
    return Correspondence(m, n, std::move(pairs));
}

double pairs_distortion(const Matrix& da, const Matrix& db,
                        const std::vector<std::pair<int, int>>& pairs) {
    double sup = 0.0;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            sup = std::max(sup, std::abs(da(pairs[i].first, pairs[j].first) -
                                         db(pairs[i].second, pairs[j].second)));
    return sup;
}

// Phase 1: exact minimal distortion.
double minimal_distortion(const Matrix& da, const Matrix& db, double seed_dis, double floor,
                          bool parallel, long long& nodes) {
    SearchCtx root;
    root.da = &da;
    root.db = &db;
    root.m = da.size();
    root.n = db.size();
    root.full = (root.n == 32) ? ~Mask{0} : ((Mask{1} << root.n) - 1);
    root.order = eccentricity_order(da);
    root.floor = floor;
    root.local_best = seed_dis;

    std::vector<SearchLevel> levels(root.m);
    levels[0] = make_level(root, {}, 0);

    if (!parallel) {
        explore(root, levels, SearchState{});
        nodes = root.nodes;
        return root.local_best;
    }

    // Expand the decision tree breadth-first into independent subproblems,
    // then let workers race them against one shared incumbent. The minimum is
    // engine-independent; only the node count depends on scheduling.
    std::atomic<double> best{seed_dis};
    root.shared_best = &best;
    int target = 64;
#ifdef _OPENMP
    target = std::max(64, 8 * omp_get_max_threads());
#endif
    std::vector<SearchState> frontier{SearchState{}};
    std::vector<SearchState> next_round;
    long long expansions = 0;
    while (static_cast<int>(frontier.size()) < target && !frontier.empty() && expansions < 4096) {
        next_round.clear();
        bool progressed = false;
        for (SearchState& st : frontier) {
            ++expansions;
            if (st.dis >= best.load()) continue;
            std::vector<SearchLevel> tmp(root.m);
            tmp[st.level] = make_level(root, st.assigned, st.level);
            const SearchLevel& lv = tmp[st.level];
            if (st.pos == root.n) {
                if (st.partial == 0) continue;
                if (st.level == root.m - 1) {
                    root.offer(st.dis);
                    continue;
                }
                SearchState next;
                next.assigned = st.assigned;
                next.assigned.push_back(st.partial);
                next.covered = st.covered | st.partial;
                next.level = st.level + 1;
                next.dis = st.dis;
                next_round.push_back(std::move(next));
                progressed = true;
                continue;
            }
            const int y = lv.yorder[st.pos];
            const bool forced = st.level == root.m - 1 && !((st.covered >> y) & 1);
            const double with_y = std::max(st.dis, include_cost(root, lv, st.partial, y));
            if (with_y < best.load()) {
                SearchState in = st;
                in.partial |= Mask{1} << y;
                in.pos += 1;
                in.dis = with_y;
                next_round.push_back(std::move(in));
            }
            if (!forced) {
                SearchState out = std::move(st);
                out.pos += 1;
                next_round.push_back(std::move(out));
            }
            progressed = true;
        }
        frontier.swap(next_round);
        if (!progressed) break;
    }

    std::atomic<long long> total_nodes{expansions};
    const int fs = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < fs; ++i) {
        SearchCtx c = root;  // cheap: matrices by pointer
        c.shared_best = &best;
        c.nodes = 0;
        std::vector<SearchLevel> lvls(c.m);
        lvls[frontier[i].level] = make_level(c, frontier[i].assigned, frontier[i].level);
        explore(c, lvls, frontier[i]);
        total_nodes.fetch_add(c.nodes, std::memory_order_relaxed);
    }
    nodes = total_nodes.load();
    return best.load();
}

// Phase 2 feasibility probe: can levels [x, m) be assigned, in index order,
// with total distortion <= vstar and full coverage?
struct WitnessCtx {
    const Matrix* da;
    const Matrix* db;
    int m, n;
    Mask full;
    double vstar;
    std::vector<std::pair<int, int>> pairs;  // pairs fixed so far (by x index)
};

double witness_add_cost(const WitnessCtx& c, int x, Mask partial, int y) {
    double cost = 0.0;
    for (auto [px, py] : c.pairs)
        cost = std::max(cost, std::abs((*c.da)(px, x) - (*c.db)(py, y)));
    for (int yp = 0; yp < c.n; ++yp)
        if ((partial >> yp) & 1) cost = std::max(cost, (*c.db)(yp, y));
    return cost;
}

bool feasible_from(WitnessCtx& c, int x, Mask covered, double dis);

bool feasible_subset(WitnessCtx& c, int x, Mask covered, Mask partial, int pos, double dis) {
    if (dis > c.vstar) return false;
    if (pos == c.n) {
        if (partial == 0) return false;
        if (x == c.m - 1) return true;  // coverage forced below
        const size_t mark = c.pairs.size();
        for (int y = 0; y < c.n; ++y)
            if ((partial >> y) & 1) c.pairs.emplace_back(x, y);
        const bool ok = feasible_from(c, x + 1, covered | partial, dis);
        c.pairs.resize(mark);
        return ok;
    }
    const bool forced = x == c.m - 1 && !((covered >> pos) & 1);
    const double with_y = std::max(dis, witness_add_cost(c, x, partial, pos));
    if (with_y <= c.vstar &&
        feasible_subset(c, x, covered, partial | (Mask{1} << pos), pos + 1, with_y))
        return true;
    if (forced) return false;
    return feasible_subset(c, x, covered, partial, pos + 1, dis);
}

bool feasible_from(WitnessCtx& c, int x, Mask covered, double dis) {
    if (x == c.m) return covered == c.full;
    return feasible_subset(c, x, covered, 0, 0, dis);
}

// Lexicographically smallest pair set among optimal witnesses, built by
// fixing subsets in x-index order, trying candidates in pair-set order.
Correspondence lexmin_witness(const Matrix& da, const Matrix& db, double vstar) {
    WitnessCtx c{&da, &db, da.size(), db.size(), 0, vstar, {}};
    c.full = (c.n == 32) ? ~Mask{0} : ((Mask{1} << c.n) - 1);
    if (c.m > 1 && c.n > 22)
        throw Error(ErrorKind::BudgetExceeded, "witness enumeration too large");

    std::vector<Mask> all_masks;
    if (c.m > 1) {
        all_masks.resize((size_t{1} << c.n) - 1);
        std::iota(all_masks.begin(), all_masks.end(), Mask{1});
        std::sort(all_masks.begin(), all_masks.end(), mask_precedes);
    }

    Mask covered = 0;
    double dis = 0.0;
    for (int x = 0; x < c.m; ++x) {
        std::vector<Mask> candidates;
        if (x < c.m - 1) {
            candidates = all_masks;
        } else {
            const Mask forced = c.full & ~covered;
            Mask w = covered;
            while (true) {  // all submasks of `covered`, then sort
                if ((w | forced) != 0) candidates.push_back(w | forced);
                if (w == 0) break;
                w = (w - 1) & covered;
            }
            std::sort(candidates.begin(), candidates.end(), mask_precedes);
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        }

        bool fixed = false;
        for (Mask s : candidates) {
            double d2 = dis;
            Mask partial = 0;
            bool over = false;
            for (int y = 0; y < c.n && !over; ++y) {
                if (!((s >> y) & 1)) continue;
                d2 = std::max(d2, witness_add_cost(c, x, partial, y));
                partial |= Mask{1} << y;
                over = d2 > vstar;
            }
            if (over) continue;
            if (x < c.m - 1) {
                const size_t mark = c.pairs.size();
                for (int y = 0; y < c.n; ++y)
                    if ((s >> y) & 1) c.pairs.emplace_back(x, y);
                if (feasible_from(c, x + 1, covered | s, d2)) {
                    covered |= s;
                    dis = d2;
                    fixed = true;
                    break;
                }
                c.pairs.resize(mark);
            } else {
                for (int y = 0; y < c.n; ++y)
                    if ((s >> y) & 1) c.pairs.emplace_back(x, y);
                covered |= s;
                dis = d2;
                fixed = true;
                break;
            }
        }
        if (!fixed)
            throw Error(ErrorKind::CoverageViolation, "no optimal witness found; search invariant broken");
    }
    return Correspondence(c.m, c.n, std::move(c.pairs));
}

}  // namespace

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const GhBudget& budget,
                  GhEngine engine) {
    const long long cells = static_cast<long long>(x.size()) * y.size();
    if (cells > budget.max_cells)
        throw Error(ErrorKind::BudgetExceeded,
                    "|X|*|Y| = " + std::to_string(cells) + " exceeds budget of " +
                        std::to_string(budget.max_cells));
    if (x.size() > 31 || y.size() > 31)
        throw Error(ErrorKind::BudgetExceeded, "spaces beyond 31 points are not supported");

    // Canonical orientation: solve with the lexicographically smaller
    // (size, matrix) key first, so swapped arguments yield the transposed
    // witness and the identical value.
    const bool swap = [&] {
        if (x.size() != y.size()) return x.size() > y.size();
        return std::lexicographical_compare(y.matrix().data().begin(), y.matrix().data().end(),
                                            x.matrix().data().begin(), x.matrix().data().end());
    }();
    const Matrix& da = swap ? y.matrix() : x.matrix();
    const Matrix& db = swap ? x.matrix() : y.matrix();

    const Correspondence seed = rank_matching(da, db);
    std::vector<std::pair<int, int>> seed_pairs = seed.pairs;
    double seed_dis = pairs_distortion(da, db, seed_pairs);
    // The complete relation is another cheap seed: its distortion is
    // max(diam X, diam Y).
    double full_dis = 0.0;
    for (int i = 0; i < da.size(); ++i)
        for (int j = 0; j < da.size(); ++j) full_dis = std::max(full_dis, da(i, j));
    for (int i = 0; i < db.size(); ++i)
        for (int j = 0; j < db.size(); ++j) full_dis = std::max(full_dis, db(i, j));
    seed_dis = std::min(seed_dis, full_dis);

    const double floor = std::abs(diameter(x) - diameter(y));

    bool parallel = false;
#ifdef _OPENMP
    parallel = engine == GhEngine::Parallel ||
               (engine == GhEngine::Auto && omp_get_max_threads() > 1 && cells >= 20);
#else
    if (engine == GhEngine::Parallel) parallel = false;
#endif

    GHResult out;
    double vstar = seed_dis;
    if (seed_dis > floor) {
        vstar = minimal_distortion(da, db, seed_dis, floor, parallel, out.nodes_explored);
    }
    out.value = vstar / 2.0;
    out.exact = true;
    Correspondence w = lexmin_witness(da, db, vstar);
    out.witness = swap ? w.transposed() : std::move(w);
    return out;
}

}  // namespace ghgeom
