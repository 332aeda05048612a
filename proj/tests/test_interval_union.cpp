#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "ghgeom/generators.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/reference.hpp"

using namespace ghgeom;

namespace {

// One edge a-b of length 10: the segment [0, 10].
MetricTree segment_tree() { return MetricTree{{"a", "b"}, {TreeEdge{0, 1, 10.0}}}; }

// Star with center c and legs of lengths 2, 3, 4.
MetricTree y_tree() {
  return MetricTree{{"c", "a", "b", "d"},
                    {TreeEdge{0, 1, 2.0}, TreeEdge{0, 2, 3.0}, TreeEdge{0, 3, 4.0}}};
}

IntervalUnion span(const MetricTree& t, int e, double lo, double hi) {
  IntervalUnion s(t);
  s.add(e, lo, hi);
  s.normalize();
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("interval union");

TEST_CASE("normalize sorts, merges, and clamps") {
  MetricTree t = segment_tree();
  IntervalUnion s(t);
  s.add(0, 4.0, 6.0);
  s.add(0, 1.0, 2.0);
  s.add(0, 5.5, 7.0);
  s.add(0, -1.0, 0.5);  // clamped to [0, 0.5]
  s.normalize();

  REQUIRE(s.on_edge(0).size() == 3);
  CHECK(s.on_edge(0)[0].lo == 0.0);
  CHECK(s.on_edge(0)[0].hi == 0.5);
  CHECK(s.on_edge(0)[1].lo == 1.0);
  CHECK(s.on_edge(0)[2].lo == 4.0);
  CHECK(s.on_edge(0)[2].hi == 7.0);
  CHECK(s.piece_count() == 3);
  CHECK_FALSE(s.empty());

  SUBCASE("touching intervals merge") {
    IntervalUnion u(t);
    u.add(0, 1.0, 3.0);
    u.add(0, 3.0, 5.0);
    u.normalize();
    REQUIRE(u.on_edge(0).size() == 1);
    CHECK(u.on_edge(0)[0].hi == 5.0);
  }

  SUBCASE("entirely outside the edge is dropped") {
    IntervalUnion u(t);
    u.add(0, 11.0, 12.0);
    u.normalize();
    CHECK(u.empty());
  }

  SUBCASE("bad edge index") {
    IntervalUnion u(t);
    CHECK_THROWS_AS(u.add(3, 0.0, 1.0), Error);
  }
}

TEST_CASE("covered vertices materialize on every incident edge") {
  MetricTree t = y_tree();
  IntervalUnion s(t);
  s.add(0, 0.0, 0.5);  // covers the center vertex via leg c-a
  s.normalize();

  CHECK(s.vertex_covered(0));
  REQUIRE(s.on_edge(1).size() == 1);
  CHECK(s.on_edge(1)[0].lo == 0.0);
  CHECK(s.on_edge(1)[0].hi == 0.0);
  REQUIRE(s.on_edge(2).size() == 1);
  CHECK(s.contains(TreePoint::at_vertex(t, 0)));
  CHECK(s.contains(TreePoint::on_edge(t, 0, 0.25)));
  CHECK_FALSE(s.contains(TreePoint::on_edge(t, 1, 1.5)));
  CHECK_FALSE(s.contains(TreePoint::at_vertex(t, 1)));
}

TEST_CASE("whole, complement, and round trips") {
  MetricTree t = segment_tree();
  IntervalUnion w = IntervalUnion::whole(t);
  CHECK(w.piece_count() == 1);
  CHECK(complement(w).empty());

  IntervalUnion mid = span(t, 0, 3.0, 7.0);
  IntervalUnion c = complement(mid);
  REQUIRE(c.on_edge(0).size() == 2);
  CHECK(c.on_edge(0)[0].lo == 0.0);
  CHECK(c.on_edge(0)[0].hi == 3.0);  // closure keeps the shared boundary point
  CHECK(c.on_edge(0)[1].lo == 7.0);
  CHECK(c.on_edge(0)[1].hi == 10.0);

  IntervalUnion back = complement(c);
  REQUIRE(back.on_edge(0).size() == 1);
  CHECK(back.on_edge(0)[0].lo == 3.0);
  CHECK(back.on_edge(0)[0].hi == 7.0);

  IntervalUnion none(t);
  CHECK(complement(none).piece_count() == 1);
}

TEST_CASE("union and intersection work per edge") {
  MetricTree t = segment_tree();
  IntervalUnion a = span(t, 0, 0.0, 5.0);
  IntervalUnion b = span(t, 0, 3.0, 10.0);

  IntervalUnion u = unite(a, b);
  REQUIRE(u.on_edge(0).size() == 1);
  CHECK(u.on_edge(0)[0].hi == 10.0);

  IntervalUnion i = intersect(a, b);
  REQUIRE(i.on_edge(0).size() == 1);
  CHECK(i.on_edge(0)[0].lo == 3.0);
  CHECK(i.on_edge(0)[0].hi == 5.0);

  SUBCASE("touching closed intervals intersect in a point") {
    IntervalUnion c = span(t, 0, 0.0, 3.0);
    IntervalUnion d = span(t, 0, 3.0, 10.0);
    IntervalUnion x = intersect(c, d);
    REQUIRE(x.piece_count() == 1);
    CHECK(x.on_edge(0)[0].lo == 3.0);
    CHECK(x.on_edge(0)[0].hi == 3.0);
  }

  SUBCASE("different trees are rejected") {
    MetricTree other = segment_tree();
    CHECK_THROWS_AS(unite(a, IntervalUnion(other)), Error);
  }
}

TEST_CASE("from_points and add_point") {
  MetricTree t = segment_tree();
  IntervalUnion s = IntervalUnion::from_points(
      t, std::vector<TreePoint>{TreePoint::at_vertex(t, 0), TreePoint::on_edge(t, 0, 4.0)});
  CHECK(s.piece_count() == 2);
  CHECK(s.contains(TreePoint::at_vertex(t, 0)));
  CHECK(s.contains(TreePoint::on_edge(t, 0, 4.0)));
  CHECK_FALSE(s.contains(TreePoint::on_edge(t, 0, 2.0)));
  CHECK(s.endpoints().size() == 2);

  SUBCASE("edgeless trees cannot carry interval unions") {
    MetricTree lone({"x"}, {});
    IntervalUnion u(lone);
    CHECK_THROWS_AS(u.add_point(TreePoint::at_vertex(lone, 0)), Error);
  }
}

TEST_CASE("segments lay down the unique geodesic") {
  SUBCASE("within one edge") {
    MetricTree t = segment_tree();
    IntervalUnion s = IntervalUnion::segment(t, TreePoint::on_edge(t, 0, 2.0),
                                             TreePoint::on_edge(t, 0, 6.0));
    REQUIRE(s.piece_count() == 1);
    CHECK(s.on_edge(0)[0].lo == 2.0);
    CHECK(s.on_edge(0)[0].hi == 6.0);
  }

  SUBCASE("across the center of a star") {
    MetricTree t = y_tree();
    IntervalUnion s = IntervalUnion::segment(t, TreePoint::on_edge(t, 0, 1.0),
                                             TreePoint::on_edge(t, 1, 2.0));
    REQUIRE(s.on_edge(0).size() == 1);
    CHECK(s.on_edge(0)[0].lo == 0.0);
    CHECK(s.on_edge(0)[0].hi == 1.0);
    REQUIRE(s.on_edge(1).size() == 1);
    CHECK(s.on_edge(1)[0].lo == 0.0);
    CHECK(s.on_edge(1)[0].hi == 2.0);
    // The covered center materializes as a degenerate piece on the third leg.
    REQUIRE(s.on_edge(2).size() == 1);
    CHECK(s.on_edge(2)[0].lo == 0.0);
    CHECK(s.on_edge(2)[0].hi == 0.0);
    CHECK_FALSE(s.contains(TreePoint::on_edge(t, 2, 1.0)));
    CHECK(u_diameter(s) == 0.0);  // a segment is connected
  }

  SUBCASE("vertex to vertex spans whole edges") {
    MetricTree t = y_tree();
    IntervalUnion s =
        IntervalUnion::segment(t, TreePoint::at_vertex(t, 1), TreePoint::at_vertex(t, 3));
    CHECK(s.on_edge(0).size() == 1);
    CHECK(s.on_edge(0)[0].hi == 2.0);
    CHECK(s.on_edge(2).size() == 1);
    CHECK(s.on_edge(2)[0].hi == 4.0);
  }

  SUBCASE("a segment from a point to itself is that point") {
    MetricTree t = y_tree();
    IntervalUnion s =
        IntervalUnion::segment(t, TreePoint::at_vertex(t, 0), TreePoint::at_vertex(t, 0));
    CHECK(s.contains(TreePoint::at_vertex(t, 0)));
    CHECK_FALSE(s.contains(TreePoint::on_edge(t, 0, 1.0)));
  }
}

TEST_CASE("distances from points to unions") {
  MetricTree t = segment_tree();
  IntervalUnion s = span(t, 0, 0.0, 2.0);
  CHECK(point_to_union(TreePoint::on_edge(t, 0, 5.0), s) == 3.0);
  CHECK(point_to_union(TreePoint::on_edge(t, 0, 1.0), s) == 0.0);
  CHECK(point_to_union(TreePoint::at_vertex(t, 1), s) == 8.0);
  CHECK_THROWS_AS(point_to_union(TreePoint::at_vertex(t, 0), IntervalUnion(t)), Error);

  SUBCASE("across a star") {
    MetricTree y = y_tree();
    IntervalUnion leg = span(y, 1, 1.0, 3.0);  // on c-b
    CHECK(point_to_union(TreePoint::on_edge(y, 0, 1.0), leg) == 2.0);  // 1 to c, 1 into the leg
    CHECK(point_to_union(TreePoint::on_edge(y, 1, 2.0), leg) == 0.0);
  }
}

TEST_CASE("neighborhoods grow by the radius") {
  MetricTree t = segment_tree();
  IntervalUnion a = IntervalUnion::from_points(t, std::vector<TreePoint>{TreePoint::at_vertex(t, 0)});

  IntervalUnion b3 = neighborhood(a, 3.0);
  REQUIRE(b3.piece_count() == 1);
  CHECK(b3.on_edge(0)[0].lo == 0.0);
  CHECK(b3.on_edge(0)[0].hi == 3.0);

  IntervalUnion mid = span(t, 0, 4.0, 6.0);
  IntervalUnion b1 = neighborhood(mid, 1.0);
  CHECK(b1.on_edge(0)[0].lo == 3.0);
  CHECK(b1.on_edge(0)[0].hi == 7.0);

  CHECK(neighborhood(mid, 0.0).on_edge(0)[0].lo == 4.0);
  CHECK_THROWS_AS(neighborhood(mid, -1.0), Error);

  SUBCASE("growth spills across vertices") {
    MetricTree y = y_tree();
    IntervalUnion tip = IntervalUnion::from_points(
        y, std::vector<TreePoint>{TreePoint::at_vertex(y, 1)});  // leaf a, 2 from center
    IntervalUnion b = neighborhood(tip, 3.0);
    CHECK(b.on_edge(0)[0].lo == 0.0);   // the whole leg c-a
    CHECK(b.on_edge(0)[0].hi == 2.0);
    CHECK(b.on_edge(1)[0].hi == 1.0);   // 1 deep into c-b
    CHECK(b.on_edge(2)[0].hi == 1.0);   // 1 deep into c-d
  }
}

TEST_CASE("exact Hausdorff between unions") {
  MetricTree t = segment_tree();

  SUBCASE("frozen values on the segment") {
    IntervalUnion a = span(t, 0, 0.0, 2.0);
    IntervalUnion b = span(t, 0, 8.0, 10.0);
    CHECK(oriented_hausdorff_subsets(a, b) == 8.0);
    CHECK(oriented_hausdorff_subsets(b, a) == 8.0);
    CHECK(hausdorff_subsets(a, b) == 8.0);

    IntervalUnion w = IntervalUnion::whole(t);
    IntervalUnion p = span(t, 0, 5.0, 5.0);
    CHECK(oriented_hausdorff_subsets(w, p) == 5.0);
    CHECK(oriented_hausdorff_subsets(p, w) == 0.0);
    CHECK(hausdorff_subsets(w, p) == 5.0);
    CHECK(hausdorff_subsets(w, w) == 0.0);
  }

  SUBCASE("empty operands are rejected") {
    IntervalUnion a = span(t, 0, 0.0, 2.0);
    CHECK_THROWS_AS(hausdorff_subsets(a, IntervalUnion(t)), Error);
    CHECK_THROWS_AS(hausdorff_subsets(IntervalUnion(t), a), Error);
  }

  SUBCASE("agrees with dense sampling on random unions") {
    std::mt19937_64 rng(mix_seed(7, 60));
    for (int trial = 0; trial < 8; ++trial) {
      MetricTree tree = random_tree(2 + int(rng() % 5), rng());
      auto random_union = [&](std::uint64_t s) {
        std::mt19937_64 r2(s);
        IntervalUnion u(tree);
        const int pieces = 1 + int(r2() % 3);
        for (int p = 0; p < pieces; ++p) {
          const int e = int(r2() % tree.edge_count());
          const double len = tree.edge(e).length;
          double lo = len * double(r2() % 1000) / 1000.0;
          double hi = len * double(r2() % 1000) / 1000.0;
          u.add(e, std::min(lo, hi), std::max(lo, hi));
        }
        u.normalize();
        return u;
      };
      IntervalUnion a = random_union(rng());
      IntervalUnion b = random_union(rng());
      if (a.empty() || b.empty()) continue;
      const double step = 0.02;
      const double exact = hausdorff_subsets(a, b);
      const double sampled = reference::union_hausdorff_sampled(a, b, step);
      CHECK(std::fabs(sampled - exact) <= 2.0 * step);  // every point is step-close to a sample
    }
  }
}

TEST_CASE("u-diameter measures the largest connectivity gap") {
  MetricTree t = segment_tree();

  SUBCASE("connected unions have u-diameter zero") {
    CHECK(u_diameter(IntervalUnion::whole(t)) == 0.0);
    CHECK(u_diameter(span(t, 0, 2.0, 7.0)) == 0.0);
  }

  SUBCASE("two blocks: the gap") {
    IntervalUnion s(t);
    s.add(0, 0.0, 4.0);
    s.add(0, 6.0, 10.0);
    s.normalize();
    CHECK(u_diameter(s) == 2.0);
  }

  SUBCASE("a unit net has u-diameter one") {
    std::vector<TreePoint> pts;
    for (int k = 0; k <= 10; ++k) pts.push_back(TreePoint::on_edge(t, 0, double(k)));
    IntervalUnion net = IntervalUnion::from_points(t, pts);
    CHECK(u_diameter(net) == 1.0);
  }

  SUBCASE("gaps across a star center combine") {
    MetricTree y = y_tree();
    IntervalUnion s(y);
    s.add(0, 2.0, 2.0);  // leaf a
    s.add(1, 3.0, 3.0);  // leaf b
    s.normalize();
    CHECK(u_diameter(s) == 5.0);
  }

  SUBCASE("matches the sampled oracle") {
    MetricTree y = y_tree();
    IntervalUnion s(y);
    s.add(0, 0.0, 1.0);
    s.add(1, 2.0, 3.0);
    s.add(2, 1.0, 2.5);
    s.normalize();
    const double step = 0.01;
    CHECK(std::fabs(u_diameter(s) - reference::u_diameter_sampled(s, step)) <= 2.0 * step);
    CHECK_THROWS_AS(u_diameter(IntervalUnion(y)), Error);
  }
}

TEST_SUITE_END();
