#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dtl/diagram.hpp"

#include "oracles.hpp"

#include <set>

using namespace dtl;

TEST_CASE("enumeration counts match the closed formulas") {
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_diagrams(DiagramParams::brauer_n(n)).size() ==
          static_cast<std::size_t>(oracle::double_factorial(2 * n - 1)));
  CHECK(enumerate_diagrams(DiagramParams::brauer_n(3)).size() == 15);
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_diagrams(DiagramParams::tl_n(n)).size() ==
          static_cast<std::size_t>(oracle::catalan(n)));
  CHECK(enumerate_diagrams(DiagramParams::tl_n(4)).size() == 14);
}

TEST_CASE("partition enumeration matches bell numbers") {
  // level 2n has Bell(2n) diagrams, level 2n-1 has Bell(2n-1)
  CHECK(enumerate_diagrams(DiagramParams::partition_level(4)).size() ==
        static_cast<std::size_t>(oracle::bell(4)));
  CHECK(enumerate_diagrams(DiagramParams::partition_level(4)).size() == 15);
  CHECK(enumerate_diagrams(DiagramParams::partition_level(3)).size() == 5);
  CHECK(enumerate_diagrams(DiagramParams::partition_level(6)).size() ==
        static_cast<std::size_t>(oracle::bell(6)));
  CHECK(enumerate_diagrams(DiagramParams::partition_level(5)).size() ==
        static_cast<std::size_t>(oracle::bell(5)));
}

TEST_CASE("walled enumeration matches brute-force filter and the sum formula") {
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 4; ++s) {
      auto direct = enumerate_diagrams(DiagramParams::walled_rs(r, s));
      CHECK(direct.size() == static_cast<std::size_t>(oracle::walled_filter_count(r, s)));
      CHECK(direct.size() == static_cast<std::size_t>(oracle::walled_count(r, s)));
      CHECK(direct.size() == static_cast<std::size_t>(oracle::factorial(r + s)));
    }
  CHECK(enumerate_diagrams(DiagramParams::walled_rs(1, 2)).size() == 6);
}

TEST_CASE("canonical order is duplicate free and sorted") {
  auto tl = enumerate_diagrams(DiagramParams::tl_n(4));
  for (std::size_t i = 1; i < tl.size(); ++i) CHECK(tl[i - 1] < tl[i]);
}

TEST_CASE("composition of brauer generators") {
  auto p = DiagramParams::brauer_n(2);
  Diagram e1 = e_diagram(p, 1), s1 = s_diagram(p, 1), id = identity_diagram(p);
  auto r = compose(e1, e1);
  CHECK(r.loops == 1);
  CHECK(r.diagram == e1);
  auto r2 = compose(s1, s1);
  CHECK(r2.loops == 0);
  CHECK(r2.diagram == id);
  auto r3 = compose(e1, s1);
  CHECK(r3.loops == 0);
  CHECK(r3.diagram == e1);
}

TEST_CASE("composition of partition generators") {
  auto p2 = DiagramParams::partition_level(2);
  Diagram p1 = p_diagram(p2, 1);
  auto r = compose(p1, p1);
  CHECK(r.loops == 1);
  CHECK(r.diagram == p1);

  auto p3 = DiagramParams::partition_level(3);
  Diagram q = p_diagram(p3, 2);
  auto r2 = compose(q, q);
  CHECK(r2.loops == 0);
  CHECK(r2.diagram == q);
}

TEST_CASE("involution") {
  auto p = DiagramParams::brauer_n(3);
  CHECK(involute(e_diagram(p, 1)) == e_diagram(p, 1));
  CHECK(involute(identity_diagram(p)) == identity_diagram(p));
  // 3-cycle reverses under the reflection
  Diagram cyc(p, {{0, 4}, {1, 5}, {2, 3}});  // T1-B2, T2-B3, T3-B1
  Diagram inv(p, {{0, 5}, {1, 3}, {2, 4}});  // T1-B3, T2-B1, T3-B2
  CHECK(involute(cyc) == inv);
  for (const auto& d : enumerate_diagrams(p)) CHECK(involute(involute(d)) == d);
  for (const auto& d : enumerate_diagrams(DiagramParams::partition_level(4)))
    CHECK(involute(involute(d)) == d);
}

TEST_CASE("involution reverses products") {
  auto p = DiagramParams::brauer_n(2);
  auto all = enumerate_diagrams(p);
  for (const auto& x : all)
    for (const auto& y : all) {
      auto xy = compose(x, y);
      auto iyx = compose(involute(y), involute(x));
      CHECK(involute(xy.diagram) == iyx.diagram);
      CHECK(xy.loops == iyx.loops);
    }
}

TEST_CASE("through count") {
  auto p = DiagramParams::brauer_n(2);
  CHECK(through_count(identity_diagram(p)) == 2);
  CHECK(through_count(e_diagram(p, 1)) == 0);
  auto pp = DiagramParams::partition_level(4);
  Diagram d(pp, {{0, 1, 2}, {3}});  // {T1,T2,B1},{B2}
  CHECK(through_count(d) == 1);
}

TEST_CASE("through count never grows under composition") {
  for (auto params : {DiagramParams::brauer_n(3), DiagramParams::partition_level(4)}) {
    auto all = enumerate_diagrams(params);
    for (const auto& x : all)
      for (const auto& y : all) {
        int t = through_count(compose(x, y).diagram);
        CHECK(t <= std::min(through_count(x), through_count(y)));
      }
  }
}

TEST_CASE("composition is associative on loop data") {
  for (auto params : {DiagramParams::brauer_n(2), DiagramParams::tl_n(3),
                      DiagramParams::partition_level(2)}) {
    auto all = enumerate_diagrams(params);
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all) {
          auto xy = compose(x, y);
          auto xy_z = compose(xy.diagram, z);
          auto yz = compose(y, z);
          auto x_yz = compose(x, yz.diagram);
          CHECK(xy_z.diagram == x_yz.diagram);
          CHECK(xy.loops + xy_z.loops == x_yz.loops + yz.loops);
        }
  }
}

TEST_CASE("walled composition stays walled; odd partition stays odd") {
  auto wp = DiagramParams::walled_rs(1, 2);
  auto all = enumerate_diagrams(wp);
  for (const auto& x : all)
    for (const auto& y : all) CHECK(respects_wall(compose(x, y).diagram));
  auto op = DiagramParams::partition_level(3);
  auto allp = enumerate_diagrams(op);
  for (const auto& x : allp)
    for (const auto& y : allp) CHECK_NOTHROW(compose(x, y));
}

TEST_CASE("strand depth: nesting count with west basepoint") {
  auto t2 = DiagramParams::tl_n(2);
  Diagram e1 = e_diagram(t2, 1);
  // both strands of e_1 touch the westmost face
  CHECK(strand_depth(e1, 0) == 1);
  CHECK(strand_depth(e1, 1) == 1);
  Diagram id2 = identity_diagram(t2);
  // blocks sorted: {T1,B1} first, {T2,B2} second
  CHECK(strand_depth(id2, 0) == 1);
  CHECK(strand_depth(id2, 1) == 2);

  // e_1 e_3 in T_6 has its 6th strand at depth 2 (the paper's example)
  auto t6 = DiagramParams::tl_n(6);
  Diagram d(t6, {{0, 1}, {6, 7}, {2, 3}, {8, 9}, {4, 10}, {5, 11}});
  auto depths = strand_depths(d);
  const auto& blocks = d.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == std::vector<int>{5, 11}) CHECK(depths[i] == 2);  // T6-B6
    if (blocks[i] == std::vector<int>{4, 10}) CHECK(depths[i] == 1);  // T5-B5
  }
}

TEST_CASE("strand depth agrees with the region-walk oracle") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : enumerate_diagrams(DiagramParams::tl_n(n))) {
      auto depths = strand_depths(d);
      for (std::size_t s = 0; s < depths.size(); ++s)
        CHECK(depths[s] == oracle::region_tree_depth(d, s));
    }
  }
}

TEST_CASE("contour enumeration counts via brute-force labeling oracle") {
  // m=2, d=1: label each strand of every TL diagram and keep the labelings
  // whose nonzero labels sit at oracle depth <= 1
  for (int n = 1; n <= 5; ++n) {
    auto cp = DiagramParams::contour_n(n, 2, 1);
    auto direct = enumerate_diagrams(cp);
    long brute = 0;
    for (const auto& d : enumerate_diagrams(DiagramParams::tl_n(n))) {
      std::size_t strands = d.blocks().size();
      for (std::size_t code = 0; code < (static_cast<std::size_t>(1) << strands); ++code) {
        bool ok = true;
        for (std::size_t s = 0; s < strands; ++s)
          if ((code >> s & 1) && oracle::region_tree_depth(d, s) > 1) ok = false;
        if (ok) ++brute;
      }
    }
    CHECK(direct.size() == static_cast<std::size_t>(brute));
  }
}

TEST_CASE("contour composition carries loop labels") {
  auto cp = DiagramParams::contour_n(2, 2, 1);
  Diagram e1 = e_diagram(cp, 1);
  Diagram g = contour_label_diagram(cp, 1, 1);
  // e_1 * a^{(1)} puts the label on the top arc of e_1
  auto r = compose(e1, g);
  CHECK(r.loops == 0);
  // closing against unlabeled e_1: one loop of total label 1
  auto r2 = compose(r.diagram, e1);
  CHECK(r2.loops == 1);
  REQUIRE(r2.loop_labels.size() == 1);
  CHECK(r2.loop_labels[0] == 1);
  CHECK(r2.diagram == e1);
  // involution negates labels mod m
  CHECK(involute(r.diagram) == compose(g, e1).diagram);
}

TEST_CASE("diagram text round trip") {
  auto p = DiagramParams::brauer_n(2);
  Diagram e1 = e_diagram(p, 1);
  CHECK(e1.str() == "[[T1,T2],[B1,B2]]");
  CHECK(parse_diagram(p, e1.str()) == e1);
  auto pp = DiagramParams::partition_level(4);
  Diagram d(pp, {{0, 1, 2}, {3}});
  CHECK(d.str() == "{{T1,T2,B1},{B2}}");
  CHECK(parse_diagram(pp, d.str()) == d);
  auto cp = DiagramParams::contour_n(2, 2, 1);
  Diagram g = contour_label_diagram(cp, 1, 1);
  CHECK(parse_diagram(cp, g.str()) == g);
  for (const auto& x : enumerate_diagrams(cp)) CHECK(parse_diagram(cp, x.str()) == x);
  CHECK_THROWS_AS(parse_diagram(p, "[[T1,T2]"), std::invalid_argument);
}

TEST_CASE("family and rank mismatches are rejected") {
  Diagram a = identity_diagram(DiagramParams::brauer_n(2));
  Diagram b = identity_diagram(DiagramParams::brauer_n(3));
  CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
  Diagram c = identity_diagram(DiagramParams::tl_n(2));
  CHECK_THROWS_AS(compose(a, c), std::invalid_argument);
}
