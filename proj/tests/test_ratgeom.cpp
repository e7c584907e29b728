#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symbreak/ratgeom.hpp"

using namespace symbreak;
using testing::q;
using testing::qv;

namespace {

Simplex unit2() { return Simplex({qv("0,0"), qv("1,0"), qv("0,1")}); }

std::set<RatVec> as_set(const std::vector<RatVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(q("3/6") == rat(1, 2));
  CHECK(q("-2/4") == rat(-1, 2));
  CHECK(q("7") == 7);
  bool conv = false;
  CHECK(parse_rational("0.35", &conv) == rat(7, 20));
  CHECK(conv);
  conv = false;
  parse_rational("1/3", &conv);
  CHECK_FALSE(conv);
  // more than twelve digits round to denominator 10^12
  CHECK(q("0.1234567890125") == Rational(mpz_class("123456789013"), mpz_class("1000000000000")));
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("1/x"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
  CHECK_THROWS_AS(q("1.2.3"), ParseError);
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(to_string(rat(-1, 3)) == "-1/3");
  CHECK(qv("1/2, 1/3,0") == RatVec{rat(1, 2), rat(1, 3), Rational(0)});
}

TEST_CASE("approximation and square roots") {
  CHECK(approximate(q("355/113"), mpz_class(200)) == q("355/113"));
  CHECK(approximate(from_double(3.14159265358979), mpz_class(10)) == q("22/7"));
  CHECK(exact_sqrt(q("36/25")) == q("6/5"));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  Rational r = sqrt_floor(Rational(2), mpz_class(1000));
  CHECK(r * r <= 2);
  CHECK((r + rat(1, 1000)) * (r + rat(1, 1000)) > 2);
  CHECK(floor_q(q("-1/2")) == -1);
  CHECK(ceil_q(q("-1/2")) == 0);
}

TEST_CASE("barycentric coordinates") {
  CHECK(barycentric(unit2(), qv("0,0")) == RatVec{1, 0, 0});
  CHECK(barycentric(unit2(), qv("1/3,1/3")) == qv("1/3,1/3,1/3"));
  CHECK(barycentric(unit2(), qv("1/2,1/4")) == qv("1/4,1/2,1/4"));
  CHECK_THROWS_AS(barycentric(Simplex({qv("0,0"), qv("1,1"), qv("2,2")}), qv("0,0")), DegenerateSimplex);
  CHECK_THROWS_AS(barycentric(unit2(), qv("0,0,0")), DimensionMismatch);
}

TEST_CASE("closed simplex membership") {
  CHECK(contains_closed(unit2(), qv("1/3,1/3")));
  CHECK_FALSE(contains_closed(unit2(), qv("1,1")));
  CHECK(contains_closed(unit2(), qv("1/2,1/2")));
}

TEST_CASE("vertex enumeration of intersections") {
  Polytope sq = Polytope::box(qv("0,0"), qv("1,1"));
  Polytope half = Polytope::from_hrep({{qv("1,0"), rat(1, 2)}}, 2);
  auto v = intersect_vertices(sq, half);
  CHECK(as_set(v) == std::set<RatVec>{qv("0,0"), qv("1/2,0"), qv("1/2,1"), qv("0,1")});

  Polytope tri = unit2().polytope();
  CHECK(as_set(intersect_vertices(tri, tri)) == as_set(unit2().vertices));
  CHECK(intersect_vertices(sq, Polytope::box(qv("2,2"), qv("3,3"))).empty());
}

TEST_CASE("disjointness with separator or witness") {
  Polytope a = Polytope::box(qv("0,0"), qv("1,1"));
  auto r = disjoint_closed(a, Polytope::box(qv("2,0"), qv("3,1")));
  CHECK(r.disjoint);
  CHECK(r.reason == DisjointResult::Reason::SeparatingFacet);
  // the separator keeps one box on each side
  for (const auto& v : a.vertices()) CHECK((r.separator_owner == 0 ? r.separator.contains(v) : !r.separator.strictly_contains(v)));

  auto t = disjoint_closed(a, Polytope::box(qv("1,1"), qv("2,2")));
  CHECK_FALSE(t.disjoint);
  CHECK(t.witness == qv("1,1"));
  CHECK(t.interiors_disjoint);

  // open A_1 and A_2 of S_2 share only (1/2, 1/2)
  Polytope a1 = Polytope::from_hrep({{qv("-1,0"), rat(-1, 2)}, {qv("0,-1"), 0}, {qv("1,1"), 1}}, 2);
  Polytope a2 = Polytope::from_hrep({{qv("0,-1"), rat(-1, 2)}, {qv("-1,0"), 0}, {qv("1,1"), 1}}, 2);
  auto c = disjoint_closed(a1, a2);
  CHECK_FALSE(c.disjoint);
  CHECK(c.common_vertices == std::vector<RatVec>{qv("1/2,1/2")});
  CHECK(c.interiors_disjoint);
}

TEST_CASE("Farkas certificate for disjoint sets without a separating facet") {
  // two thin triangles crossing no facet plane of each other's vertex sets
  Polytope a = Simplex({qv("0,0"), qv("4,1"), qv("1,4")}).polytope();
  Polytope b = Simplex({qv("5,5"), qv("3,6"), qv("6,3")}).polytope();
  auto r = disjoint_closed(a, b);
  REQUIRE(r.disjoint);
  if (r.reason == DisjointResult::Reason::Farkas) {
    auto rows = *a.hrep;
    rows.insert(rows.end(), b.hrep->begin(), b.hrep->end());
    CHECK(check_farkas(rows, r.farkas));
  }
}

TEST_CASE("property: affine maps and barycentrics round-trip") {
  testing::RatGen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RatVec> src, dst;
    for (int i = 0; i < 4; ++i) {
      src.push_back(g.torus(3));
      dst.push_back(g.torus(3));
    }
    if (affine_dim(src) < 3) continue;
    AffineMap f = affine_from_points(src, dst);
    for (int i = 0; i < 4; ++i) CHECK(f(src[i]) == dst[i]);
    RatVec x = g.torus(3);
    auto b = barycentric(Simplex(src), x);
    CHECK(vsum(b) == 1);
    RatVec back(3, Rational(0));
    for (int i = 0; i < 4; ++i) back = vadd(back, vscale(b[i], src[i]));
    CHECK(back == x);
  }
}

TEST_CASE("matrix helpers") {
  RatMatrix m = RatMatrix::from_rows({qv("0,1/2"), qv("2,0")});
  CHECK(power(m, 2) == RatMatrix::identity(2));
  CHECK(det(m) == -1);
  CHECK(rank(RatMatrix::from_rows({qv("1,2"), qv("2,4")})) == 1);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == RatMatrix::identity(2));
  auto ns = nullspace(RatMatrix::from_rows({qv("1,1,1")}));
  CHECK(ns.size() == 2);
  AffineMap h{m.scaled(3), qv("1,1")};
  auto fp = h.fixed_point();
  REQUIRE(fp);
  CHECK(h(*fp) == *fp);
}
