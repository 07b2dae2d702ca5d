#include "doctest.h"
#include "fixtures.hpp"

#include <random>

using namespace tvs;
using fx::rv;

namespace {

QDivisor qd(std::initializer_list<std::pair<const std::string, Rat>> t) { return QDivisor(QDivisor::Terms(t)); }

PolyhedralDivisor random_rank1(std::mt19937& rng, int points, int max_den) {
  std::vector<std::pair<std::string, Rat>> t;
  for (int i = 0; i < points; ++i) {
    int den = 1 + int(rng() % max_den);
    int num = int(rng() % (4 * den)) - 2 * den;
    t.push_back({std::to_string(i), make_rat(num, den)});
  }
  return fx::rank1(t);
}

}  // namespace

TEST_CASE("point labels") {
  Curve p1 = Curve::projective_line();
  CHECK(p1.normalize_label("\xE2\x88\x9E") == "inf");
  CHECK(p1.normalize_label("2/4") == "1/2");
  CHECK_THROWS_AS(Curve::affine_line().normalize_label("inf"), Error);
  PointOrder less;
  CHECK(less("0", "1"));
  CHECK(less("-1", "0"));
  CHECK(less("1", "inf"));
  CHECK_FALSE(less("inf", "1/2"));
}

TEST_CASE("evaluate") {
  auto d = fx::ex1();
  CHECK(evaluate(d, rv({2, 0})) == qd({{"0", 2}, {"1", -1}, {"inf", Rat(-2, 3)}}));
  CHECK(evaluate(d, rv({0, 0})).empty());
  CHECK(evaluate(d, rv({6, -1})) == qd({{"0", 5}, {"1", -3}, {"inf", -2}}));
  CHECK_THROWS_AS(evaluate(d, rv({0, -1})), Error);
}

TEST_CASE("floor degree") {
  auto f = floor_degree(qd({{"0", 2}, {"1", -1}, {"inf", Rat(-2, 3)}}));
  CHECK(f.deg == Rat(1, 3));
  CHECK(f.floor_deg == 0);
  f = floor_degree(QDivisor());
  CHECK(f.deg == 0);
  CHECK(f.floor_deg == 0);
  f = floor_degree(evaluate(fx::elliptic_minimal(), rv({1})));
  CHECK(f.deg == Rat(1, 4));
  CHECK(f.floor_deg == -2);
}

TEST_CASE("properness") {
  CHECK(is_proper(fx::ex1()).status == ProperStatus::Proper);
  auto p = is_proper(fx::rank1({{"inf", -1}}));
  CHECK(p.status == ProperStatus::NotProper);
  CHECK(*p.witness == rv({1}));
  CHECK(is_proper(fx::e8()).status == ProperStatus::Proper);
  CHECK(is_proper(fx::rank1({{"0", 1}, {"inf", -1}})).status == ProperStatus::NotProper);
  CHECK(is_proper(fx::rank1({{"0", -5}}, Curve::affine_line())).status == ProperStatus::Proper);
  CHECK(is_proper(fx::rank1({{"a", Rat(1, 2)}}, Curve::of_genus(1))).status == ProperStatus::Proper);
  CHECK(is_proper(fx::rank1({{"a", 1}, {"b", -1}}, Curve::of_genus(1))).status == ProperStatus::InconclusiveGenus);
  CHECK(is_proper(fx::half_orthant()).status == ProperStatus::Proper);
}

TEST_CASE("extremal data") {
  auto e = extremal_data(fx::ex1());
  CHECK(e.extremal_rays.empty());
  CHECK(e.non_extremal_rays.size() == 2);
  CHECK(e.vertices.size() == 4);
  CHECK(e.deg_polyhedron->vertices() == std::vector<RatVec>{rv({Rat(1, 6), 0}), rv({Rat(1, 6), 1})});

  Cone s = Cone::orthant(2);
  e = extremal_data(fx::half_orthant());
  CHECK(e.extremal_rays == std::vector<IntVec>{{0, 1}});
  CHECK(e.non_extremal_rays == std::vector<IntVec>{{1, 0}});

  PolyhedralDivisor aff(Curve::affine_line(), s, {{"0", SigmaPolyhedron({rv({Rat(1, 2), 0})}, s)}});
  e = extremal_data(aff);
  CHECK(e.extremal_rays.size() == 2);
  CHECK_FALSE(e.deg_polyhedron);
  CHECK_THROWS_AS(extremal_data(fx::rank1({{"inf", -1}})), Error);
}

TEST_CASE("extremal rays are invariant under relabeling") {
  Cone s = Cone::orthant(2);
  SigmaPolyhedron a({rv({Rat(1, 2), 0})}, s), b({rv({0, Rat(1, 3)}), rv({1, 0})}, s);
  PolyhedralDivisor d1(Curve::projective_line(), s, {{"0", a}, {"1", b}});
  PolyhedralDivisor d2(Curve::projective_line(), s, {{"inf", a}, {"7/2", b}});
  CHECK(extremal_data(d1).extremal_rays == extremal_data(d2).extremal_rays);
}

TEST_CASE("higher direct image dimensions") {
  auto c = higher_direct_dims(fx::elliptic_minimal(), {1});
  CHECK(c.h0 == 0);
  CHECK(c.h1 == 1);
  c = higher_direct_dims(fx::ex1(), {2, 0});
  CHECK(c.h0 == 1);
  CHECK(c.h1 == 0);
  c = higher_direct_dims(fx::rank1({{"0", Rat(-1, 2)}, {"1", Rat(-1, 2)}, {"inf", Rat(3, 2)}}), {1});
  CHECK(c.h0 == 0);
  CHECK(c.h1 == 0);
  CHECK_THROWS_AS(higher_direct_dims(fx::rank1({{"0", 1}}, Curve::affine_line()), {1}), Error);
  CHECK_THROWS_AS(higher_direct_dims(fx::rank1({{"a", 1}}, Curve::of_genus(2)), {1}), Error);
}

TEST_CASE("EX1 generator degrees have one section") {
  auto d = fx::ex1();
  for (const IntVec& u : {IntVec{0, 1}, IntVec{2, 0}, IntVec{3, 0}, IntVec{6, -1}})
    CHECK(higher_direct_dims(d, u).h0 == 1);
}

TEST_CASE("evaluation is linear on quasifan cells") {
  auto d = fx::ex1();
  auto fan = d.quasifan();
  auto deg = degree_polyhedron(d);
  std::mt19937 rng(31);
  for (const auto& cell : fan.cells) {
    const auto& g = cell.cone.generators();
    for (int k = 0; k < 20; ++k) {
      RatVec u(2, Rat(0)), w(2, Rat(0));
      for (const auto& x : g) {
        u = add(u, scale(Rat(int(rng() % 4)), to_rat(x)));
        w = add(w, scale(Rat(int(rng() % 4)), to_rat(x)));
      }
      CHECK(evaluate(d, add(u, w)) == evaluate(d, u) + evaluate(d, w));
      CHECK(evaluate(d, u).degree() == support_value(deg, u).value);
    }
  }
}

TEST_CASE("Riemann-Roch and floor bounds on random divisors") {
  std::mt19937 rng(37);
  int proper = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto d = random_rank1(rng, 2 + trial % 4, 12);
    int u = 1 + int(rng() % 30);
    auto c = higher_direct_dims(d, {u});
    auto f = floor_degree(evaluate(d, rv({u})));
    CHECK(c.h0 - c.h1 == f.floor_deg + 1);
    CHECK(f.floor_deg <= f.deg);
    if (is_proper(d).status == ProperStatus::Proper) {
      ++proper;
      CHECK(f.deg - f.floor_deg < Rat(int(d.support().size())));
    }
  }
  CHECK(proper > 100);
}

TEST_CASE("divisor validation") {
  Cone s = fx::ray1();
  CHECK_THROWS_AS(PolyhedralDivisor(Curve::projective_line(), s,
                                    {{"0", SigmaPolyhedron({rv({1})}, s)}, {"0/1", SigmaPolyhedron({rv({2})}, s)}}),
                  Error);
  try {
    PolyhedralDivisor(Curve::projective_line(), s, {{"0", SigmaPolyhedron({rv({1})}, s)}, {"0", SigmaPolyhedron({rv({2})}, s)}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoint);
  }
  CHECK_THROWS_AS(PolyhedralDivisor(Curve::projective_line(), s, {{"0", SigmaPolyhedron({rv({1, 0})}, Cone::orthant(2))}}),
                  Error);
  auto d = fx::ex1();
  CHECK(d.canonical() == qd({{"inf", -2}}));
  CHECK(to_string(evaluate(d, rv({2, 0}))) == "2[0] - [1] - 2/3[inf]");
}
