#include "doctest.h"
#include "oracles.hpp"
#include "tvs/polyhedra.hpp"

#include <random>

using namespace tvs;

namespace {

Cone cone2(std::initializer_list<IntVec> g) { return Cone(2, std::vector<IntVec>(g)); }

RatVec rv(std::initializer_list<Rat> x) { return RatVec(x); }

const Cone kSigma = cone2({{1, 0}, {1, 6}});
const SigmaPolyhedron kD0({rv({1, 0}), rv({1, 1})}, kSigma);
const SigmaPolyhedron kD1({rv({Rat(-1, 2), 0})}, kSigma);
const SigmaPolyhedron kDinf({rv({Rat(-1, 3), 0})}, kSigma);

IntVec random_vec(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("dual cone examples") {
  CHECK(dual_cone(kSigma) == cone2({{0, 1}, {6, -1}}));
  CHECK(dual_cone(Cone::orthant(2)) == Cone::orthant(2));
  CHECK(dual_cone(cone2({{1, 0}})) == cone2({{1, 0}, {0, 1}, {0, -1}}));
  CHECK(dual_cone(Cone(3, {})) == Cone::whole_space(3));
  CHECK_THROWS_AS(dual_cone(Cone::orthant(7)), Error);
}

TEST_CASE("dual of dual is the original cone") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < n + trial % 3; ++i) g.push_back(random_vec(rng, n, -3, 3));
    Cone c(n, g);
    Cone dd = dual_cone(dual_cone(c));
    for (const auto& x : c.generators()) CHECK(oracle::in_cone(dd.generators(), to_rat(x)));
    for (const auto& x : dd.generators()) CHECK(oracle::in_cone(c.generators(), to_rat(x)));
    Cone dual = dual_cone(c);
    for (const auto& h : dual.generators())
      for (const auto& x : c.generators()) CHECK(dot(h, x) >= 0);
  }
}

TEST_CASE("is_regular") {
  CHECK(is_regular(Cone::orthant(2)));
  CHECK_FALSE(is_regular(cone2({{2, -1}, {0, 1}})));
  CHECK(is_regular(Cone(3, {{2, -1, 0}, {-3, 2, 3}})));
  CHECK_FALSE(is_regular(cone2({{1, 0}, {-1, 0}})));
  Cone redundant = cone2({{1, 0}, {1, 1}, {0, 1}, {2, 1}});
  CHECK(redundant.reduced() == cone2({{1, 0}, {0, 1}}));
  CHECK(is_regular(redundant));
  CHECK_FALSE(is_regular(Cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})));
}

TEST_CASE("is_regular agrees with parallelepiped count on all plane cones") {
  int checked = 0;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c)
        for (int d = -6; d <= 6; ++d) {
          IntVec g1{a, b}, g2{c, d};
          if (a * d - b * c == 0) continue;
          if (gcd(Int(a), Int(b)) != 1 || gcd(Int(c), Int(d)) != 1) continue;
          bool brute = oracle::parallelepiped_points(g1, g2) == 1;
          CHECK(is_regular(cone2({g1, g2})) == brute);
          ++checked;
        }
  CHECK(checked == 9024);
}

TEST_CASE("support value") {
  auto s = support_value(kD0, rv({6, -1}));
  CHECK(s.value == 5);
  CHECK(s.minimizers == std::vector<RatVec>{rv({1, 1})});
  s = support_value(kD0, rv({0, 0}));
  CHECK(s.value == 0);
  CHECK(s.minimizers.size() == 2);
  s = support_value(kD1, rv({2, 0}));
  CHECK(s.value == -1);
  CHECK(s.minimizers == std::vector<RatVec>{rv({Rat(-1, 2), 0})});
  CHECK_THROWS_AS(support_value(kD0, rv({-1, 0})), Error);
}

TEST_CASE("minkowski sum") {
  auto neutral = SigmaPolyhedron::tail_only(kSigma);
  CHECK(minkowski_sum(kD0, neutral) == kD0);
  auto deg = minkowski_sum(minkowski_sum(kD0, kD1), kDinf);
  CHECK(deg.vertices() == std::vector<RatVec>{rv({Rat(1, 6), 0}), rv({Rat(1, 6), 1})});
  Cone zero(1, {});
  SigmaPolyhedron seg({rv({0}), rv({1})}, zero);
  CHECK(minkowski_sum(seg, seg).vertices() == std::vector<RatVec>{rv({0}), rv({2})});
  CHECK_THROWS_AS(minkowski_sum(kD0, SigmaPolyhedron::tail_only(Cone::orthant(2))), Error);
}

TEST_CASE("minkowski sum support values are additive") {
  std::mt19937 rng(23);
  Cone tail = cone2({{1, 0}, {1, 3}});
  Cone dual = dual_cone(tail);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto rand_poly = [&] {
      std::vector<RatVec> pts;
      for (int i = 0; i < 1 + trial % 4; ++i) pts.push_back(rv({Rat(d(rng), 1 + rng() % 4), Rat(d(rng), 1 + rng() % 3)}));
      for (auto& p : pts)
        for (auto& x : p) x.canonicalize();
      return SigmaPolyhedron(pts, tail);
    };
    auto a = rand_poly(), b = rand_poly();
    auto s = minkowski_sum(a, b);
    for (int k = 0; k < 5; ++k) {
      RatVec u(2, Rat(0));
      for (const auto& g : dual.generators()) u = add(u, scale(Rat(int(rng() % 5)), to_rat(g)));
      CHECK(support_value(s, u).value == support_value(a, u).value + support_value(b, u).value);
    }
    for (const auto& v : s.vertices())
      for (const auto& u : s.normals()) CHECK(dot(u, v) >= support_value(s, to_rat(u)).value);
  }
}

TEST_CASE("vertex pruning") {
  SigmaPolyhedron p({rv({0, 0}), rv({1, 1}), rv({2, 0}), rv({1, 0})}, Cone(2, {}));
  CHECK(p.vertices() == std::vector<RatVec>{rv({0, 0}), rv({1, 1}), rv({2, 0})});
  SigmaPolyhedron q({rv({0, 0}), rv({1, 0}), rv({0, 1})}, Cone::orthant(2));
  CHECK(q.vertices() == std::vector<RatVec>{rv({0, 0})});
  CHECK(q.contains(rv({3, Rat(1, 2)})));
  CHECK_FALSE(q.contains(rv({-1, 3})));
}

TEST_CASE("mu") {
  CHECK(mu(rv({Rat(-1, 2), 0})) == 2);
  CHECK(mu(rv({1, 1})) == 1);
  CHECK(mu(rv({Rat(-1, 3), 0})) == 3);
  CHECK(mu(rv({Rat(1, 4), Rat(5, 6)})) == 12);
}

TEST_CASE("cayley cone") {
  Cone ray(1, {{1}});
  SigmaPolyhedron half({rv({Rat(-1, 2)})}, ray);
  CHECK(cayley_cone({{half, {1}}}) == cone2({{2, -1}, {0, 1}}));
  SigmaPolyhedron y({rv({0})}, ray), z({rv({1})}, ray);
  Cone bi = cayley_cone({{y, {1}}, {z, {-1}}});
  CHECK(bi == cone2({{1, 0}, {-1, 1}, {0, 1}}));
  CHECK(is_regular(bi));
  CHECK(bi.reduced() == cone2({{1, 0}, {-1, 1}}));

  Cone t = Cone::orthant(2);
  auto triv = SigmaPolyhedron::tail_only(t);
  Cone c = cayley_cone({{triv, {1, 0}}, {triv, {0, 1}}});
  CHECK(c == Cone::orthant(4));
}

TEST_CASE("normal quasifan") {
  auto fan = normal_quasifan({kD0, kD1, kDinf}, kSigma);
  REQUIRE(fan.cells.size() == 2);
  bool seen_low = false, seen_high = false;
  for (const auto& cell : fan.cells) {
    if (cell.cone == cone2({{0, 1}, {1, 0}})) {
      CHECK(kD0.vertices()[cell.selection[0]] == rv({1, 0}));
      seen_low = true;
    }
    if (cell.cone == cone2({{1, 0}, {6, -1}})) {
      CHECK(kD0.vertices()[cell.selection[0]] == rv({1, 1}));
      seen_high = true;
    }
  }
  CHECK(seen_low);
  CHECK(seen_high);
  CHECK(normal_quasifan({kD1, kDinf}, kSigma).cells.size() == 1);
  Cone r1(1, {{1}});
  CHECK(normal_quasifan({SigmaPolyhedron({rv({Rat(1, 2)})}, r1)}, r1).cells.size() == 1);
}

TEST_CASE("quasifan cells reproduce selectors") {
  std::mt19937 rng(29);
  Cone tail = cone2({{1, 0}, {0, 1}});
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SigmaPolyhedron> coeffs;
    for (int k = 0; k < 2; ++k) {
      std::vector<RatVec> pts;
      for (int i = 0; i < 3; ++i) pts.push_back(rv({Rat(d(rng)), Rat(d(rng), 2)}));
      for (auto& p : pts)
        for (auto& x : p) x.canonicalize();
      coeffs.emplace_back(pts, tail);
    }
    auto fan = normal_quasifan(coeffs, tail);
    for (const auto& cell : fan.cells) {
      IntVec u = cell.cone.interior_point();
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        auto sv = support_value(coeffs[k], to_rat(u));
        REQUIRE(sv.minimizers.size() == 1);
        CHECK(sv.minimizers[0] == coeffs[k].vertices()[cell.selection[k]]);
      }
    }
  }
}

TEST_CASE("face_of") {
  auto f = face_of(kD0, rv({0, 1}));
  CHECK(f.vertices() == std::vector<RatVec>{rv({1, 0})});
  CHECK(f.tail() == cone2({{1, 0}}));
  CHECK(face_of(kD0, rv({0, 0})) == kD0);
  f = face_of(kD0, rv({6, -1}));
  CHECK(f.vertices() == std::vector<RatVec>{rv({1, 1})});
  CHECK(f.tail() == cone2({{1, 6}}));
}

TEST_CASE("ray_meets") {
  auto deg = minkowski_sum(minkowski_sum(kD0, kD1), kDinf);
  CHECK(ray_meets(deg, {1, 0}));
  CHECK(ray_meets(deg, {1, 6}));
  SigmaPolyhedron half({rv({Rat(1, 2), 0})}, Cone::orthant(2));
  CHECK(ray_meets(half, {1, 0}));
  CHECK_FALSE(ray_meets(half, {0, 1}));
}
