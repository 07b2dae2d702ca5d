#include "doctest.h"
#include "fixtures.hpp"
#include "tvs/singcheck.hpp"

#include <random>

using namespace tvs;
using fx::rv;

namespace {

using Coeffs = std::vector<std::pair<std::string, SigmaPolyhedron>>;

// min over 1 <= u <= h of sum floor(u c_i), with the first u attaining it.
std::pair<Int, Int> naive_min_floor(const std::vector<Rat>& c, int h) {
  Int best = 0, at = 0;
  for (int u = 1; u <= h; ++u) {
    Int s = 0;
    for (const auto& x : c) {
      Rat y = Rat(u) * x;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
      s += q;
    }
    if (at == 0 || s < best) {
      best = s;
      at = u;
    }
  }
  return {best, at};
}

PolyhedralDivisor three_halves() {
  Cone s = Cone::orthant(2);
  SigmaPolyhedron h({rv({Rat(1, 2), 0})}, s);
  return PolyhedralDivisor(Curve::projective_line(), s, Coeffs{{"0", h}, {"1", h}, {"inf", h}});
}

PolyhedralDivisor two_point_smooth() {
  return PolyhedralDivisor(Curve::projective_line(), fx::ray1(),
                           Coeffs{{"0", SigmaPolyhedron::tail_only(fx::ray1())},
                                  {"inf", SigmaPolyhedron({rv({1})}, fx::ray1())}});
}

std::vector<PolyhedralDivisor> rank2_samples() {
  Cone s = Cone::orthant(2);
  std::vector<PolyhedralDivisor> out{fx::ex1(), fx::half_orthant(), three_halves()};
  out.emplace_back(Curve::projective_line(), s,
                   Coeffs{{"0", SigmaPolyhedron({rv({Rat(1, 2), 0}), rv({0, Rat(1, 3)})}, s)},
                          {"1", SigmaPolyhedron({rv({Rat(1, 5), Rat(1, 5)})}, s)}});
  out.emplace_back(Curve::projective_line(), s,
                   Coeffs{{"0", SigmaPolyhedron({rv({Rat(1, 2), Rat(1, 2)})}, s)},
                          {"1", SigmaPolyhedron({rv({Rat(-1, 2), Rat(1, 3)})}, s)},
                          {"inf", SigmaPolyhedron({rv({Rat(1, 3), Rat(-1, 4)})}, s)}});
  return out;
}

std::vector<PolyhedralDivisor> rank1_samples() {
  return {fx::e8(), fx::a_m(1), fx::a_m(4), fx::d_series(3), fx::d_series(6), fx::e_series(3), fx::e_series(4),
          fx::e6_table(), fx::elliptic_minimal(), fx::elliptic_nonminimal(),
          fx::rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 3)}, {"inf", Rat(1, 7)}})};
}

}  // namespace

TEST_CASE("smoothness") {
  CHECK(check_smooth(two_point_smooth()).status == Status::Yes);
  auto a1 = fx::rank1({{"0", Rat(-1, 2)}}, Curve::affine_line());
  CHECK(check_smooth(a1).status == Status::No);
  PolyhedralDivisor toric(Curve::affine_line(), Cone::orthant(2), Coeffs{});
  CHECK(check_smooth(toric).status == Status::Yes);
  CHECK(check_smooth(fx::half_orthant()).status == Status::Yes);
  CHECK(check_smooth(fx::e8()).status == Status::No);
  CHECK(check_smooth(three_halves()).status == Status::No);
  CHECK(check_smooth(fx::elliptic_minimal()).status == Status::No);
  CHECK(check_smooth(fx::a_m(1)).status == Status::No);
}

TEST_CASE("isolated singularities") {
  CHECK(check_isolated(fx::e8()).status == Status::Yes);
  CHECK(check_isolated(fx::ex1()).status == Status::Yes);
  Verdict v = check_isolated(three_halves());
  CHECK(v.status == Status::No);
  REQUIRE(v.witness_u);
  CHECK(*v.witness_u == rv({0, 1}));
  auto a1 = fx::rank1({{"0", Rat(-1, 2)}}, Curve::affine_line());
  CHECK_THROWS_AS(check_isolated(a1), Error);
  Cone flat(2, {{1, 0}});
  PolyhedralDivisor thin(Curve::projective_line(), flat, Coeffs{{"0", SigmaPolyhedron({rv({1, 0})}, flat)}});
  try {
    check_isolated(thin);
    FAIL("expected UnsupportedShape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedShape);
  }
}

TEST_CASE("rationality examples") {
  Verdict ex = check_rational(fx::ex1());
  CHECK(ex.status == Status::Yes);
  REQUIRE(ex.witness_u);
  CHECK(*ex.witness_u == rv({1, 0}));
  CHECK(*ex.witness_value == -1);
  Verdict el = check_rational(fx::elliptic_minimal());
  CHECK(el.status == Status::No);
  CHECK(*el.witness_u == rv({1}));
  CHECK(*el.witness_value == -2);
  CHECK(check_rational(fx::rank1({{"0", Rat(-1, 2)}}, Curve::affine_line())).status == Status::Yes);
  CHECK(check_rational(fx::rank1({{"0", Rat(1, 1)}}, Curve::of_genus(1))).status == Status::No);
  RationalOptions tiny;
  tiny.budget = 1;
  CHECK(check_rational(fx::ex1(), tiny).status == Status::Inconclusive);
}

TEST_CASE("rationality agrees with naive enumeration on rank one") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> den(1, 12), npts(1, 4);
  int checked = 0, nos = 0;
  while (checked < 200) {
    std::vector<std::pair<std::string, Rat>> terms;
    std::vector<Rat> c;
    int k = npts(rng);
    for (int i = 0; i < k; ++i) {
      int q = den(rng);
      std::uniform_int_distribution<int> num(-2 * q, 2 * q);
      Rat x = make_rat(num(rng), q);
      terms.push_back({std::to_string(i), x});
      c.push_back(x);
    }
    Rat deg = 0;
    for (const auto& x : c) deg += x;
    if (deg <= 0) continue;
    auto d = fx::rank1(terms);
    auto [naive, at] = naive_min_floor(c, 1000);
    Verdict v = check_rational(d);
    REQUIRE(v.status != Status::Inconclusive);
    CHECK((v.status == Status::Yes) == (naive >= -1));
    if (naive <= -1) {
      REQUIRE(v.witness_value);
      CHECK(*v.witness_value == Rat(naive));
      CHECK(*v.witness_u == RatVec{Rat(at)});
    }
    nos += v.status == Status::No;
    ++checked;
  }
  CHECK(nos > 0);
}

TEST_CASE("rationality agrees with a box search on rank two") {
  for (const auto& d : rank2_samples()) {
    Cone dual = dual_cone(d.tail());
    Int best = 0;
    for (int a = -30; a <= 30; ++a)
      for (int b = -30; b <= 30; ++b) {
        RatVec u = rv({a, b});
        if (!dual.contains(u)) continue;
        Int f = floor_degree(evaluate(d, u)).floor_deg;
        if (f < best) best = f;
      }
    Verdict v = check_rational(d);
    CAPTURE(d.tail().generators().size());
    CHECK((v.status == Status::Yes) == (best >= -1));
    if (best <= -1) CHECK(*v.witness_value == Rat(best));
  }
}

TEST_CASE("Cohen-Macaulay") {
  for (const auto& d : rank1_samples()) CHECK(check_cm(d).kind == CmVerdict::Kind::Yes);
  CmVerdict ex = check_cm(fx::ex1());
  CHECK(ex.kind == CmVerdict::Kind::IffRational);
  CHECK(ex.status() == Status::Yes);
  CHECK(check_cm(three_halves()).kind == CmVerdict::Kind::Inconclusive);
  CHECK(check_cm(fx::rank1({{"0", Rat(-1, 2)}}, Curve::affine_line())).kind == CmVerdict::Kind::Yes);
}

TEST_CASE("discrepancies") {
  auto d = fx::ex1();
  DiscrepancyReport r = discrepancies(d, gorenstein_solve(d));
  REQUIRE(r.rays.size() == 2);
  for (const auto& ray : r.rays) CHECK(ray.value == 4);
  for (const auto& v : r.vertices) CHECK(v.value == 0);
  auto am = fx::a_m(3);
  DiscrepancyReport ra = discrepancies(am, gorenstein_solve(am));
  CHECK(ra.rays.at(0).value == 0);
  auto e6 = fx::e6_table();
  DiscrepancyReport re = discrepancies(e6, gorenstein_solve(e6));
  CHECK(re.rays.at(0).value == make_rat(-2, 3));
  CHECK(re.rays.at(0).exceptional);
  auto ng = fx::non_gorenstein();
  GorensteinSolution bad = gorenstein_solve(ng);
  if (!bad.q_gorenstein) CHECK_THROWS_AS(discrepancies(ng, bad), Error);
}

TEST_CASE("log-terminality") {
  Verdict e8 = check_log_terminal(fx::e8());
  CHECK(e8.status == Status::Yes);
  CHECK(*e8.witness_value == make_rat(59, 30));
  Verdict w = check_log_terminal(fx::rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 3)}, {"inf", Rat(1, 7)}}));
  CHECK(w.status == Status::No);
  CHECK(*w.witness_value == make_rat(85, 42));
  Verdict ex = check_log_terminal(fx::ex1());
  CHECK(ex.status == Status::Yes);
  CHECK(*ex.witness_value == make_rat(7, 6));
  CHECK(check_log_terminal(fx::rank1({{"0", Rat(-1, 2)}}, Curve::affine_line())).status == Status::Inconclusive);
}

TEST_CASE("log-terminal paths agree and imply rationality") {
  auto all = rank1_samples();
  for (auto& d : rank2_samples()) all.push_back(d);
  for (const auto& d : all) {
    GorensteinSolution s = gorenstein_solve(d);
    if (!s.q_gorenstein) continue;
    Verdict lt = check_log_terminal(d);
    if (lt.status == Status::Yes) CHECK(check_rational(d).status == Status::Yes);
  }
}

TEST_CASE("canonical classification") {
  for (int m = 1; m <= 6; ++m) CHECK(classify_canonical(fx::a_m(m)).label() == "A(" + std::to_string(m) + ")");
  for (int m = 2; m <= 7; ++m) CHECK(classify_canonical(fx::d_series(m)).label() == "D(" + std::to_string(m + 2) + ")");
  CHECK(classify_canonical(fx::e_series(3)).label() == "E(6)");
  CHECK(classify_canonical(fx::e_series(4)).label() == "E(7)");
  CHECK(classify_canonical(fx::e8()).label() == "E(8)");
  CHECK(classify_canonical(fx::e6_table()).family == CanonicalClass::Family::NotCanonical);
  CHECK(classify_canonical(fx::elliptic_minimal()).family == CanonicalClass::Family::NotCanonical);
  CHECK(classify_canonical(fx::rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 2)}})).label() == "A(3)");
  CHECK_THROWS_AS(classify_canonical(fx::ex1()), Error);
}

TEST_CASE("canonical labels imply index one and nonnegative ray discrepancies") {
  for (const auto& d : rank1_samples()) {
    CanonicalClass c = classify_canonical(d);
    if (c.family == CanonicalClass::Family::NotCanonical) continue;
    GorensteinSolution s = gorenstein_solve(d);
    CHECK(s.index == 1);
    for (const auto& r : discrepancies(d, s).rays) CHECK(r.value >= 0);
  }
}

TEST_CASE("E6 section ring matches the x^2+y^3+z^4 Hilbert series") {
  QDivisor d1 = d_one(fx::e_series(3));
  for (int k = 0; k <= 24; ++k) {
    Int f = floor_degree(Rat(k) * d1).floor_deg;
    Int h0 = f >= 0 ? f + 1 : Int(0);
    int count = 0;
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; 6 * a + 4 * b <= k; ++b)
        if ((k - 6 * a - 4 * b) % 3 == 0) ++count;
    CHECK(h0 == count);
  }
}

TEST_CASE("elliptic singularities") {
  EllipticResult m = check_elliptic(fx::elliptic_minimal());
  CHECK(m.kind == EllipticResult::Kind::Elliptic);
  CHECK(m.minimal);
  CHECK(m.witness_u == 1);
  EllipticResult n = check_elliptic(fx::elliptic_nonminimal());
  CHECK(n.kind == EllipticResult::Kind::Elliptic);
  CHECK_FALSE(n.minimal);
  CHECK(n.index == 3);
  CHECK(check_elliptic(fx::a_m(3)).kind == EllipticResult::Kind::NotElliptic);
  CHECK(check_elliptic(fx::rank1({{"0", Rat(1, 1)}}, Curve::of_genus(1))).kind ==
        EllipticResult::Kind::UnsupportedBase);
  for (const auto& d : rank1_samples()) {
    EllipticResult e = check_elliptic(d);
    if (e.kind != EllipticResult::Kind::Elliptic) continue;
    Verdict r = check_rational(d);
    CHECK(r.status == Status::No);
    CHECK(*r.witness_u == RatVec{Rat(e.witness_u)});
    std::vector<Rat> c;
    QDivisor d1 = d_one(d);
    for (const auto& [p, x] : d1.terms()) c.push_back(x);
    CHECK(naive_min_floor(c, 1000).first == -2);
  }
}

TEST_CASE("smooth implies isolated implies CM resolves") {
  for (const auto& d : rank2_samples()) {
    if (check_smooth(d).status != Status::Yes) continue;
    CHECK(check_isolated(d).status == Status::Yes);
    CHECK(check_cm(d).kind == CmVerdict::Kind::IffRational);
  }
}

TEST_CASE("boundary data") {
  BoundaryData b = boundary_data(fx::ex1());
  CHECK(b.sum == make_rat(7, 6));
  CHECK(b.mu_max.at("1") == 2);
  CHECK(b.mu_max.at("inf") == 3);
  CHECK(!b.u0);
  BoundaryData e = boundary_data(fx::e8());
  REQUIRE(e.u0);
  CHECK(*e.u0 == rank_one_u0(fx::e8()));
}
