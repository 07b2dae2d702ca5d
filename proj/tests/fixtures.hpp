#pragma once

#include "tvs/pdiv.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fx {

using namespace tvs;

inline RatVec rv(std::initializer_list<Rat> x) { return RatVec(x); }

inline Cone ray1() { return Cone(1, {{1}}); }

inline Cone ex1_tail() { return Cone(2, {{1, 0}, {1, 6}}); }

inline PolyhedralDivisor ex1() {
  Cone s = ex1_tail();
  return PolyhedralDivisor(Curve::projective_line(), s,
                           {{"0", SigmaPolyhedron({rv({1, 0}), rv({1, 1})}, s)},
                            {"1", SigmaPolyhedron({rv({Rat(-1, 2), 0})}, s)},
                            {"inf", SigmaPolyhedron({rv({Rat(-1, 3), 0})}, s)}});
}

/// Rank-one divisor sum c_i [p_i] over sigma = Q>=0.
inline PolyhedralDivisor rank1(const std::vector<std::pair<std::string, Rat>>& terms,
                               Curve base = Curve::projective_line()) {
  std::vector<std::pair<std::string, SigmaPolyhedron>> c;
  for (const auto& [p, x] : terms) c.push_back({p, SigmaPolyhedron({rv({x})}, ray1())});
  return PolyhedralDivisor(base, ray1(), c);
}

inline PolyhedralDivisor a_m(int m) { return rank1({{"inf", Rat(m + 1, m)}}); }

inline PolyhedralDivisor e8() { return rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 3)}, {"inf", Rat(-4, 5)}}); }

inline PolyhedralDivisor d_series(int m) {
  return rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 2)}, {"inf", Rat(-(m - 1), m)}});
}

inline PolyhedralDivisor e_series(int m) {
  return rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 3)}, {"inf", Rat(-(m - 1), m)}});
}

inline PolyhedralDivisor e6_table() { return rank1({{"0", Rat(1, 2)}, {"1", Rat(1, 3)}, {"inf", Rat(-1, 3)}}); }

inline PolyhedralDivisor elliptic_minimal() {
  return rank1({{"0", Rat(-1, 4)}, {"1", Rat(-1, 4)}, {"inf", Rat(3, 4)}});
}

inline PolyhedralDivisor elliptic_nonminimal() {
  return rank1({{"0", Rat(-2, 3)}, {"1", Rat(-2, 3)}, {"inf", Rat(17, 12)}});
}

/// (1/2,0) + Q>=0^2 at [0] on P^1.
inline PolyhedralDivisor half_orthant() {
  Cone s = Cone::orthant(2);
  return PolyhedralDivisor(Curve::projective_line(), s, {{"0", SigmaPolyhedron({rv({Rat(1, 2), 0})}, s)}});
}

/// conv((0,2),(1,1),(3,0)) + Q>=0^2 at [0] on P^1.
inline PolyhedralDivisor non_gorenstein() {
  Cone s = Cone::orthant(2);
  return PolyhedralDivisor(Curve::projective_line(), s,
                           {{"0", SigmaPolyhedron({rv({0, 2}), rv({1, 1}), rv({3, 0})}, s)}});
}

}  // namespace fx
