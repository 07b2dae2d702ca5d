#pragma once

#include "tvs/pdiv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tvs {

struct AdmissibleEntry {
  std::string point;
  std::vector<Int> mu;
};

/// Points on P^1 with exponent tuples whose gcds are pairwise coprime.
struct AdmissibleData {
  std::vector<AdmissibleEntry> entries;

  std::size_t size() const;  // |Z| = sum (r_i - 1)
  std::size_t dimension() const { return 2 + size(); }
};

/// Throws DegenerateInput unless the data are admissible.
void validate(const AdmissibleData& z);

struct ConstructionResult {
  PolyhedralDivisor divisor;
  std::vector<std::vector<RatVec>> vertices;  // v_ij, one row per entry
  int shift = 0;                              // Bezout normalization offset k that passed
  Int det;
};

ConstructionResult construct(const AdmissibleData& z);

inline PolyhedralDivisor construct_divisor(const AdmissibleData& z) { return construct(z).divisor; }

struct Monomial {
  std::vector<std::pair<std::size_t, Int>> powers;  // (variable index, exponent)
};

struct Term {
  Rat coefficient;
  Monomial monomial;
};

/// The first term is the leading term used for normal forms.
struct Relation {
  std::vector<Term> terms;
};

struct Variable {
  std::string name;
  IntVec degree;
};

struct Presentation {
  std::vector<Variable> variables;
  std::vector<Relation> relations;
  std::size_t dimension = 0;
};

std::string to_string(const Monomial& m, const Presentation& p);
std::string to_string(const Relation& r, const Presentation& p);
/// "k[T1,T2,T3]/(T3^5 + T2^3 - T1^2)" or "k[T11,T12,T2]" for a free algebra.
std::string to_string(const Presentation& p);

/// Coordinates z_i after moving the first point to inf (nullopt) and the second to 0.
std::vector<std::optional<Rat>> normalized_coordinates(const AdmissibleData& z);

Presentation presentation(const AdmissibleData& z);

struct HilbertComparison {
  bool match = false;
  std::optional<Int> first_mismatch;
  std::vector<Int> divisor_side;
  std::vector<Int> presentation_side;
};

/// Graded dimensions of A[D] and of the normal-form monomials of P along the weight v.
HilbertComparison hilbert_compare(const PolyhedralDivisor& d, const Presentation& p, const IntVec& weight,
                                  int d_max);

/// sum over u in the dual tail with <u,v> = k of h0(D(u)), for k = 0..d_max.
std::vector<Int> divisor_hilbert(const PolyhedralDivisor& d, const IntVec& weight, int d_max);

std::vector<Int> presentation_hilbert(const Presentation& p, const IntVec& weight, int d_max);

struct IsolatedClass {
  enum class Kind { Smooth, CA, FourfoldA, FivefoldA1, NotIsolated, NotHypersurfaceDim } kind = Kind::NotIsolated;
  Int q = 0;
  Int r = 0;
  std::string reason;
  std::string label() const;
  bool isolated() const { return kind != Kind::NotIsolated && kind != Kind::NotHypersurfaceDim; }
};

IsolatedClass classify_isolated_factorial(const AdmissibleData& z);

/// Admissible data with s <= max_points tuples of length <= 2, entries in 1..max_entry and |Z| <= max_size,
/// listed once per multiset with points inf, 0, 1, 2, ...
std::vector<AdmissibleData> admissible_sweep(std::size_t max_points, Int max_entry, std::size_t max_size);

std::string to_string(const AdmissibleData& z);

}  // namespace tvs
