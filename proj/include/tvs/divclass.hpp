#pragma once

#include "tvs/matrix.hpp"
#include "tvs/pdiv.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tvs {

/// Column labels of the class-group presentation.
struct PrimeLabel {
  enum class Kind { ClassOfY, Vertex, Ray } kind;
  std::string point;  // Vertex
  RatVec vertex;      // Vertex
  IntVec ray;         // Ray
};

std::string to_string(const PrimeLabel& l);

struct RelationMatrix {
  IntMatrix matrix;  // one row per relation
  std::vector<PrimeLabel> columns;
};

RelationMatrix relation_matrix(const PolyhedralDivisor& d);

struct ClassGroup {
  std::vector<Int> torsion;  // invariant factors > 1
  std::size_t free_rank = 0;
  bool q_factorial = false;
  bool count_formula = false;  // rk Cl Y + sum(#vertices - 1) + #extremal rays == rank N
  bool trivial() const { return torsion.empty() && free_rank == 0; }
};

std::string to_string(const ClassGroup& g);

ClassGroup class_group(const PolyhedralDivisor& d);

/// Unknowns (a_1..a_s, u); rows: numerical class block, one row per vertex, one per extremal ray.
struct MonsterSystem {
  RatMatrix matrix;
  RatVec rhs;
  std::vector<std::string> points;
  std::size_t class_rows = 0;
  std::size_t lattice_rank = 0;
};

/// Canonical-class system over supp D and supp K_Y.
MonsterSystem monster_system(const PolyhedralDivisor& d);

/// User-supplied numerical data for a base of higher dimension.
struct NumericalInputs {
  struct Point {
    std::string label;
    IntVec numerical_class;
    Rat canonical_coefficient;
    std::vector<RatVec> vertices;
  };
  std::size_t num_rank = 0;
  std::size_t lattice_rank = 0;
  std::vector<Point> points;
  std::vector<IntVec> extremal_rays;
};

MonsterSystem monster_system(const NumericalInputs& in);

struct GorensteinSolution {
  bool q_gorenstein = false;
  std::vector<std::string> points;
  RatVec a;
  RatVec u;
  Int index = 0;
  /// False in numerical mode: the returned index is the least l with l*u and
  /// l*a integral, and principality of l * sum a_i Z_i is left to the caller.
  bool principality_decided = true;
  RatVec certificate;  // left null vector when inconsistent

  Rat a_at(const std::string& point) const;
};

GorensteinSolution gorenstein_solve(const PolyhedralDivisor& d);
GorensteinSolution gorenstein_solve(const NumericalInputs& in);

/// u_0 = deg(K_Y + B) / deg D(w) for a rank-one divisor, w generating the dual tail.
Rat rank_one_u0(const PolyhedralDivisor& d);

struct FactorialityResult {
  bool factorial = false;
  bool square = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<Int> det;
};

FactorialityResult factoriality_det(const PolyhedralDivisor& d);

struct GeneratorTarget {
  std::string point;  // empty for a ray target
  RatVec vertex;
  IntVec ray;

  static GeneratorTarget at_vertex(std::string p, RatVec v) { return {std::move(p), std::move(v), {}}; }
  static GeneratorTarget at_ray(IntVec r) { return {"", {}, std::move(r)}; }
};

struct GeneratorDegree {
  IntVec u;
  QDivisor f_divisor;
};

/// Degree u and div(f) of the semi-invariant f * chi^u whose divisor is exactly the target.
GeneratorDegree generator_degrees(const PolyhedralDivisor& d, const GeneratorTarget& target);

}  // namespace tvs
