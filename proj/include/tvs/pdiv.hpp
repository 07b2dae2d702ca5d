#pragma once

#include "tvs/polyhedra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tvs {

enum class CurveKind { ProjectiveLine, AffineLine, Higher };

/// Smooth curve base: P^1, A^1, or an abstract projective curve of genus >= 1.
struct Curve {
  CurveKind kind = CurveKind::ProjectiveLine;
  int genus = 0;

  static Curve projective_line() { return {CurveKind::ProjectiveLine, 0}; }
  static Curve affine_line() { return {CurveKind::AffineLine, 0}; }
  static Curve of_genus(int g);

  bool is_projective() const { return kind != CurveKind::AffineLine; }
  bool is_p1() const { return kind == CurveKind::ProjectiveLine; }
  bool is_affine() const { return kind == CurveKind::AffineLine; }

  /// Canonical form of a point label: on P^1 and A^1 a rational coordinate
  /// printed in lowest terms, or "inf".
  std::string normalize_label(const std::string& label) const;
};

/// Orders numeric labels by value, "inf" after them, other labels last.
struct PointOrder {
  bool operator()(const std::string& a, const std::string& b) const;
};

/// Rational Weil divisor on a curve; zero coefficients are never stored.
class QDivisor {
 public:
  using Terms = std::map<std::string, Rat, PointOrder>;

  QDivisor() = default;
  explicit QDivisor(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  Rat coefficient(const std::string& point) const;
  void set(const std::string& point, const Rat& value);
  void add(const std::string& point, const Rat& value);
  bool empty() const { return terms_.empty(); }

  Rat degree() const;
  bool is_integral() const;
  QDivisor floor() const;

  friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
  friend QDivisor operator-(const QDivisor& a, const QDivisor& b);
  friend QDivisor operator*(const Rat& c, const QDivisor& a);
  friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const QDivisor& d);

/// On P^1: integral of degree zero.
bool is_principal_on_p1(const QDivisor& d);

struct FloorDegree {
  Rat deg;
  Int floor_deg;
};

FloorDegree floor_degree(const QDivisor& d);

/// sum_Z Delta_Z * Z over a curve, all coefficients sharing one pointed tail.
class PolyhedralDivisor {
 public:
  using Coefficients = std::map<std::string, SigmaPolyhedron, PointOrder>;

  PolyhedralDivisor(Curve base, Cone tail, const std::vector<std::pair<std::string, SigmaPolyhedron>>& coeffs,
                    std::optional<QDivisor> canonical = std::nullopt);

  const Curve& base() const noexcept { return base_; }
  const Cone& tail() const noexcept { return tail_; }
  std::size_t rank() const noexcept { return tail_.ambient_rank(); }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  const QDivisor& canonical() const noexcept { return canonical_; }

  /// The coefficient at a point (the tail itself away from the support).
  const SigmaPolyhedron& coefficient(const std::string& point) const;
  std::vector<std::string> support() const;
  /// Support of D together with the support of K_Y.
  std::vector<std::string> extended_support() const;

  QuasiFan quasifan() const;
  /// Coefficients in support() order, as consumed by quasifan().
  std::vector<SigmaPolyhedron> coefficient_list() const;

  PolyhedralDivisor with_canonical(const QDivisor& k) const;

 private:
  Curve base_;
  Cone tail_;
  Coefficients coeffs_;
  QDivisor canonical_;
  SigmaPolyhedron trivial_;
};

QDivisor evaluate(const PolyhedralDivisor& d, const RatVec& u);

enum class ProperStatus { Proper, NotProper, InconclusiveGenus };

struct Properness {
  ProperStatus status;
  std::optional<RatVec> witness;
};

Properness is_proper(const PolyhedralDivisor& d);

/// Throws NotProper unless is_proper reports Proper (or InconclusiveGenus).
void require_proper(const PolyhedralDivisor& d);

struct VertexData {
  std::string point;
  RatVec vertex;
  Int mu;
};

struct ExtremalData {
  std::vector<IntVec> extremal_rays;
  std::vector<IntVec> non_extremal_rays;
  std::vector<VertexData> vertices;
  std::optional<SigmaPolyhedron> deg_polyhedron;
};

/// Minkowski sum of all coefficients (the tail when there are none).
SigmaPolyhedron degree_polyhedron(const PolyhedralDivisor& d);

ExtremalData extremal_data(const PolyhedralDivisor& d);

struct Cohomology {
  Int h0;
  Int h1;
};

Cohomology higher_direct_dims(const PolyhedralDivisor& d, const IntVec& u);

}  // namespace tvs
