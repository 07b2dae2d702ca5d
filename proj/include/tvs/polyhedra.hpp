#pragma once

#include "tvs/matrix.hpp"
#include "tvs/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tvs {

inline constexpr std::size_t kMaxAmbientRank = 6;

/// Finitely generated cone {sum l_i g_i : l_i >= 0} in Q^n, stored by primitive
/// integer generators (deduplicated, lexicographically sorted).
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t ambient_rank, const std::vector<IntVec>& generators);
  static Cone from_rat(std::size_t ambient_rank, const std::vector<RatVec>& generators);
  static Cone orthant(std::size_t n);
  static Cone whole_space(std::size_t n);

  std::size_t ambient_rank() const noexcept { return n_; }
  const std::vector<IntVec>& generators() const noexcept { return gens_; }

  std::size_t dim() const;
  bool is_pointed() const;
  bool is_full_dimensional() const { return dim() == n_; }
  bool contains(const RatVec& x) const;
  /// Sum of the generators; lies in the relative interior.
  IntVec interior_point() const;

  /// Extreme rays of a pointed cone; the cone is returned unchanged otherwise.
  Cone reduced() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IntVec> gens_;
};

/// {u : <u,g> >= 0 for all generators g}; throws UnsupportedRank above kMaxAmbientRank.
Cone dual_cone(const Cone& c);

/// Extreme rays of a pointed cone (primitive, sorted).
std::vector<IntVec> extreme_rays(const Cone& c);

/// Pointed, simplicial, and the minimal generators extend to a lattice basis.
bool is_regular(const Cone& c);

/// conv(vertices) + tail, with only true vertices kept (sorted lexicographically).
class SigmaPolyhedron {
 public:
  SigmaPolyhedron() = default;
  SigmaPolyhedron(std::vector<RatVec> points, Cone tail);

  /// The tail cone itself (single vertex at the origin).
  static SigmaPolyhedron tail_only(const Cone& tail);

  std::size_t ambient_rank() const noexcept { return tail_.ambient_rank(); }
  const std::vector<RatVec>& vertices() const noexcept { return vertices_; }
  const Cone& tail() const noexcept { return tail_; }

  bool is_tail_only() const;
  bool contains(const RatVec& x) const;
  /// Facet normals: every ray of the normal quasifan of this polyhedron.
  std::vector<IntVec> normals() const;

  friend bool operator==(const SigmaPolyhedron& a, const SigmaPolyhedron& b) {
    return a.vertices_ == b.vertices_ && a.tail_ == b.tail_;
  }

 private:
  std::vector<RatVec> vertices_;
  Cone tail_;
};

struct SupportValue {
  Rat value;
  std::vector<RatVec> minimizers;
};

SupportValue support_value(const SigmaPolyhedron& p, const RatVec& u);

SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& a, const SigmaPolyhedron& b);

/// Least l >= 1 with l*v integral.
Int mu(const RatVec& v);

struct CayleyPart {
  SigmaPolyhedron polyhedron;
  IntVec marker;
};

/// Cone in Z^k x N generated by (marker, v) over all vertices and (0, r) over tail rays.
Cone cayley_cone(const std::vector<CayleyPart>& parts);

struct QuasiFanCell {
  Cone cone;
  std::vector<std::size_t> selection;  // vertex index per coefficient
};

struct QuasiFan {
  std::vector<QuasiFanCell> cells;
};

QuasiFan normal_quasifan(const std::vector<SigmaPolyhedron>& coeffs, const Cone& tail);

SigmaPolyhedron face_of(const SigmaPolyhedron& p, const RatVec& u);

/// Whether the ray Q>=0 * r meets the polyhedron.
bool ray_meets(const SigmaPolyhedron& p, const IntVec& r);

}  // namespace tvs
