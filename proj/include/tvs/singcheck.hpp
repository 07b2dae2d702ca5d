#pragma once

#include "tvs/divclass.hpp"
#include "tvs/pdiv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tvs {

enum class Status { Yes, No, Inconclusive };

const char* to_string(Status s);

struct Verdict {
  Status status = Status::Inconclusive;
  std::string reason;
  std::optional<RatVec> witness_u;
  std::optional<Rat> witness_value;
};

/// mu_Z = max mu(v) over the vertices of D_Z, and B = sum (mu_Z - 1)/mu_Z [Z].
struct BoundaryData {
  std::map<std::string, Int, PointOrder> mu_max;
  QDivisor boundary;
  Rat sum = 0;
  std::optional<Rat> u0;
};

BoundaryData boundary_data(const PolyhedralDivisor& d);

Verdict check_smooth(const PolyhedralDivisor& d);

Verdict check_isolated(const PolyhedralDivisor& d);

struct RationalOptions {
  std::size_t budget = 1000000;  // lattice points per quasifan cell
};

Verdict check_rational(const PolyhedralDivisor& d, const RationalOptions& opts = {});

struct CmVerdict {
  enum class Kind { Yes, IffRational, Inconclusive } kind = Kind::Inconclusive;
  std::string reason;
  Verdict resolved;  // the rationality verdict when kind == IffRational
  Status status() const;
};

CmVerdict check_cm(const PolyhedralDivisor& d, const RationalOptions& opts = {});

struct DiscrepancyReport {
  struct VertexEntry {
    std::string point;
    RatVec vertex;
    Rat value;
    bool exceptional;
  };
  struct RayEntry {
    IntVec ray;
    Rat value;
    bool exceptional;
  };
  std::vector<VertexEntry> vertices;
  std::vector<RayEntry> rays;
  Rat minimum() const;
};

DiscrepancyReport discrepancies(const PolyhedralDivisor& d, const GorensteinSolution& sol);

Verdict check_log_terminal(const PolyhedralDivisor& d);

struct CanonicalClass {
  enum class Family { A, D, E, NotCanonical } family = Family::NotCanonical;
  int n = 0;  // A(n), D(n), E(n)
  std::string reason;
  std::string label() const;
};

CanonicalClass classify_canonical(const PolyhedralDivisor& d);

struct EllipticResult {
  enum class Kind { Elliptic, NotElliptic, UnsupportedBase } kind = Kind::NotElliptic;
  bool minimal = false;
  Int witness_u = 0;
  Int index = 0;
  std::string reason;
};

EllipticResult check_elliptic(const PolyhedralDivisor& d);

/// D_1 = D(w) for a rank-one divisor, w the generator of the dual tail.
QDivisor d_one(const PolyhedralDivisor& d);

}  // namespace tvs
