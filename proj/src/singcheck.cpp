#include "tvs/singcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvs {

const char* to_string(Status s) {
  switch (s) {
    case Status::Yes:
      return "yes";
    case Status::No:
      return "no";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "";
}

namespace {

Verdict yes(std::string reason) { return {Status::Yes, std::move(reason), std::nullopt, std::nullopt}; }
Verdict no(std::string reason) { return {Status::No, std::move(reason), std::nullopt, std::nullopt}; }

bool is_lattice_translate(const SigmaPolyhedron& p) { return p.vertices().size() == 1 && is_integral(p.vertices()[0]); }

SigmaPolyhedron translate(const SigmaPolyhedron& p, const RatVec& w) {
  std::vector<RatVec> v;
  for (const auto& x : p.vertices()) v.push_back(add(x, w));
  return SigmaPolyhedron(v, p.tail());
}

std::size_t poly_dim(const SigmaPolyhedron& p) {
  std::vector<RatVec> rows;
  for (const auto& v : p.vertices()) rows.push_back(sub(v, p.vertices()[0]));
  for (const auto& g : p.tail().generators()) rows.push_back(to_rat(g));
  if (rows.empty()) return 0;
  return rank(rows, p.ambient_rank());
}

RatVec dual_generator(const PolyhedralDivisor& d) {
  Cone dual = dual_cone(d.tail());
  return to_rat(dual.generators().at(0));
}

// Smoothness of X[D] over P^1 via the two-point normal form and its bicone.
Verdict bicone_smooth(const std::vector<SigmaPolyhedron>& coeffs, const Cone& tail) {
  std::vector<SigmaPolyhedron> nontrivial;
  RatVec w(tail.ambient_rank(), Rat(0));
  for (const auto& c : coeffs) {
    if (is_lattice_translate(c)) {
      w = add(w, c.vertices()[0]);
    } else {
      nontrivial.push_back(c);
    }
  }
  if (nontrivial.size() > 2)
    return no(std::to_string(nontrivial.size()) + " coefficients are not lattice translates of the tail");
  SigmaPolyhedron trivial = SigmaPolyhedron::tail_only(tail);
  SigmaPolyhedron dy = translate(nontrivial.empty() ? trivial : nontrivial[0], w);
  SigmaPolyhedron dz = nontrivial.size() < 2 ? trivial : nontrivial[1];
  Cone bicone = cayley_cone({{dy, {1}}, {dz, {-1}}});
  if (is_regular(bicone)) return yes("bicone is regular");
  Verdict v = no("bicone is not regular");
  return v;
}

struct CellData {
  std::vector<RatVec> selected;
  Rat s_f = 0;
  Int ell = 1;
};

CellData cell_data(const std::vector<SigmaPolyhedron>& coeffs, const QuasiFanCell& cell) {
  CellData cd;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const RatVec& v = coeffs[i].vertices()[cell.selection[i]];
    cd.selected.push_back(v);
    Int m = mu(v);
    cd.s_f += Rat(m - 1) / Rat(m);
    cd.ell = lcm(cd.ell, m);
  }
  return cd;
}

Rat linear_degree(const CellData& cd, const RatVec& u) {
  Rat s = 0;
  for (const auto& v : cd.selected) s += dot(u, v);
  return s;
}

Int floor_degree_at(const CellData& cd, const RatVec& u) {
  Int s = 0;
  for (const auto& v : cd.selected) s += floor(dot(u, v));
  return s;
}

}  // namespace

BoundaryData boundary_data(const PolyhedralDivisor& d) {
  BoundaryData b;
  for (const auto& [p, poly] : d.coefficients()) {
    Int m = 1;
    for (const auto& v : poly.vertices()) m = std::max(m, mu(v));
    b.mu_max[p] = m;
    Rat c = Rat(m - 1) / Rat(m);
    b.boundary.set(p, c);
    b.sum += c;
  }
  if (d.rank() == 1 && d.base().is_projective()) {
    try {
      b.u0 = rank_one_u0(d);
    } catch (const Error&) {
    }
  }
  return b;
}

Verdict check_smooth(const PolyhedralDivisor& d) {
  require_proper(d);
  if (d.base().is_affine()) {
    for (const auto& [p, poly] : d.coefficients()) {
      if (!is_regular(cayley_cone({{poly, {1}}}))) {
        return no("chart cone at " + p + " is not regular");
      }
    }
    if (!is_regular(d.tail())) return no("tail cone is not regular");
    return yes("all chart cones are regular");
  }
  if (!d.base().is_p1()) return no("complete base curve of positive genus");
  return bicone_smooth(d.coefficient_list(), d.tail());
}

Verdict check_isolated(const PolyhedralDivisor& d) {
  if (d.base().is_affine()) throw Error(ErrorKind::UnsupportedBase, "isolatedness is decided over a complete base curve");
  if (!d.tail().is_full_dimensional()) throw Error(ErrorKind::UnsupportedShape, "the tail cone is not full-dimensional");
  require_proper(d);
  const std::size_t n = d.rank();
  std::vector<IntVec> rays;
  QuasiFan fan = d.quasifan();
  for (const auto& cell : fan.cells)
    for (const auto& g : cell.cone.generators()) rays.push_back(g);
  std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  std::size_t facets = 0;
  for (const auto& r : rays) {
    RatVec u = to_rat(r);
    std::vector<IntVec> tg;
    for (const auto& g : d.tail().generators())
      if (dot(u, g) == 0) tg.push_back(g);
    Cone tau(n, tg);
    std::vector<SigmaPolyhedron> faces;
    std::size_t min_codim = n - tau.dim();
    for (const auto& [p, poly] : d.coefficients()) {
      faces.push_back(face_of(poly, u));
      min_codim = std::min(min_codim, n - poly_dim(faces.back()));
    }
    if (min_codim != 1) continue;
    ++facets;
    SigmaPolyhedron deg = SigmaPolyhedron::tail_only(tau);
    for (const auto& f : faces) deg = minkowski_sum(deg, f);
    bool inside = !deg.is_tail_only();
    for (const auto& v : deg.vertices()) inside = inside && tau.contains(v);
    Verdict fail = no("");
    fail.witness_u = u;
    if (inside) {
      if (!d.base().is_p1()) {
        fail.reason = "facet face is not smooth over a base of positive genus";
        return fail;
      }
      Verdict s = bicone_smooth(faces, tau);
      if (s.status != Status::Yes) {
        fail.reason = "facet " + to_string(u) + ": " + s.reason;
        return fail;
      }
    } else {
      if (!is_regular(tau)) {
        fail.reason = "facet " + to_string(u) + ": face of the tail is not regular";
        return fail;
      }
      auto pts = d.support();
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!is_regular(cayley_cone({{faces[i], {1}}}))) {
          fail.reason = "facet " + to_string(u) + ": chart cone at " + pts[i] + " is not regular";
          return fail;
        }
      }
    }
  }
  return yes("facets checked: " + std::to_string(facets));
}

Verdict check_rational(const PolyhedralDivisor& d, const RationalOptions& opts) {
  require_proper(d);
  if (d.base().is_affine()) return yes("affine base");
  if (!d.base().is_p1()) return no("H^1 of the structure sheaf of a genus " + std::to_string(d.base().genus) + " base is nonzero");
  const std::size_t n = d.rank();
  auto coeffs = d.coefficient_list();
  bool inconclusive = false;
  std::optional<Int> worst;
  RatVec worst_u;
  QuasiFan fan = d.quasifan();
  for (const auto& cell : fan.cells) {
    CellData cd = cell_data(coeffs, cell);
    Rat c = cd.s_f - 1;
    if (c < 0) continue;
    std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
    for (const auto& g : cell.cone.generators()) {
      RatVec gr = to_rat(g);
      Rat l = linear_degree(cd, gr);
      Rat lam = l == 0 ? Rat(cd.ell) : Rat(c / l);
      for (std::size_t i = 0; i < n; ++i) {
        Rat x = lam * gr[i];
        if (x < 0) lo[i] += x;
        else hi[i] += x;
      }
    }
    std::vector<Int> a(n), b(n);
    Rat size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = floor(lo[i]);
      b[i] = ceil(hi[i]);
      size *= Rat(b[i] - a[i] + 1);
    }
    if (size > Rat(static_cast<unsigned long>(opts.budget))) {
      inconclusive = true;
      continue;
    }
    Cone ineq = dual_cone(cell.cone);
    IntVec u = a;
    for (;;) {
      RatVec ur = to_rat(u);
      bool in = true;
      for (const auto& h : ineq.generators())
        if (dot(h, ur) < 0) {
          in = false;
          break;
        }
      if (in && linear_degree(cd, ur) <= c) {
        Int f = floor_degree_at(cd, ur);
        if (!worst || f < *worst || (f == *worst && lex_less(ur, worst_u))) {
          worst = f;
          worst_u = ur;
        }
      }
      std::size_t i = 0;
      while (i < n && u[i] == b[i]) {
        u[i] = a[i];
        ++i;
      }
      if (i == n) break;
      ++u[i];
    }
  }
  Verdict v;
  if (worst) {
    v.witness_u = worst_u;
    v.witness_value = Rat(*worst);
  }
  if (worst && *worst < -1) {
    v.status = Status::No;
    v.reason = "floor degree " + to_string(*worst) + " at u = " + to_string(worst_u);
  } else if (inconclusive) {
    v.status = Status::Inconclusive;
    v.reason = "enumeration budget exceeded";
  } else {
    v.status = Status::Yes;
    v.reason = worst ? "minimum floor degree " + to_string(*worst) : "floor degrees are nonnegative";
  }
  return v;
}

Status CmVerdict::status() const {
  switch (kind) {
    case Kind::Yes:
      return Status::Yes;
    case Kind::IffRational:
      return resolved.status;
    case Kind::Inconclusive:
      return Status::Inconclusive;
  }
  return Status::Inconclusive;
}

CmVerdict check_cm(const PolyhedralDivisor& d, const RationalOptions& opts) {
  CmVerdict out;
  if (d.base().is_affine()) {
    out.kind = CmVerdict::Kind::Yes;
    out.reason = "affine base";
    return out;
  }
  if (d.rank() == 1) {
    out.kind = CmVerdict::Kind::Yes;
    out.reason = "normal surface";
    return out;
  }
  ExtremalData ext = extremal_data(d);
  bool iff = false;
  if (ext.non_extremal_rays.empty()) {
    iff = true;
    out.reason = "all tail rays are extremal";
  } else {
    try {
      if (check_isolated(d).status == Status::Yes) {
        iff = true;
        out.reason = "isolated singularity";
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedShape) throw;
    }
  }
  if (!iff) {
    out.kind = CmVerdict::Kind::Inconclusive;
    out.reason = "no criterion applies";
    return out;
  }
  out.kind = CmVerdict::Kind::IffRational;
  out.resolved = check_rational(d, opts);
  return out;
}

Rat DiscrepancyReport::minimum() const {
  std::optional<Rat> m;
  for (const auto& v : vertices)
    if (!m || v.value < *m) m = v.value;
  for (const auto& r : rays)
    if (!m || r.value < *m) m = r.value;
  return m.value_or(Rat(0));
}

DiscrepancyReport discrepancies(const PolyhedralDivisor& d, const GorensteinSolution& sol) {
  if (!sol.q_gorenstein) throw Error(ErrorKind::NotQGorenstein, "discrepancies need a Q-Gorenstein solution");
  DiscrepancyReport rep;
  for (const auto& p : d.extended_support()) {
    Rat b = d.canonical().coefficient(p), a = sol.a_at(p);
    for (const auto& v : d.coefficient(p).vertices()) {
      Rat m = Rat(mu(v));
      rep.vertices.push_back({p, v, m * (b - a - dot(sol.u, v) + 1) - 1, false});
    }
  }
  ExtremalData ext = extremal_data(d);
  for (const auto& r : d.tail().generators()) {
    bool exceptional = std::find(ext.non_extremal_rays.begin(), ext.non_extremal_rays.end(), r) != ext.non_extremal_rays.end();
    rep.rays.push_back({r, -1 - dot(sol.u, r), exceptional});
  }
  return rep;
}

Verdict check_log_terminal(const PolyhedralDivisor& d) {
  require_proper(d);
  if (!d.base().is_projective()) {
    Verdict v;
    v.reason = "Q-Gorenstein property is not decided over an affine base";
    return v;
  }
  if (!d.base().is_p1()) return no("complete base curve of positive genus");
  GorensteinSolution sol = gorenstein_solve(d);
  if (!sol.q_gorenstein) throw Error(ErrorKind::NotQGorenstein, "log-terminality needs a Q-Gorenstein variety");
  BoundaryData b = boundary_data(d);
  bool by_boundary = b.sum < 2;
  DiscrepancyReport rep = discrepancies(d, sol);
  bool by_discrepancy = rep.minimum() > -1;
  if (by_boundary != by_discrepancy)
    throw std::logic_error("boundary sum and discrepancy criteria disagree");
  Verdict v;
  v.status = by_boundary ? Status::Yes : Status::No;
  v.witness_value = b.sum;
  v.reason = "boundary sum " + to_string(b.sum) + ", minimal discrepancy " + to_string(rep.minimum());
  return v;
}

std::string CanonicalClass::label() const {
  switch (family) {
    case Family::A:
      return "A(" + std::to_string(n) + ")";
    case Family::D:
      return "D(" + std::to_string(n) + ")";
    case Family::E:
      return "E(" + std::to_string(n) + ")";
    case Family::NotCanonical:
      return "NotCanonical";
  }
  return "";
}

QDivisor d_one(const PolyhedralDivisor& d) {
  if (d.rank() != 1) throw Error(ErrorKind::UnsupportedRank, "D_1 is defined for rank one");
  return evaluate(d, dual_generator(d));
}

CanonicalClass classify_canonical(const PolyhedralDivisor& d) {
  if (d.rank() != 1) throw Error(ErrorKind::UnsupportedRank, "canonical classification needs rank one");
  if (!d.base().is_p1()) throw Error(ErrorKind::UnsupportedBase, "canonical classification needs the base P^1");
  require_proper(d);
  CanonicalClass out;
  GorensteinSolution sol = gorenstein_solve(d);
  if (!sol.q_gorenstein) {
    out.reason = "not Q-Gorenstein";
    return out;
  }
  Verdict lt = check_log_terminal(d);
  Rat u0 = rank_one_u0(d);
  if (lt.status != Status::Yes) {
    out.reason = "not log-terminal";
    return out;
  }
  if (sol.index != 1) {
    out.reason = "Gorenstein index " + to_string(sol.index);
    return out;
  }
  if (u0 > -1) {
    out.reason = "ray discrepancy " + to_string(Rat(-1 - u0)) + " is negative";
    return out;
  }
  QDivisor d1 = d_one(d);
  std::vector<Int> m;
  for (const auto& [p, c] : d1.terms())
    if (!is_integral(c)) m.push_back(Int(c.get_den()));
  std::sort(m.begin(), m.end());
  Rat deg = d1.degree();
  if (m.size() <= 2) {
    Rat prod = deg;
    for (const auto& x : m) prod *= Rat(x);
    if (!is_integral(prod)) throw std::logic_error("cyclic quotient order is not integral");
    out.family = CanonicalClass::Family::A;
    out.n = static_cast<int>(Int(prod.get_num() - 1).get_si());
    out.reason = out.n == 0 ? "smooth point" : "cyclic quotient";
    return out;
  }
  if (m.size() == 3 && m[0] == 2 && m[1] == 2) {
    out.family = CanonicalClass::Family::D;
    out.n = static_cast<int>(m[2].get_si()) + 2;
    out.reason = "profile (2,2," + to_string(m[2]) + ")";
    return out;
  }
  if (m.size() == 3 && m[0] == 2 && m[1] == 3 && m[2] >= 3 && m[2] <= 5) {
    out.family = CanonicalClass::Family::E;
    out.n = static_cast<int>(m[2].get_si()) + 3;
    out.reason = "profile (2,3," + to_string(m[2]) + ")";
    return out;
  }
  out.reason = "multiplicity profile is not Platonic";
  return out;
}

EllipticResult check_elliptic(const PolyhedralDivisor& d) {
  if (d.rank() != 1) throw Error(ErrorKind::UnsupportedRank, "elliptic check needs rank one");
  EllipticResult out;
  if (!d.base().is_p1()) {
    out.kind = EllipticResult::Kind::UnsupportedBase;
    out.reason = "elliptic check is implemented over P^1";
    return out;
  }
  QDivisor d1 = d_one(d);
  Rat deg = d1.degree();
  if (deg <= 0) throw Error(ErrorKind::NotProper, "deg D_1 = " + to_string(deg));
  Rat s_f = 0;
  for (const auto& [p, c] : d1.terms()) s_f += Rat(Int(c.get_den()) - 1) / Rat(c.get_den());
  Int bound = ceil(Rat((s_f + 2) / deg));
  int hits = 0;
  for (Int u = 1; u <= bound; ++u) {
    Int f = floor_degree(Rat(u) * d1).floor_deg;
    if (f < -2) {
      out.kind = EllipticResult::Kind::NotElliptic;
      out.witness_u = u;
      out.reason = "floor degree " + to_string(f) + " at u = " + to_string(u);
      return out;
    }
    if (f == -2) {
      if (hits == 0) out.witness_u = u;
      ++hits;
    }
  }
  if (hits != 1) {
    out.kind = EllipticResult::Kind::NotElliptic;
    out.reason = std::to_string(hits) + " degrees with floor degree -2";
    return out;
  }
  out.kind = EllipticResult::Kind::Elliptic;
  GorensteinSolution sol = gorenstein_solve(d);
  out.index = sol.q_gorenstein ? sol.index : Int(0);
  out.minimal = sol.q_gorenstein && sol.index == 1;
  out.reason = out.minimal ? "minimal elliptic" : "elliptic, not Gorenstein";
  return out;
}

}  // namespace tvs
