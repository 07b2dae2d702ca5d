#include "tvs/divclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvs {

namespace {

struct MonsterPoint {
  std::string label;
  IntVec cls;
  Rat b;
  std::vector<RatVec> vertices;
};

MonsterSystem build_monster(const std::vector<MonsterPoint>& pts, const std::vector<IntVec>& rays, std::size_t n,
                            std::size_t r) {
  const std::size_t s = pts.size();
  std::size_t rows = r + rays.size();
  for (const auto& p : pts) rows += p.vertices.size();
  MonsterSystem sys;
  sys.matrix = RatMatrix(rows, s + n);
  sys.rhs = RatVec(rows, Rat(0));
  sys.class_rows = r;
  sys.lattice_rank = n;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < s; ++i) sys.matrix(k, i) = pts[i].cls[k];
  std::size_t row = r;
  for (std::size_t i = 0; i < s; ++i) {
    sys.points.push_back(pts[i].label);
    for (const auto& v : pts[i].vertices) {
      Rat m = Rat(mu(v));
      sys.matrix(row, i) = m;
      for (std::size_t j = 0; j < n; ++j) sys.matrix(row, s + j) = m * v[j];
      sys.rhs[row] = m * pts[i].b + m - 1;
      ++row;
    }
  }
  for (const auto& ray : rays) {
    for (std::size_t j = 0; j < n; ++j) sys.matrix(row, s + j) = ray[j];
    sys.rhs[row] = -1;
    ++row;
  }
  return sys;
}

void require_p1(const PolyhedralDivisor& d, const char* what) {
  if (!d.base().is_p1()) throw Error(ErrorKind::UnsupportedBase, std::string(what) + " requires the base P^1");
}

void require_full_tail(const PolyhedralDivisor& d) {
  if (!d.tail().is_full_dimensional())
    throw Error(ErrorKind::UnsupportedShape, "the tail cone is not full-dimensional");
}

std::vector<MonsterPoint> p1_points(const PolyhedralDivisor& d, const std::vector<std::string>& labels) {
  std::vector<MonsterPoint> pts;
  for (const auto& p : labels) pts.push_back({p, IntVec{1}, d.canonical().coefficient(p), d.coefficient(p).vertices()});
  return pts;
}

Int index_of(const RatVec& a, const RatVec& u) { return lcm(denominator_lcm(a), denominator_lcm(u)); }

}  // namespace

std::string to_string(const PrimeLabel& l) {
  switch (l.kind) {
    case PrimeLabel::Kind::ClassOfY:
      return "[Y]";
    case PrimeLabel::Kind::Vertex:
      return "D[" + l.point + "," + to_string(l.vertex) + "]";
    case PrimeLabel::Kind::Ray:
      return "E" + to_string(l.ray);
  }
  return "";
}

RelationMatrix relation_matrix(const PolyhedralDivisor& d) {
  if (d.base().kind == CurveKind::Higher) throw Error(ErrorKind::UnsupportedBase, "class groups over genus >= 1 bases");
  const std::size_t n = d.rank();
  ExtremalData ext = extremal_data(d);
  RelationMatrix rm;
  const std::size_t y_cols = d.base().is_p1() ? 1 : 0;
  if (y_cols) rm.columns.push_back({PrimeLabel::Kind::ClassOfY, "", {}, {}});
  for (const auto& v : ext.vertices) rm.columns.push_back({PrimeLabel::Kind::Vertex, v.point, v.vertex, {}});
  for (const auto& r : ext.extremal_rays) rm.columns.push_back({PrimeLabel::Kind::Ray, "", {}, r});
  const auto support = d.support();
  rm.matrix = IntMatrix(support.size() + n, rm.columns.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (y_cols) rm.matrix(i, 0) = 1;
    for (std::size_t c = y_cols; c < y_cols + ext.vertices.size(); ++c)
      if (ext.vertices[c - y_cols].point == support[i]) rm.matrix(i, c) = -ext.vertices[c - y_cols].mu;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t row = support.size() + k;
    for (std::size_t c = 0; c < ext.vertices.size(); ++c) {
      const auto& v = ext.vertices[c];
      Rat x = Rat(v.mu) * v.vertex[k];
      rm.matrix(row, y_cols + c) = x.get_num();
    }
    for (std::size_t c = 0; c < ext.extremal_rays.size(); ++c)
      rm.matrix(row, y_cols + ext.vertices.size() + c) = ext.extremal_rays[c][k];
  }
  return rm;
}

std::string to_string(const ClassGroup& g) {
  if (g.trivial()) return "0";
  std::string out;
  if (g.free_rank > 0) out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + to_string(t);
  }
  return out;
}

ClassGroup class_group(const PolyhedralDivisor& d) {
  RelationMatrix rm = relation_matrix(d);
  SmithForm s = smith_normal_form(rm.matrix);
  ClassGroup g;
  std::size_t nonzero = 0;
  for (const auto& x : s.diagonal) {
    if (x != 0) ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = rm.columns.size() - nonzero;
  g.q_factorial = g.free_rank == 0;
  ExtremalData ext = extremal_data(d);
  std::size_t lhs = d.base().is_p1() ? 1 : 0;
  for (const auto& [p, poly] : d.coefficients()) lhs += poly.vertices().size() - 1;
  lhs += ext.extremal_rays.size();
  g.count_formula = lhs == d.rank();
  return g;
}

MonsterSystem monster_system(const PolyhedralDivisor& d) {
  require_p1(d, "the canonical-class system");
  return build_monster(p1_points(d, d.extended_support()), extremal_data(d).extremal_rays, d.rank(), 1);
}

MonsterSystem monster_system(const NumericalInputs& in) {
  std::vector<MonsterPoint> pts;
  for (const auto& p : in.points) {
    if (p.numerical_class.size() != in.num_rank)
      throw Error(ErrorKind::ShapeError, "numerical class of " + p.label + " has wrong length");
    for (const auto& v : p.vertices)
      if (v.size() != in.lattice_rank) throw Error(ErrorKind::ShapeError, "vertex at " + p.label + " has wrong rank");
    pts.push_back({p.label, p.numerical_class, p.canonical_coefficient, p.vertices});
  }
  for (const auto& r : in.extremal_rays)
    if (r.size() != in.lattice_rank) throw Error(ErrorKind::ShapeError, "extremal ray has wrong rank");
  return build_monster(pts, in.extremal_rays, in.lattice_rank, in.num_rank);
}

Rat GorensteinSolution::a_at(const std::string& point) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == point) return a[i];
  return 0;
}

namespace {

GorensteinSolution solve_monster(const MonsterSystem& sys) {
  GorensteinSolution out;
  out.points = sys.points;
  auto sol = solve_exact(sys.matrix, sys.rhs);
  if (auto* inc = std::get_if<Inconsistent>(&sol)) {
    out.q_gorenstein = false;
    out.certificate = inc->certificate;
    return out;
  }
  if (std::holds_alternative<Underdetermined>(sol))
    throw Error(ErrorKind::DegenerateInput, "canonical-class system has dependent columns");
  const RatVec& x = std::get<UniqueSolution>(sol).x;
  const std::size_t s = sys.points.size();
  out.q_gorenstein = true;
  out.a.assign(x.begin(), x.begin() + s);
  out.u.assign(x.begin() + s, x.end());
  out.index = index_of(out.a, out.u);
  return out;
}

}  // namespace

Rat rank_one_u0(const PolyhedralDivisor& d) {
  if (d.rank() != 1) throw Error(ErrorKind::UnsupportedRank, "u_0 is defined for rank one");
  RatVec w = to_rat(dual_cone(d.tail()).generators().at(0));
  Rat deg_d = evaluate(d, w).degree();
  if (deg_d == 0) throw Error(ErrorKind::DegenerateInput, "deg D_1 vanishes");
  Rat kb = d.canonical().degree();
  for (const auto& [p, poly] : d.coefficients()) {
    Int m = 1;
    for (const auto& v : poly.vertices()) m = std::max(m, mu(v));
    kb += Rat(m - 1) / Rat(m);
  }
  return kb / deg_d;
}

GorensteinSolution gorenstein_solve(const PolyhedralDivisor& d) {
  require_p1(d, "gorenstein_solve");
  require_full_tail(d);
  require_proper(d);
  GorensteinSolution out = solve_monster(monster_system(d));
  if (out.q_gorenstein && d.rank() == 1) {
    RatVec w = to_rat(dual_cone(d.tail()).generators().at(0));
    if (scale(rank_one_u0(d), w) != out.u) throw std::logic_error("rank-one canonical degree disagrees with the full system");
  }
  return out;
}

GorensteinSolution gorenstein_solve(const NumericalInputs& in) {
  GorensteinSolution out = solve_monster(monster_system(in));
  out.principality_decided = false;
  return out;
}

FactorialityResult factoriality_det(const PolyhedralDivisor& d) {
  require_p1(d, "factoriality_det");
  MonsterSystem sys = build_monster(p1_points(d, d.support()), extremal_data(d).extremal_rays, d.rank(), 1);
  FactorialityResult r;
  r.rows = sys.matrix.rows();
  r.cols = sys.matrix.cols();
  r.square = r.rows == r.cols;
  if (!r.square) return r;
  Rat det = determinant(sys.matrix);
  r.det = det.get_num();
  r.factorial = abs(*r.det) == 1;
  return r;
}

GeneratorDegree generator_degrees(const PolyhedralDivisor& d, const GeneratorTarget& target) {
  require_p1(d, "generator_degrees");
  ExtremalData ext = extremal_data(d);
  std::vector<std::string> labels = d.support();
  if (!target.point.empty()) {
    std::string p = d.base().normalize_label(target.point);
    if (std::find(labels.begin(), labels.end(), p) == labels.end()) labels.push_back(p);
  }
  MonsterSystem sys = build_monster(p1_points(d, labels), ext.extremal_rays, d.rank(), 1);
  RatVec rhs(sys.rhs.size(), Rat(0));
  bool found = false;
  std::size_t row = 1;
  for (const auto& p : sys.points) {
    for (const auto& v : d.coefficient(p).vertices()) {
      if (!target.point.empty() && d.base().normalize_label(target.point) == p && v == target.vertex) {
        rhs[row] = 1;
        found = true;
      }
      ++row;
    }
  }
  for (const auto& r : ext.extremal_rays) {
    if (target.point.empty() && primitive(target.ray) == r) {
      rhs[row] = 1;
      found = true;
    }
    ++row;
  }
  if (!found) throw Error(ErrorKind::DegenerateInput, "target is not a prime divisor of the variety");
  auto sol = solve_exact(sys.matrix, rhs);
  auto* uniq = std::get_if<UniqueSolution>(&sol);
  if (!uniq || !is_integral(uniq->x))
    throw Error(ErrorKind::NoGlobalEquation, "the target divisor is not principal");
  const std::size_t s = sys.points.size();
  GeneratorDegree out;
  for (std::size_t i = 0; i < s; ++i) out.f_divisor.set(sys.points[i], uniq->x[i]);
  out.u = to_int(RatVec(uniq->x.begin() + s, uniq->x.end()));
  return out;
}

}  // namespace tvs
