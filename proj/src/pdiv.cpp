#include "tvs/pdiv.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tvs {

namespace {

bool is_infinity(const std::string& s) { return s == "inf" || s == "\xE2\x88\x9E" || s == "infinity"; }

std::optional<Rat> numeric_label(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  return parse_rat(s);
}

}  // namespace

Curve Curve::of_genus(int g) {
  if (g < 0) throw Error(ErrorKind::DegenerateInput, "negative genus");
  if (g == 0) return projective_line();
  return {CurveKind::Higher, g};
}

std::string Curve::normalize_label(const std::string& label) const {
  std::string s = label;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty point label");
  if (kind == CurveKind::Higher) return s;
  if (is_infinity(s)) {
    if (kind == CurveKind::AffineLine) throw Error(ErrorKind::DegenerateInput, "the point at infinity is not on A^1");
    return "inf";
  }
  return to_string(parse_rat(s));
}

bool PointOrder::operator()(const std::string& a, const std::string& b) const {
  auto rank_of = [](const std::string& s, std::optional<Rat>& v) {
    v = numeric_label(s);
    if (v) return 0;
    return s == "inf" ? 1 : 2;
  };
  std::optional<Rat> va, vb;
  int ra = rank_of(a, va), rb = rank_of(b, vb);
  if (ra != rb) return ra < rb;
  if (ra == 0) return *va < *vb;
  return a < b;
}

QDivisor::QDivisor(const Terms& terms) {
  for (const auto& [p, c] : terms)
    if (c != 0) terms_.emplace(p, c);
}

Rat QDivisor::coefficient(const std::string& point) const {
  auto it = terms_.find(point);
  return it == terms_.end() ? Rat(0) : it->second;
}

void QDivisor::set(const std::string& point, const Rat& value) {
  if (value == 0) {
    terms_.erase(point);
  } else {
    terms_[point] = value;
  }
}

void QDivisor::add(const std::string& point, const Rat& value) { set(point, coefficient(point) + value); }

Rat QDivisor::degree() const {
  Rat s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

bool QDivisor::is_integral() const {
  for (const auto& [p, c] : terms_)
    if (!tvs::is_integral(c)) return false;
  return true;
}

QDivisor QDivisor::floor() const {
  QDivisor out;
  for (const auto& [p, c] : terms_) out.set(p, Rat(tvs::floor(c)));
  return out;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  QDivisor out = a;
  for (const auto& [p, c] : b.terms_) out.add(p, c);
  return out;
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) { return a + Rat(-1) * b; }

QDivisor operator*(const Rat& c, const QDivisor& a) {
  QDivisor out;
  for (const auto& [p, x] : a.terms_) out.set(p, c * x);
  return out;
}

std::string to_string(const QDivisor& d) {
  if (d.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : d.terms()) {
    Rat a = c;
    if (!first) {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    first = false;
    if (a != 1) out += to_string(a);
    out += "[" + p + "]";
  }
  return out;
}

bool is_principal_on_p1(const QDivisor& d) { return d.is_integral() && d.degree() == 0; }

FloorDegree floor_degree(const QDivisor& d) {
  FloorDegree out{0, 0};
  for (const auto& [p, c] : d.terms()) {
    out.deg += c;
    out.floor_deg += floor(c);
  }
  return out;
}

PolyhedralDivisor::PolyhedralDivisor(Curve base, Cone tail,
                                     const std::vector<std::pair<std::string, SigmaPolyhedron>>& coeffs,
                                     std::optional<QDivisor> canonical)
    : base_(base), tail_(tail.reduced()) {
  if (!tail_.is_pointed()) throw Error(ErrorKind::DegenerateInput, "tail cone is not pointed");
  trivial_ = SigmaPolyhedron::tail_only(tail_);
  std::set<std::string, PointOrder> seen;
  for (const auto& [label, poly] : coeffs) {
    std::string p = base_.normalize_label(label);
    if (!seen.insert(p).second) throw Error(ErrorKind::DuplicatePoint, "point " + p + " appears twice");
    if (poly.ambient_rank() != rank()) throw Error(ErrorKind::ShapeError, "coefficient at " + p + " has wrong rank");
    if (!(poly.tail() == tail_)) throw Error(ErrorKind::TailMismatch, "coefficient at " + p + " has a different tail");
    if (!poly.is_tail_only()) coeffs_.emplace(p, poly);
  }
  if (canonical) {
    QDivisor k;
    for (const auto& [p, c] : canonical->terms()) k.add(base_.normalize_label(p), c);
    if (base_.is_projective() && k.degree() != 2 * base_.genus - 2)
      throw Error(ErrorKind::DegenerateInput, "canonical divisor has degree " + to_string(k.degree()));
    if (!k.is_integral()) throw Error(ErrorKind::DegenerateInput, "canonical divisor is not integral");
    canonical_ = k;
  } else if (base_.is_p1()) {
    canonical_.set("inf", Rat(-2));
  }
}

const SigmaPolyhedron& PolyhedralDivisor::coefficient(const std::string& point) const {
  auto it = coeffs_.find(point);
  return it == coeffs_.end() ? trivial_ : it->second;
}

std::vector<std::string> PolyhedralDivisor::support() const {
  std::vector<std::string> out;
  for (const auto& [p, c] : coeffs_) out.push_back(p);
  return out;
}

std::vector<std::string> PolyhedralDivisor::extended_support() const {
  std::set<std::string, PointOrder> s;
  for (const auto& [p, c] : coeffs_) s.insert(p);
  for (const auto& [p, c] : canonical_.terms()) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<SigmaPolyhedron> PolyhedralDivisor::coefficient_list() const {
  std::vector<SigmaPolyhedron> out;
  for (const auto& [p, c] : coeffs_) out.push_back(c);
  return out;
}

QuasiFan PolyhedralDivisor::quasifan() const { return normal_quasifan(coefficient_list(), tail_); }

PolyhedralDivisor PolyhedralDivisor::with_canonical(const QDivisor& k) const {
  std::vector<std::pair<std::string, SigmaPolyhedron>> c(coeffs_.begin(), coeffs_.end());
  return PolyhedralDivisor(base_, tail_, c, k);
}

QDivisor evaluate(const PolyhedralDivisor& d, const RatVec& u) {
  if (u.size() != d.rank()) throw Error(ErrorKind::ShapeError, "linear form has wrong dimension");
  for (const auto& r : d.tail().generators())
    if (dot(u, r) < 0) throw Error(ErrorKind::UnboundedBelow, to_string(u) + " is not in the dual tail cone");
  QDivisor out;
  for (const auto& [p, poly] : d.coefficients()) out.set(p, support_value(poly, u).value);
  return out;
}

Properness is_proper(const PolyhedralDivisor& d) {
  if (d.base().is_affine()) return {ProperStatus::Proper, std::nullopt};
  QuasiFan fan = d.quasifan();
  bool all_positive = true, all_zero = true;
  for (const auto& cell : fan.cells) {
    for (const auto& g : cell.cone.generators()) {
      RatVec u = to_rat(g);
      Rat deg = evaluate(d, u).degree();
      if (deg < 0) return {ProperStatus::NotProper, u};
      if (deg == 0) all_positive = false;
      if (deg != 0) all_zero = false;
    }
  }
  if (d.base().is_p1()) {
    if (all_zero) return {ProperStatus::NotProper, to_rat(dual_cone(d.tail()).interior_point())};
    return {ProperStatus::Proper, std::nullopt};
  }
  if (all_positive) return {ProperStatus::Proper, std::nullopt};
  return {ProperStatus::InconclusiveGenus, std::nullopt};
}

void require_proper(const PolyhedralDivisor& d) {
  auto p = is_proper(d);
  if (p.status == ProperStatus::NotProper)
    throw Error(ErrorKind::NotProper, "degree fails at u = " + to_string(*p.witness));
}

SigmaPolyhedron degree_polyhedron(const PolyhedralDivisor& d) {
  SigmaPolyhedron acc = SigmaPolyhedron::tail_only(d.tail());
  for (const auto& [p, poly] : d.coefficients()) acc = minkowski_sum(acc, poly);
  return acc;
}

ExtremalData extremal_data(const PolyhedralDivisor& d) {
  require_proper(d);
  ExtremalData out;
  for (const auto& [p, poly] : d.coefficients())
    for (const auto& v : poly.vertices()) out.vertices.push_back({p, v, mu(v)});
  if (d.base().is_affine()) {
    out.extremal_rays = d.tail().generators();
    return out;
  }
  out.deg_polyhedron = degree_polyhedron(d);
  for (const auto& r : d.tail().generators()) {
    if (ray_meets(*out.deg_polyhedron, r)) {
      out.non_extremal_rays.push_back(r);
    } else {
      out.extremal_rays.push_back(r);
    }
  }
  return out;
}

Cohomology higher_direct_dims(const PolyhedralDivisor& d, const IntVec& u) {
  if (!d.base().is_p1()) throw Error(ErrorKind::UnsupportedBase, "cohomology dimensions are computed on P^1 only");
  Int f = floor_degree(evaluate(d, to_rat(u))).floor_deg;
  Int h0 = f + 1 > 0 ? Int(f + 1) : Int(0);
  Int h1 = -f - 1 > 0 ? Int(-f - 1) : Int(0);
  return {h0, h1};
}

}  // namespace tvs
