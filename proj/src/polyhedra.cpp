#include "tvs/polyhedra.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tvs {

namespace {

void check_dim(const RatVec& v, std::size_t n, const char* what) {
  if (v.size() != n) throw Error(ErrorKind::ShapeError, std::string(what) + " has wrong dimension");
}

std::vector<RatVec> as_rat(const std::vector<IntVec>& gens) {
  std::vector<RatVec> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(to_rat(g));
  return out;
}

std::size_t rank_of(const std::vector<IntVec>& gens, std::size_t n) {
  if (gens.empty()) return 0;
  return rank(as_rat(gens), n);
}

void canonicalize(std::vector<IntVec>& gens) {
  std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// Iterates all k-subsets of {0..m-1}; f returns false to stop.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVec> rays_given_dual(const Cone& c, const Cone& dual);

}  // namespace

Cone::Cone(std::size_t ambient_rank, const std::vector<IntVec>& generators) : n_(ambient_rank) {
  for (const auto& g : generators) {
    if (g.size() != n_) throw Error(ErrorKind::ShapeError, "cone generator has wrong dimension");
    if (is_zero(g)) continue;
    gens_.push_back(primitive(g));
  }
  canonicalize(gens_);
}

Cone Cone::from_rat(std::size_t ambient_rank, const std::vector<RatVec>& generators) {
  std::vector<IntVec> g;
  for (const auto& v : generators) {
    check_dim(v, ambient_rank, "cone generator");
    g.push_back(primitive(v));
  }
  return Cone(ambient_rank, g);
}

Cone Cone::orthant(std::size_t n) {
  std::vector<IntVec> g;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    g.push_back(e);
  }
  return Cone(n, g);
}

Cone Cone::whole_space(std::size_t n) {
  std::vector<IntVec> g;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    g.push_back(e);
    e[i] = -1;
    g.push_back(e);
  }
  return Cone(n, g);
}

std::size_t Cone::dim() const { return rank_of(gens_, n_); }

bool Cone::is_pointed() const {
  if (gens_.empty()) return true;
  return dual_cone(*this).dim() == n_;
}

bool Cone::contains(const RatVec& x) const {
  check_dim(x, n_, "point");
  Cone dual = dual_cone(*this);
  for (const auto& h : dual.generators())
    if (dot(h, x) < 0) return false;
  return true;
}

IntVec Cone::interior_point() const {
  IntVec s(n_, Int(0));
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < n_; ++i) s[i] += g[i];
  return s;
}

Cone Cone::reduced() const {
  if (gens_.empty()) return *this;
  Cone dual = dual_cone(*this);
  if (dual.dim() != n_) return *this;
  return Cone(n_, rays_given_dual(*this, dual));
}

Cone dual_cone(const Cone& c) {
  const std::size_t n = c.ambient_rank();
  if (n > kMaxAmbientRank)
    throw Error(ErrorKind::UnsupportedRank, "ambient rank " + std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxAmbientRank));
  const auto& gens = c.generators();
  if (gens.empty()) return Cone::whole_space(n);

  RatMatrix a = RatMatrix::from_rows(as_rat(gens), n);
  std::vector<RatVec> lineality = nullspace(a);
  const std::size_t d = n - lineality.size();
  std::vector<IntVec> out;
  for (const auto& l : lineality) {
    IntVec p = primitive(l);
    out.push_back(p);
    for (auto& x : p) x = -x;
    out.push_back(p);
  }

  const std::size_t m = gens.size();
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> rays(
      [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
  for_each_subset(m, d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> rows;
    for (auto i : idx) rows.push_back(to_rat(gens[i]));
    if (rows.size() > 0 && rank(rows, n) != d - 1) return true;
    for (const auto& l : lineality) rows.push_back(l);
    std::vector<RatVec> ns;
    if (rows.empty()) {
      // n == 1 with d == 1: the line itself
      ns.push_back(RatVec{Rat(1)});
    } else {
      ns = nullspace(RatMatrix::from_rows(rows, n));
    }
    if (ns.size() != 1) return true;
    RatVec x = ns[0];
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      Rat s = dot(g, x);
      if (s < 0) pos = false;
      if (s > 0) neg = false;
    }
    if (pos) rays.insert(primitive(x));
    if (neg) rays.insert(primitive(scale(Rat(-1), x)));
    return true;
  });
  out.insert(out.end(), rays.begin(), rays.end());
  return Cone(n, out);
}

namespace {

std::vector<IntVec> rays_given_dual(const Cone& c, const Cone& dual) {
  const std::size_t n = c.ambient_rank();
  std::vector<IntVec> out;
  for (const auto& g : c.generators()) {
    std::vector<IntVec> tight;
    for (const auto& h : dual.generators())
      if (dot(h, g) == 0) tight.push_back(h);
    if (n == 1 || rank_of(tight, n) + 1 == n) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<IntVec> extreme_rays(const Cone& c) {
  Cone dual = dual_cone(c);
  if (dual.dim() != c.ambient_rank()) throw Error(ErrorKind::DegenerateInput, "extreme rays of a non-pointed cone");
  return rays_given_dual(c, dual);
}

bool is_regular(const Cone& c) {
  if (c.generators().empty()) return true;
  Cone dual = dual_cone(c);
  if (dual.dim() != c.ambient_rank()) return false;
  auto rays = rays_given_dual(c, dual);
  const std::size_t k = rank_of(rays, c.ambient_rank());
  if (rays.size() != k) return false;
  IntMatrix m(k, c.ambient_rank());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c.ambient_rank(); ++j) m(i, j) = rays[i][j];
  return maximal_minor_gcd(m) == 1;
}

SigmaPolyhedron::SigmaPolyhedron(std::vector<RatVec> points, Cone tail) {
  const std::size_t n = tail.ambient_rank();
  if (points.empty()) throw Error(ErrorKind::DegenerateInput, "polyhedron without vertices");
  for (const auto& p : points) check_dim(p, n, "vertex");
  tail_ = tail.reduced();
  if (!tail_.is_pointed()) throw Error(ErrorKind::DegenerateInput, "tail cone is not pointed");
  std::sort(points.begin(), points.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) {
    vertices_ = std::move(points);
    return;
  }
  for (const auto& p : points) {
    std::vector<IntVec> g = tail_.generators();
    for (const auto& q : points)
      if (q != p) g.push_back(primitive(sub(q, p)));
    if (Cone(n, g).is_pointed()) vertices_.push_back(p);
  }
}

SigmaPolyhedron SigmaPolyhedron::tail_only(const Cone& tail) {
  return SigmaPolyhedron({RatVec(tail.ambient_rank(), Rat(0))}, tail);
}

bool SigmaPolyhedron::is_tail_only() const { return vertices_.size() == 1 && is_zero(vertices_[0]); }

std::vector<IntVec> SigmaPolyhedron::normals() const {
  std::vector<IntVec> out;
  QuasiFan fan = normal_quasifan({*this}, tail_);
  for (const auto& cell : fan.cells)
    for (const auto& g : cell.cone.generators()) out.push_back(g);
  canonicalize(out);
  return out;
}

bool SigmaPolyhedron::contains(const RatVec& x) const {
  check_dim(x, ambient_rank(), "point");
  for (const auto& u : normals()) {
    RatVec ur = to_rat(u);
    if (dot(ur, x) < support_value(*this, ur).value) return false;
  }
  return true;
}

SupportValue support_value(const SigmaPolyhedron& p, const RatVec& u) {
  check_dim(u, p.ambient_rank(), "linear form");
  for (const auto& r : p.tail().generators())
    if (dot(u, r) < 0) throw Error(ErrorKind::UnboundedBelow, "linear form " + to_string(u) + " is negative on the tail");
  SupportValue out;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rat s = dot(u, v);
    if (first || s < out.value) {
      out.value = s;
      out.minimizers.clear();
      first = false;
    }
    if (s == out.value) out.minimizers.push_back(v);
  }
  return out;
}

SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& a, const SigmaPolyhedron& b) {
  if (!(a.tail() == b.tail())) throw Error(ErrorKind::TailMismatch, "Minkowski summands have different tails");
  std::vector<RatVec> c;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) c.push_back(add(x, y));
  return SigmaPolyhedron(std::move(c), a.tail());
}

Int mu(const RatVec& v) { return denominator_lcm(v); }

Cone cayley_cone(const std::vector<CayleyPart>& parts) {
  if (parts.empty()) throw Error(ErrorKind::DegenerateInput, "Cayley cone without parts");
  const Cone& tail = parts[0].polyhedron.tail();
  const std::size_t k = parts[0].marker.size(), n = tail.ambient_rank();
  std::vector<IntVec> gens;
  for (const auto& part : parts) {
    if (!(part.polyhedron.tail() == tail)) throw Error(ErrorKind::TailMismatch, "Cayley parts have different tails");
    if (part.marker.size() != k) throw Error(ErrorKind::ShapeError, "Cayley markers have different lengths");
    for (const auto& v : part.polyhedron.vertices()) {
      RatVec g = to_rat(part.marker);
      g.insert(g.end(), v.begin(), v.end());
      gens.push_back(primitive(g));
    }
  }
  for (const auto& r : tail.generators()) {
    IntVec g(k, Int(0));
    g.insert(g.end(), r.begin(), r.end());
    gens.push_back(g);
  }
  return Cone(k + n, gens);
}

QuasiFan normal_quasifan(const std::vector<SigmaPolyhedron>& coeffs, const Cone& tail) {
  const std::size_t n = tail.ambient_rank();
  if (n > kMaxAmbientRank) throw Error(ErrorKind::UnsupportedRank, "ambient rank exceeds cap");
  Cone t = tail.reduced();
  for (const auto& c : coeffs)
    if (!(c.tail() == t)) throw Error(ErrorKind::TailMismatch, "coefficients have different tails");
  QuasiFan fan;
  std::vector<std::size_t> sel;
  std::vector<IntVec> gens = t.generators();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == coeffs.size()) {
      fan.cells.push_back(QuasiFanCell{dual_cone(Cone(n, gens)), sel});
      return;
    }
    const auto& verts = coeffs[i].vertices();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      std::size_t mark = gens.size();
      for (std::size_t w = 0; w < verts.size(); ++w)
        if (w != j) gens.push_back(primitive(sub(verts[w], verts[j])));
      if (Cone(n, gens).is_pointed()) {
        sel.push_back(j);
        self(self, i + 1);
        sel.pop_back();
      }
      gens.resize(mark);
    }
  };
  rec(rec, 0);
  return fan;
}

SigmaPolyhedron face_of(const SigmaPolyhedron& p, const RatVec& u) {
  auto sv = support_value(p, u);
  std::vector<IntVec> g;
  for (const auto& r : p.tail().generators())
    if (dot(u, r) == 0) g.push_back(r);
  return SigmaPolyhedron(sv.minimizers, Cone(p.ambient_rank(), g));
}

bool ray_meets(const SigmaPolyhedron& p, const IntVec& r) {
  Rat lo = 0;
  std::optional<Rat> hi;
  for (const auto& u : p.normals()) {
    Rat a = dot(u, r);
    Rat b = support_value(p, to_rat(u)).value;
    if (a > 0) {
      lo = std::max(lo, Rat(b / a));
    } else if (a < 0) {
      Rat t = b / a;
      if (!hi || t < *hi) hi = t;
    } else if (b > 0) {
      return false;
    }
  }
  return !hi || lo <= *hi;
}

}  // namespace tvs
