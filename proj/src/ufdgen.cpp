#include "tvs/ufdgen.hpp"

#include "tvs/divclass.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tvs {

std::size_t AdmissibleData::size() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.mu.size() - 1;
  return s;
}

namespace {

Int tuple_gcd(const std::vector<Int>& mu) {
  Int g = 0;
  for (const auto& m : mu) g = gcd(g, m);
  return g;
}

using Tuples = std::vector<std::vector<Int>>;
using Vertices = std::vector<std::vector<RatVec>>;

Vertices build_vertices(const Tuples& mus, int k) {
  std::size_t j = 0;
  while (j < mus.size() && mus[j].size() == 1) ++j;
  if (j == mus.size()) {
    const std::size_t s = mus.size();
    std::vector<Int> partial(s, Int(1));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t l = 0; l < s; ++l)
        if (l != i) partial[i] *= mus[l][0];
    GcdResult g = ext_gcd_multi(partial);
    if (g.gcd != 1) throw Error(ErrorKind::DegenerateInput, "multiplicities are not pairwise coprime");
    std::vector<Int> c = g.coeffs;
    if (s >= 2) {
      c[0] += k * mus[0][0];
      c[1] -= k * mus[1][0];
    }
    Vertices out(s);
    for (std::size_t i = 0; i < s; ++i) out[i].push_back(RatVec{make_rat(c[i], mus[i][0])});
    return out;
  }
  const std::size_t r = mus[j].size();
  const Int a = mus[j][r - 2], b = mus[j][r - 1];
  std::vector<Int> ab{a, b};
  GcdResult g = ext_gcd_multi(ab);
  Int alpha = g.coeffs[0] - k * b, beta = g.coeffs[1] + k * a;
  Tuples reduced = mus;
  reduced[j].pop_back();
  reduced[j].back() = g.gcd;
  Vertices prev = build_vertices(reduced, k);
  Vertices out(mus.size());
  for (std::size_t i = 0; i < mus.size(); ++i) {
    for (std::size_t l = 0; l < prev[i].size(); ++l) {
      RatVec v = prev[i][l];
      if (i == j && l == r - 2) {
        RatVec w = v;
        v.push_back(make_rat(-beta, a));
        w.push_back(make_rat(alpha, b));
        out[i].push_back(v);
        out[i].push_back(w);
      } else {
        v.push_back(Rat(0));
        out[i].push_back(v);
      }
    }
  }
  return out;
}

PolyhedralDivisor divisor_from_vertices(const AdmissibleData& z, const Vertices& verts) {
  const std::size_t n = z.size() + 1;
  std::vector<RatVec> rays{RatVec(n, Rat(0))};
  for (const auto& row : verts) {
    std::vector<RatVec> next;
    for (const auto& partial : rays)
      for (const auto& v : row) next.push_back(add(partial, v));
    rays = std::move(next);
  }
  Cone tail = Cone::from_rat(n, rays);
  std::vector<std::pair<std::string, SigmaPolyhedron>> coeffs;
  for (std::size_t i = 0; i < verts.size(); ++i) coeffs.push_back({z.entries[i].point, SigmaPolyhedron(verts[i], tail)});
  return PolyhedralDivisor(Curve::projective_line(), tail, coeffs);
}

std::string variable_name(const AdmissibleData& z, std::size_t i, std::size_t j) {
  std::string name = "T" + std::to_string(i + 1);
  if (z.entries[i].mu.size() > 1) name += std::to_string(j + 1);
  return name;
}

std::optional<Rat> coordinate(const std::string& label) {
  std::string p = Curve::projective_line().normalize_label(label);
  if (p == "inf") return std::nullopt;
  try {
    return parse_rat(p);
  } catch (const Error&) {
    throw Error(ErrorKind::DegenerateInput, "point " + label + " has no coordinate on P^1");
  }
}

Int weight_of(const IntVec& degree, const IntVec& weight) {
  Int w = 0;
  for (std::size_t i = 0; i < degree.size(); ++i) w += degree[i] * weight[i];
  return w;
}

// Number of exponent vectors over the given weights with total weight k, for k = 0..d_max.
std::vector<Int> free_count(const std::vector<long>& weights, int d_max) {
  std::vector<Int> c(d_max + 1, Int(0));
  c[0] = 1;
  for (long w : weights)
    for (int k = static_cast<int>(w); k <= d_max; ++k) c[k] += c[k - w];
  return c;
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

void validate(const AdmissibleData& z) {
  if (z.entries.empty()) throw Error(ErrorKind::DegenerateInput, "admissible data need at least one point");
  std::set<std::string> seen;
  for (const auto& e : z.entries) {
    if (e.mu.empty()) throw Error(ErrorKind::DegenerateInput, "empty exponent tuple at " + e.point);
    for (const auto& m : e.mu)
      if (m <= 0) throw Error(ErrorKind::DegenerateInput, "exponents must be positive at " + e.point);
    std::string p = Curve::projective_line().normalize_label(e.point);
    if (!seen.insert(p).second) throw Error(ErrorKind::DegenerateInput, "point " + p + " appears twice");
  }
  for (std::size_t i = 0; i < z.entries.size(); ++i)
    for (std::size_t l = i + 1; l < z.entries.size(); ++l)
      if (gcd(tuple_gcd(z.entries[i].mu), tuple_gcd(z.entries[l].mu)) != 1)
        throw Error(ErrorKind::DegenerateInput, "tuple gcds at " + z.entries[i].point + " and " + z.entries[l].point +
                                                    " are not coprime");
}

ConstructionResult construct(const AdmissibleData& z) {
  validate(z);
  Tuples mus;
  for (const auto& e : z.entries) mus.push_back(e.mu);
  std::string last;
  for (int step = 0; step <= 32; ++step) {
    int k = (step + 1) / 2 * (step % 2 ? 1 : -1);
    Vertices verts = build_vertices(mus, k);
    try {
      PolyhedralDivisor d = divisor_from_vertices(z, verts);
      FactorialityResult f = factoriality_det(d);
      if (f.det && abs(*f.det) == 1) return {d, verts, k, *f.det};
      last = f.det ? "determinant " + to_string(*f.det) : "relation matrix is not square";
    } catch (const Error& e) {
      last = e.what();
    }
  }
  throw Error(ErrorKind::ConstructionFailed, to_string(z) + ": " + last);
}

std::vector<std::optional<Rat>> normalized_coordinates(const AdmissibleData& z) {
  validate(z);
  std::vector<std::optional<Rat>> raw;
  for (const auto& e : z.entries) raw.push_back(coordinate(e.point));
  std::vector<std::optional<Rat>> out(raw.size());
  if (raw.size() < 2) return out;
  const auto& z1 = raw[0];
  const auto& z2 = raw[1];
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const auto& x = raw[i];
    if (!z1) {
      out[i] = *x - *z2;
    } else if (!z2) {
      out[i] = Rat(1) / (*x - *z1);
    } else if (!x) {
      out[i] = Rat(1);
    } else {
      out[i] = (*x - *z2) / (*x - *z1);
    }
    out[i]->canonicalize();
  }
  return out;
}

Presentation presentation(const AdmissibleData& data) {
  AdmissibleData z = data;
  if (z.entries.size() == 1) {
    // A second point with tuple (1) leaves the divisor unchanged.
    std::string p = Curve::projective_line().normalize_label(z.entries[0].point);
    z.entries.push_back({p == "0" ? "1" : "0", {Int(1)}});
  }
  std::vector<std::optional<Rat>> zc = normalized_coordinates(z);
  ConstructionResult c = construct(z);
  Presentation p;
  p.dimension = z.dimension();
  std::vector<std::vector<std::size_t>> index(z.entries.size());
  for (std::size_t i = 0; i < z.entries.size(); ++i) {
    std::string label = Curve::projective_line().normalize_label(z.entries[i].point);
    for (std::size_t j = 0; j < z.entries[i].mu.size(); ++j) {
      GeneratorDegree g = generator_degrees(c.divisor, GeneratorTarget::at_vertex(label, c.vertices[i][j]));
      index[i].push_back(p.variables.size());
      p.variables.push_back({variable_name(z, i, j), g.u});
    }
  }
  ExtremalData ext = extremal_data(c.divisor);
  for (std::size_t k = 0; k < ext.extremal_rays.size(); ++k) {
    GeneratorDegree g = generator_degrees(c.divisor, GeneratorTarget::at_ray(ext.extremal_rays[k]));
    p.variables.push_back({"S" + std::to_string(k + 1), g.u});
  }
  auto power = [&](std::size_t i) {
    Monomial m;
    for (std::size_t j = 0; j < index[i].size(); ++j) m.powers.push_back({index[i][j], z.entries[i].mu[j]});
    return m;
  };
  for (std::size_t i = 2; i < z.entries.size(); ++i) {
    Relation r;
    r.terms.push_back({Rat(1), power(i)});
    r.terms.push_back({Rat(1), power(1)});
    r.terms.push_back({Rat(-*zc[i]), power(0)});
    p.relations.push_back(r);
  }
  return p;
}

std::string to_string(const Monomial& m, const Presentation& p) {
  std::string s;
  for (const auto& [v, e] : m.powers) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += p.variables.at(v).name;
    if (e != 1) s += "^" + to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Relation& r, const Presentation& p) {
  std::string s;
  for (const auto& t : r.terms) {
    if (t.coefficient == 0) continue;
    Rat c = t.coefficient;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    std::string mono = to_string(t.monomial, p);
    if (a != 1) s += to_string(a) + (mono == "1" ? "" : "*" + mono);
    else s += mono;
  }
  return s.empty() ? "0" : s;
}

std::string to_string(const Presentation& p) {
  std::string s = "k[";
  for (std::size_t i = 0; i < p.variables.size(); ++i) s += (i ? "," : "") + p.variables[i].name;
  s += "]";
  if (!p.relations.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < p.relations.size(); ++i) s += (i ? ", " : "") + to_string(p.relations[i], p);
    s += ")";
  }
  return s;
}

std::vector<Int> divisor_hilbert(const PolyhedralDivisor& d, const IntVec& weight, int d_max) {
  if (!d.base().is_p1()) throw Error(ErrorKind::UnsupportedBase, "graded dimensions are computed over P^1");
  const std::size_t n = d.rank();
  if (weight.size() != n) throw Error(ErrorKind::ShapeError, "weight has the wrong length");
  Cone dual = dual_cone(d.tail());
  if (!dual.is_pointed()) throw Error(ErrorKind::DegenerateInput, "tail cone is not full-dimensional");
  std::vector<Rat> bound(n, Rat(0));
  for (const auto& g : dual.generators()) {
    Int w = weight_of(g, weight);
    if (w <= 0) throw Error(ErrorKind::DegenerateInput, "weight is not in the relative interior of the tail");
    for (std::size_t i = 0; i < n; ++i) bound[i] += Rat(d_max) * Rat(abs(g[i])) / Rat(w);
  }
  std::vector<Int> lim(n);
  for (std::size_t i = 0; i < n; ++i) lim[i] = floor(bound[i]);
  std::vector<Int> out(d_max + 1, Int(0));
  IntVec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = -lim[i];
  for (;;) {
    Int w = weight_of(u, weight);
    if (w >= 0 && w <= d_max) {
      RatVec ur = to_rat(u);
      if (dual.contains(ur)) {
        Int f = floor_degree(evaluate(d, ur)).floor_deg;
        if (f >= 0) out[w.get_si()] += f + 1;
      }
    }
    std::size_t i = 0;
    while (i < n && u[i] == lim[i]) {
      u[i] = -lim[i];
      ++i;
    }
    if (i == n) break;
    ++u[i];
  }
  return out;
}

std::vector<Int> presentation_hilbert(const Presentation& p, const IntVec& weight, int d_max) {
  std::vector<long> w;
  for (const auto& v : p.variables) {
    if (v.degree.size() != weight.size()) throw Error(ErrorKind::ShapeError, "variable degree has the wrong length");
    Int x = weight_of(v.degree, weight);
    if (x <= 0) throw Error(ErrorKind::DegenerateInput, "variable " + v.name + " has non-positive weight");
    w.push_back(x.get_si());
  }
  std::vector<bool> used(w.size(), false);
  std::vector<Int> total(d_max + 1, Int(0));
  total[0] = 1;
  for (const auto& r : p.relations) {
    if (r.terms.empty()) continue;
    std::vector<long> group;
    long lead = 0;
    for (const auto& [v, e] : r.terms[0].monomial.powers) {
      if (used.at(v)) throw Error(ErrorKind::DegenerateInput, "leading monomials are not coprime");
      used[v] = true;
      group.push_back(w[v]);
      lead += w[v] * e.get_si();
    }
    std::vector<Int> all = free_count(group, d_max), normal = all;
    for (int k = static_cast<int>(lead); k <= d_max; ++k) normal[k] -= all[k - lead];
    total = convolve(total, normal);
  }
  std::vector<long> rest;
  for (std::size_t v = 0; v < w.size(); ++v)
    if (!used[v]) rest.push_back(w[v]);
  return convolve(total, free_count(rest, d_max));
}

HilbertComparison hilbert_compare(const PolyhedralDivisor& d, const Presentation& p, const IntVec& weight,
                                  int d_max) {
  HilbertComparison h;
  h.divisor_side = divisor_hilbert(d, weight, d_max);
  h.presentation_side = presentation_hilbert(p, weight, d_max);
  for (int k = 0; k <= d_max; ++k) {
    if (h.divisor_side[k] != h.presentation_side[k]) {
      h.first_mismatch = k;
      break;
    }
  }
  h.match = !h.first_mismatch;
  return h;
}

std::string IsolatedClass::label() const {
  switch (kind) {
    case Kind::Smooth:
      return "Smooth";
    case Kind::CA:
      return "cA(" + to_string(q) + "," + to_string(r) + ")";
    case Kind::FourfoldA:
      return "Fourfold_A(" + to_string(q) + ")";
    case Kind::FivefoldA1:
      return "Fivefold_A1";
    case Kind::NotIsolated:
      return "NotIsolated";
    case Kind::NotHypersurfaceDim:
      return "NotHypersurfaceDim";
  }
  return "";
}

IsolatedClass classify_isolated_factorial(const AdmissibleData& z) {
  validate(z);
  IsolatedClass out;
  if (z.dimension() < 3) {
    out.kind = IsolatedClass::Kind::NotHypersurfaceDim;
    out.reason = "dimension " + std::to_string(z.dimension()) + " is below three";
    return out;
  }
  // A tuple (1) gives a variable that is linear in every relation and can be eliminated.
  std::vector<const std::vector<Int>*> groups;
  for (const auto& e : z.entries)
    if (!(e.mu.size() == 1 && e.mu[0] == 1)) groups.push_back(&e.mu);
  if (groups.size() <= 2) {
    out.kind = IsolatedClass::Kind::Smooth;
    out.reason = "polynomial ring after eliminating linear variables";
    return out;
  }
  if (groups.size() >= 4) {
    out.reason = "complete intersection of codimension " + std::to_string(groups.size() - 2) +
                 " singular along a coordinate axis";
    return out;
  }
  std::vector<Int> singles;
  int pairs = 0;
  for (const auto* mu : groups) {
    if (mu->size() == 1) {
      singles.push_back((*mu)[0]);
    } else if (mu->size() == 2 && (*mu)[0] == 1 && (*mu)[1] == 1) {
      ++pairs;
    } else {
      out.reason = "exponent tuple has a partial derivative vanishing along a hyperplane section";
      return out;
    }
  }
  std::sort(singles.begin(), singles.end());
  if (pairs == 1) {
    out.kind = IsolatedClass::Kind::CA;
    out.q = singles[0] - 1;
    out.r = singles[1];
  } else if (pairs == 2) {
    out.kind = IsolatedClass::Kind::FourfoldA;
    out.q = singles[0] - 1;
  } else {
    out.kind = IsolatedClass::Kind::FivefoldA1;
  }
  out.reason = "isolated hypersurface singularity";
  return out;
}

std::vector<AdmissibleData> admissible_sweep(std::size_t max_points, Int max_entry, std::size_t max_size) {
  std::vector<std::vector<Int>> tuples;
  for (Int a = 1; a <= max_entry; ++a) tuples.push_back({a});
  for (Int a = 1; a <= max_entry; ++a)
    for (Int b = a; b <= max_entry; ++b) tuples.push_back({a, b});
  std::vector<AdmissibleData> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t size) {
    if (!pick.empty()) {
      AdmissibleData z;
      for (std::size_t i = 0; i < pick.size(); ++i)
        z.entries.push_back({i == 0 ? "inf" : std::to_string(i - 1), tuples[pick[i]]});
      bool ok = true;
      for (std::size_t i = 0; i < pick.size() && ok; ++i)
        for (std::size_t l = i + 1; l < pick.size() && ok; ++l)
          ok = gcd(tuple_gcd(tuples[pick[i]]), tuple_gcd(tuples[pick[l]])) == 1;
      if (ok) out.push_back(z);
    }
    if (pick.size() == max_points) return;
    for (std::size_t t = from; t < tuples.size(); ++t) {
      std::size_t extra = tuples[t].size() - 1;
      if (size + extra > max_size) continue;
      pick.push_back(t);
      rec(t, size + extra);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::string to_string(const AdmissibleData& z) {
  std::string s = "{";
  for (std::size_t i = 0; i < z.entries.size(); ++i) {
    s += (i ? ", " : "") + z.entries[i].point + ":(";
    for (std::size_t j = 0; j < z.entries[i].mu.size(); ++j) s += (j ? "," : "") + to_string(z.entries[i].mu[j]);
    s += ")";
  }
  return s + "}";
}

}  // namespace tvs
