#include "tvs/io.hpp"

#include "tvs/singcheck.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace tvs {

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, (path.empty() ? "/" : path) + ": " + msg);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail_at(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(path, "missing field \"" + key + "\"");
  return *it;
}

const Json* optional_member(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

Rat read_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error&) {
      fail_at(path, "not a rational number: " + j.dump());
    }
  }
  if (j.is_number()) fail_at(path, "inexact number " + j.dump() + "; write rationals as \"p/q\"");
  fail_at(path, "expected a rational number");
}

Int read_int(const Json& j, const std::string& path) {
  Rat x = read_rat(j, path);
  if (!is_integral(x)) fail_at(path, "expected an integer");
  return Int(x.get_num());
}

std::size_t read_size(const Json& j, const std::string& path) {
  Int x = read_int(j, path);
  if (x < 0 || x > 1000000) fail_at(path, "out of range");
  return x.get_ui();
}

std::string read_label(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail_at(path, "expected a point label");
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array");
  return j;
}

RatVec read_ratvec(const Json& j, const std::string& path, std::size_t n) {
  array_at(j, path);
  if (j.size() != n) fail_at(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rat(j[i], path + "/" + std::to_string(i)));
  return v;
}

IntVec read_intvec(const Json& j, const std::string& path, std::size_t n) {
  RatVec v = read_ratvec(j, path, n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) fail_at(path + "/" + std::to_string(i), "expected an integer");
  return to_int(v);
}

Curve read_base(const Json& j, const std::string& path) {
  std::string kind;
  int genus = 0;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else {
    const Json& k = member(j, "kind", path);
    if (!k.is_string()) fail_at(path + "/kind", "expected a string");
    kind = k.get<std::string>();
    if (const Json* g = optional_member(j, "genus")) genus = static_cast<int>(read_size(*g, path + "/genus"));
  }
  if (kind == "P1") return genus == 0 ? Curve::projective_line() : Curve::of_genus(genus);
  if (kind == "A1") return Curve::affine_line();
  if (kind == "curve") return Curve::of_genus(genus);
  fail_at(path, "unknown base kind \"" + kind + "\" (expected P1, A1 or curve)");
}

template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

QDivisor read_qdivisor(const Json& j, const std::string& path) {
  if (j.is_string()) return with_path(path, [&] { return parse_qdivisor(j.get<std::string>()); });
  if (!j.is_object()) fail_at(path, "expected a divisor object or string");
  QDivisor d;
  for (const auto& [k, v] : j.items()) d.add(k, read_rat(v, path + "/" + k));
  return d;
}

PolyhedralDivisor read_divisor(const Json& j) {
  std::size_t n = read_size(member(j, "lattice_rank", ""), "/lattice_rank");
  if (n == 0) fail_at("/lattice_rank", "must be positive");
  Curve base = read_base(member(j, "base", ""), "/base");
  const Json& tj = array_at(member(j, "tail", ""), "/tail");
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < tj.size(); ++i) rays.push_back(read_intvec(tj[i], "/tail/" + std::to_string(i), n));
  Cone tail = with_path("/tail", [&] { return Cone(n, rays); });
  std::vector<std::pair<std::string, SigmaPolyhedron>> coeffs;
  if (const Json* cj = optional_member(j, "coefficients")) {
    array_at(*cj, "/coefficients");
    for (std::size_t i = 0; i < cj->size(); ++i) {
      std::string path = "/coefficients/" + std::to_string(i);
      const Json& e = (*cj)[i];
      std::string point = read_label(member(e, "point", path), path + "/point");
      const Json& vj = array_at(member(e, "vertices", path), path + "/vertices");
      if (vj.empty()) fail_at(path + "/vertices", "a coefficient needs at least one vertex");
      std::vector<RatVec> verts;
      for (std::size_t k = 0; k < vj.size(); ++k)
        verts.push_back(read_ratvec(vj[k], path + "/vertices/" + std::to_string(k), n));
      coeffs.push_back({point, with_path(path, [&] { return SigmaPolyhedron(verts, tail); })});
    }
  }
  std::optional<QDivisor> k;
  if (const Json* kj = optional_member(j, "canonical")) k = read_qdivisor(*kj, "/canonical");
  return with_path("/coefficients", [&] { return PolyhedralDivisor(base, tail, coeffs, k); });
}

AdmissibleData read_admissible(const Json& j) {
  const Json& ej = array_at(member(j, "entries", ""), "/entries");
  AdmissibleData z;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    std::string path = "/entries/" + std::to_string(i);
    AdmissibleEntry e;
    e.point = read_label(member(ej[i], "point", path), path + "/point");
    const Json& mj = array_at(member(ej[i], "mu", path), path + "/mu");
    for (std::size_t k = 0; k < mj.size(); ++k) e.mu.push_back(read_int(mj[k], path + "/mu/" + std::to_string(k)));
    z.entries.push_back(e);
  }
  with_path("/entries", [&] {
    validate(z);
    return 0;
  });
  return z;
}

NumericalInputs read_numerical(const Json& j) {
  NumericalInputs in;
  in.num_rank = read_size(member(j, "num_rank", ""), "/num_rank");
  in.lattice_rank = read_size(member(j, "lattice_rank", ""), "/lattice_rank");
  const Json& pj = array_at(member(j, "points", ""), "/points");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    std::string path = "/points/" + std::to_string(i);
    NumericalInputs::Point p;
    p.label = read_label(member(pj[i], "label", path), path + "/label");
    p.numerical_class = read_intvec(member(pj[i], "class", path), path + "/class", in.num_rank);
    if (const Json* c = optional_member(pj[i], "canonical")) p.canonical_coefficient = read_rat(*c, path + "/canonical");
    const Json& vj = array_at(member(pj[i], "vertices", path), path + "/vertices");
    for (std::size_t k = 0; k < vj.size(); ++k)
      p.vertices.push_back(read_ratvec(vj[k], path + "/vertices/" + std::to_string(k), in.lattice_rank));
    in.points.push_back(p);
  }
  if (const Json* rj = optional_member(j, "extremal_rays")) {
    array_at(*rj, "/extremal_rays");
    for (std::size_t i = 0; i < rj->size(); ++i)
      in.extremal_rays.push_back(read_intvec((*rj)[i], "/extremal_rays/" + std::to_string(i), in.lattice_rank));
  }
  return in;
}

}  // namespace

QDivisor parse_qdivisor(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  QDivisor d;
  if (s.empty() || s == "0") return d;
  std::size_t i = 0;
  while (i < s.size()) {
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      throw Error(ErrorKind::ParseError, "expected + or - at offset " + std::to_string(i) + " in \"" + text + "\"");
    }
    std::size_t open = s.find('[', i);
    std::size_t close = s.find(']', i);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw Error(ErrorKind::ParseError, "expected c[point] at offset " + std::to_string(i) + " in \"" + text + "\"");
    std::string coeff = s.substr(i, open - i);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Rat c = coeff.empty() ? Rat(1) : parse_rat(coeff);
    std::string label = s.substr(open + 1, close - open - 1);
    if (label.empty()) throw Error(ErrorKind::ParseError, "empty point label in \"" + text + "\"");
    d.add(label, sign * c);
    i = close + 1;
  }
  return d;
}

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           (pos == std::string::npos ? msg : msg.substr(pos)));
  }
  if (!j.is_object()) fail_at("", "document must be a JSON object");
  const Json& f = member(j, "format", "");
  if (!f.is_number_integer() || f.get<int>() != kFormatVersion)
    fail_at("/format", "unsupported format " + f.dump() + " (expected " + std::to_string(kFormatVersion) + ")");
  InputDocument doc;
  if (const Json* n = optional_member(j, "name")) {
    if (!n->is_string()) fail_at("/name", "expected a string");
    doc.name = n->get<std::string>();
  }
  std::string kind = "divisor";
  if (const Json* k = optional_member(j, "kind")) {
    if (!k->is_string()) fail_at("/kind", "expected a string");
    kind = k->get<std::string>();
  }
  if (kind == "divisor") {
    doc.kind = InputDocument::Kind::Divisor;
    doc.divisor = read_divisor(j);
  } else if (kind == "admissible") {
    doc.kind = InputDocument::Kind::Admissible;
    doc.admissible = read_admissible(j);
  } else if (kind == "numerical") {
    doc.kind = InputDocument::Kind::Numerical;
    doc.numerical = read_numerical(j);
  } else {
    fail_at("/kind", "unknown document kind \"" + kind + "\"");
  }
  return doc;
}

Json to_json(const Rat& x) {
  if (is_integral(x)) {
    Int n = x.get_num();
    if (n.fits_slong_p()) return Json(n.get_si());
  }
  return Json(to_string(x));
}

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntVec& v) { return to_json(to_rat(v)); }

Json to_json(const QDivisor& d) {
  Json o = Json::object();
  for (const auto& [p, c] : d.terms()) o[p] = to_json(c);
  return o;
}

Json to_json(const PolyhedralDivisor& d) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "divisor";
  j["lattice_rank"] = d.rank();
  const Curve& b = d.base();
  if (b.is_p1()) j["base"] = {{"kind", "P1"}};
  else if (b.is_affine()) j["base"] = {{"kind", "A1"}};
  else j["base"] = {{"kind", "curve"}, {"genus", b.genus}};
  Json tail = Json::array();
  for (const auto& g : d.tail().generators()) tail.push_back(to_json(g));
  j["tail"] = tail;
  Json cs = Json::array();
  for (const auto& [p, poly] : d.coefficients()) {
    Json verts = Json::array();
    for (const auto& v : poly.vertices()) verts.push_back(to_json(v));
    cs.push_back({{"point", p}, {"vertices", verts}});
  }
  j["coefficients"] = cs;
  if (b.is_projective()) j["canonical"] = to_json(d.canonical());
  return j;
}

Json to_json(const AdmissibleData& z) {
  Json es = Json::array();
  for (const auto& e : z.entries) {
    Json mu = Json::array();
    for (const auto& m : e.mu) mu.push_back(to_json(Rat(m)));
    es.push_back({{"point", e.point}, {"mu", mu}});
  }
  return {{"format", kFormatVersion}, {"kind", "admissible"}, {"entries", es}};
}

Json to_json(const Presentation& p) {
  Json vars = Json::array();
  for (const auto& v : p.variables) vars.push_back({{"name", v.name}, {"degree", to_json(v.degree)}});
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(to_string(r, p));
  return {{"variables", vars}, {"relations", rels}, {"dimension", p.dimension}, {"ring", to_string(p)}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tvs
