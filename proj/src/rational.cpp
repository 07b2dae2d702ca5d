#include "tvs/rational.hpp"

#include "tvs/error.hpp"

#include <algorithm>

namespace tvs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::UnboundedBelow: return "UnboundedBelow";
    case ErrorKind::TailMismatch: return "TailMismatch";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::NoGlobalEquation: return "NoGlobalEquation";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::NotQGorenstein: return "NotQGorenstein";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::DegenerateInput, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = Int(std::string(s.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
      continue;
    }
    if (text[i] != ' ' && text[i] != '\t') s.push_back(text[i]);
  }
  auto slash = s.find('/');
  Int num, den = 1;
  bool ok = slash == std::string::npos
                ? parse_int(s, num)
                : parse_int(std::string_view(s).substr(0, slash), num) &&
                      parse_int(std::string_view(s).substr(slash + 1), den);
  if (!ok) throw Error(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Int floor(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& value) { return value - Rat(floor(value)); }

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_integral(const Rat& value) { return value.get_den() == 1; }

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int denominator_lcm(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVec to_int(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw Error(ErrorKind::DegenerateInput, "non-integral entry " + to_string(x));
    r.push_back(x.get_num());
  }
  return r;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x / g);
  return r;
}

IntVec primitive(const RatVec& v) {
  Int l = denominator_lcm(v);
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.get_num() * (l / x.get_den()));
  return primitive(r);
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace tvs
