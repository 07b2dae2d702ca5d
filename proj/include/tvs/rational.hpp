#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tvs {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonical rational num/den; throws DegenerateInput on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (surrounding blanks allowed, U+2212 accepted as minus).
Rat parse_rat(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

Int floor(const Rat& value);
Int ceil(const Rat& value);
Rat frac(const Rat& value);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

bool is_integral(const Rat& value);
bool is_integral(const RatVec& v);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

/// Least common multiple of the denominators (1 for the empty vector).
Int denominator_lcm(const RatVec& v);

RatVec to_rat(const IntVec& v);

/// Converts an integral rational vector; throws DegenerateInput otherwise.
IntVec to_int(const RatVec& v);

/// Positive rational multiple of v that is a primitive integer vector (zero stays zero).
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

template <class A, class B>
Rat dot(const std::vector<A>& a, const std::vector<B>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

/// Lexicographic order on rational vectors.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace tvs
