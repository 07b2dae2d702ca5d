#include "tvs/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace tvs {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::ShapeError, "matrix-vector dimension mismatch");
  RatVec y(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

namespace {

// x*a + y*b = g >= 0 with x reduced into (-m/2, m/2], m = |b/g|.
void ext_gcd2(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g == 0) {
    x = 0;
    y = 0;
    return;
  }
  if (b == 0) {
    x = sgn(a);
    y = 0;
    return;
  }
  Int m = abs(b / g);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // 0 <= r < m
  if (2 * r > m) r -= m;
  x = r;
  y = (g - x * a) / b;
}

}  // namespace

GcdResult ext_gcd_multi(std::span<const Int> values) {
  if (values.empty()) throw Error(ErrorKind::DegenerateInput, "ext_gcd_multi of an empty list");
  GcdResult out;
  out.coeffs.assign(values.size(), Int(0));
  Int g = abs(values[0]);
  out.coeffs[0] = sgn(values[0]);
  for (std::size_t k = 1; k < values.size(); ++k) {
    Int ng, x, y;
    ext_gcd2(g, values[k], ng, x, y);
    if (ng == 0) continue;
    if (g == 0) {
      // running gcd was zero: only the new value contributes
      x = 0;
      y = sgn(values[k]);
    }
    for (std::size_t i = 0; i < k; ++i) out.coeffs[i] *= x;
    out.coeffs[k] = y;
    g = ng;
  }
  if (g == 0) throw Error(ErrorKind::DegenerateInput, "ext_gcd_multi of an all-zero list");
  out.gcd = g;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t n = input.rows(), m = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(m);
  const std::size_t k = std::min(n, m);
  std::vector<Int> diag(k, Int(0));

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {  // row_dst -= q row_src
    for (std::size_t j = 0; j < m; ++j) a(dst, j) -= q * a(src, j);
    for (std::size_t j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {  // col_dst -= q col_src
    for (std::size_t i = 0; i < n; ++i) a(i, dst) -= q * a(i, src);
    for (std::size_t i = 0; i < m; ++i) v(i, dst) -= q * v(i, src);
  };

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t pi = n, pj = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (a(i, j) != 0 && (pi == n || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;  // remaining block is zero
      if (pi != t) {
        a.swap_rows(pi, t);
        u.swap_rows(pi, t);
      }
      if (pj != t) {
        a.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        row_add(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        col_add(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < m; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < n; ++j) u(t, j) = -u(t, j);
    }
    diag[t] = a(t, t);
  }
  return SmithForm{std::move(diag), std::move(u), std::move(v)};
}

IntMatrix smith_diagonal_matrix(const SmithForm& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(i, i) = s.diagonal[i];
  return d;
}

namespace {

// In-place reduced row echelon form over Q on the first `limit` columns.
// Returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    Rat inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Solution solve_exact(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeError, "right-hand side length mismatch");
  const std::size_t n = a.rows(), m = a.cols();
  RatMatrix aug(n, m + 1 + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
    aug(i, m) = b[i];
    aug(i, m + 1 + i) = 1;
  }
  auto pivots = rref(aug, m);
  for (std::size_t i = pivots.size(); i < n; ++i) {
    if (aug(i, m) != 0) {
      RatVec y(n);
      for (std::size_t j = 0; j < n; ++j) y[j] = aug(i, m + 1 + j);
      return Inconsistent{std::move(y)};
    }
  }
  RatVec x(m, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m);
  if (pivots.size() == m) return UniqueSolution{std::move(x)};
  std::vector<RatVec> null;
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    RatVec z(m, Rat(0));
    z[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -aug(r, f);
    null.push_back(std::move(z));
  }
  return Underdetermined{std::move(x), std::move(null)};
}

namespace {

template <class T>
T bareiss(Matrix<T> a) {
  if (!a.square()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return T(0);
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // exact
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

Int determinant(const IntMatrix& a) { return bareiss(a); }

Rat determinant(const RatMatrix& a) { return bareiss(a); }

std::size_t rank(const RatMatrix& a) {
  RatMatrix c = a;
  return rref(c, c.cols()).size();
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols) {
  return rank(RatMatrix::from_rows(rows, cols));
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  auto sol = solve_exact(a, RatVec(a.rows(), Rat(0)));
  if (auto* u = std::get_if<Underdetermined>(&sol)) return u->nullspace;
  return {};
}

Int maximal_minor_gcd(const IntMatrix& a) {
  const std::size_t k = a.rows(), n = a.cols();
  if (k > n) throw Error(ErrorKind::ShapeError, "more rows than columns");
  if (k == 0) return 1;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Int g = 0;
  for (;;) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, idx[j]);
    g = gcd(g, determinant(sub));
    if (g == 1) return g;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

}  // namespace tvs
