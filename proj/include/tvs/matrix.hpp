#pragma once

#include "tvs/error.hpp"
#include "tvs/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace tvs {

/// Dense row-major matrix over Int or Rat.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::ShapeError, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::ShapeError, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeError, "product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
RatVec operator*(const RatMatrix& a, const RatVec& x);

struct GcdResult {
  Int gcd;
  std::vector<Int> coeffs;
};

/// Extended gcd of a list: iterated two-term extended gcd, left to right.
/// At each step the cofactor of the running gcd is reduced into (-m/2, m/2],
/// m = |next / step gcd|, so the output is canonical.
GcdResult ext_gcd_multi(std::span<const Int> values);

/// left * A * right == diag(diagonal) with diagonal[i] | diagonal[i+1] and
/// unimodular transforms.
struct SmithForm {
  std::vector<Int> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// The rectangular diagonal matrix of a Smith form with the shape of the input.
IntMatrix smith_diagonal_matrix(const SmithForm& s, std::size_t rows, std::size_t cols);

struct UniqueSolution {
  RatVec x;
};
/// certificate * A == 0 and certificate * b != 0.
struct Inconsistent {
  RatVec certificate;
};
struct Underdetermined {
  RatVec particular;
  std::vector<RatVec> nullspace;
};
using Solution = std::variant<UniqueSolution, Inconsistent, Underdetermined>;

Solution solve_exact(const RatMatrix& a, const RatVec& b);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);
Rat determinant(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);

/// Basis of {x : A x = 0}, one vector per free column of the reduced echelon form.
std::vector<RatVec> nullspace(const RatMatrix& a);

/// gcd of all maximal (rows x rows) minors; requires rows <= cols. 0 when rank deficient.
Int maximal_minor_gcd(const IntMatrix& a);

}  // namespace tvs
