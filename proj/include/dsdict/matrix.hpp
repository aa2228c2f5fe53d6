#pragma once

// Dense square/rectangular matrices over an exact field, plus the handful of
// elimination routines the library needs (rank, kernel, solve, inverse,
// characteristic polynomial).  Everything is exact; there is no pivoting for
// stability, only for nonzero-ness.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsdict/error.hpp"
#include "dsdict/scalar.hpp"

namespace dsdict {

template <class S>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static BasicMatrix square(std::size_t n) { return BasicMatrix(n, n); }
  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = S(1);
    return m;
  }
  static BasicMatrix column(const std::vector<S>& v) {
    BasicMatrix m(v.size(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!dsdict::is_zero(x)) return false;
    }
    return true;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BasicMatrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, const S& s) { return a *= s; }
  friend BasicMatrix operator*(const S& s, BasicMatrix a) { return a *= s; }
  BasicMatrix operator-() const {
    BasicMatrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    BasicMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(r, k);
        if (dsdict::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (!dsdict::is_zero(b(k, c))) out(r, c) += x * b(k, c);
        }
      }
    }
    return out;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Entrywise complex conjugate.
  BasicMatrix conj() const {
    BasicMatrix m(*this);
    for (auto& x : m.data_) x = dsdict::conj(x);
    return m;
  }

  S trace() const {
    require_square();
    S t{};
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  BasicMatrix power(unsigned n) const {
    require_square();
    BasicMatrix out = identity(rows_);
    for (unsigned k = 0; k < n; ++k) out = out * (*this);
    return out;
  }

  std::vector<S> column_vector(std::size_t c) const {
    std::vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      out += r ? "; " : "";
      for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).str();
    }
    return out + "]";
  }

 private:
  void require_same_shape(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }
  void require_square() const {
    if (rows_ != cols_) throw DomainError("square matrix required");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using Matrix = BasicMatrix<GaussScalar>;
using QuadMatrix = BasicMatrix<QuadScalar>;

template <class S>
BasicMatrix<S> commutator(const BasicMatrix<S>& a, const BasicMatrix<S>& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    throw DomainError("bracket: dimension mismatch");
  return a * b - b * a;
}

QuadMatrix lift(const Matrix& m);
/// Drops to Q(i); throws if any entry carries a surd.
Matrix lower(const QuadMatrix& m);

/// Reduced row echelon form with the pivot columns, computed exactly.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, as column vectors.
std::vector<std::vector<GaussScalar>> kernel(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<GaussScalar>> solve(const Matrix& m, const std::vector<GaussScalar>& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

GaussScalar determinant(const Matrix& m);

/// Coefficients c_0..c_n of det(x I - m) = sum c_k x^k (c_n = 1), via Faddeev-LeVerrier.
std::vector<GaussScalar> characteristic_polynomial(const Matrix& m);

/// Matrix from rows of scalar strings, used by catalog data and tests.
Matrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows);

}  // namespace dsdict
