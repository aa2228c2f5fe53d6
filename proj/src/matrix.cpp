#include "dsdict/matrix.hpp"

namespace dsdict {

QuadMatrix lift(const Matrix& m) {
  QuadMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = QuadScalar(m(r, c));
  return out;
}

Matrix lower(const QuadMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_gauss();
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    }
    GaussScalar inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      GaussScalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<GaussScalar>> kernel(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussScalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussScalar> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = -ech.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussScalar>> solve(const Matrix& m, const std::vector<GaussScalar>& b) {
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  std::vector<GaussScalar> x(m.cols());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = ech.reduced(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

GaussScalar determinant(const Matrix& m) {
  auto cp = characteristic_polynomial(m);
  GaussScalar d = cp[0];
  return (m.rows() % 2 == 0) ? d : -d;
}

std::vector<GaussScalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<GaussScalar> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::square(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
    Matrix next = m * mk;
    for (std::size_t d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / GaussScalar(static_cast<long>(k));
  }
  return c;
}

Matrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ParseError("ragged matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = GaussScalar::parse(rows[r][c]);
  }
  return m;
}

}  // namespace dsdict
