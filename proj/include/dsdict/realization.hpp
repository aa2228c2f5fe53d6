#pragma once

// A complex semisimple Lie algebra realized as matrices, with its real-form
// involution sigma and a commuting Cartan involution theta.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsdict/matrix.hpp"

namespace dsdict {

enum class Involution { sigma, theta, sigma_theta };

/// Element of g* in the dual basis of the realization basis.
struct Covector {
  std::vector<GaussScalar> coords;

  Covector() = default;
  explicit Covector(std::vector<GaussScalar> c) : coords(std::move(c)) {}
  static Covector zero(std::size_t n) { return Covector(std::vector<GaussScalar>(n)); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  Covector& operator+=(const Covector& o);
  Covector& operator-=(const Covector& o);
  Covector& operator*=(const GaussScalar& s);
  friend Covector operator+(Covector a, const Covector& b) { return a += b; }
  friend Covector operator-(Covector a, const Covector& b) { return a -= b; }
  friend Covector operator*(const GaussScalar& s, Covector a) { return a *= s; }
  Covector operator-() const;
  friend bool operator==(const Covector& a, const Covector& b) { return a.coords == b.coords; }
};

class Realization {
 public:
  Realization() = default;

  /// Validates and builds; throws ValidationError naming the violated invariant.
  /// sigma/theta are dim_g x dim_g matrices: sigma(X) has coordinates S * conj(x),
  /// theta(X) has coordinates T * x.
  Realization(std::string name, std::vector<Matrix> basis, std::vector<std::string> basis_names,
              Matrix sigma, Matrix theta, std::size_t rank, std::vector<std::size_t> compact_cartan);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t matrix_size() const { return basis_.front().rows(); }
  std::size_t rank() const { return rank_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& basis(std::size_t k) const { return basis_.at(k); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<std::size_t>& compact_cartan() const { return compact_cartan_; }
  const Matrix& sigma_matrix() const { return sigma_; }
  const Matrix& theta_matrix() const { return theta_; }

  /// Coordinates of X in the basis; throws DomainError if X is not in g.
  template <class S>
  std::vector<S> coords(const BasicMatrix<S>& x) const;
  template <class S>
  BasicMatrix<S> element(const std::vector<S>& c) const;
  bool contains(const Matrix& x) const;

  Matrix bracket(const Matrix& a, const Matrix& b) const;
  /// Matrix of ad X in the basis.
  Matrix ad(const Matrix& x) const;

  GaussScalar trace_form(const GaussScalar& c, const Matrix& x, const Matrix& y) const;
  GaussScalar killing_form(const Matrix& x, const Matrix& y) const;
  const Matrix& killing_gram() const { return killing_gram_; }
  /// Gram matrix of c * Tr(XY).
  Matrix trace_gram(const GaussScalar& c) const;

  /// psi(X)(Y) = B(X,Y) for the bilinear form with the given Gram matrix.
  Covector psi(const Matrix& x) const { return psi_with(killing_gram_, x); }
  Matrix psi_inverse(const Covector& xi) const { return psi_inverse_with(killing_gram_, xi); }
  Covector psi_with(const Matrix& gram, const Matrix& x) const;
  Matrix psi_inverse_with(const Matrix& gram, const Covector& xi) const;

  GaussScalar pair(const Covector& xi, const Matrix& x) const;

  template <class S>
  BasicMatrix<S> apply(Involution which, const BasicMatrix<S>& x) const;
  Covector apply(Involution which, const Covector& xi) const;

  /// Covector xi o ad(-Z), i.e. the coadjoint action of Z.
  Covector coadjoint(const Matrix& z, const Covector& xi) const;
  /// Coadjoint action of a group element g: xi o Ad(g^{-1}).
  Covector coadjoint_group(const Matrix& g, const Covector& xi) const;

  bool is_nilpotent(const Matrix& x) const;
  bool is_regular_nilpotent(const Matrix& x) const;
  std::size_t centralizer_dim(const Matrix& x) const;

  /// Coordinates of xi in the dual basis of another basis of g.
  std::vector<GaussScalar> dual_coords(const Covector& xi, const std::vector<Matrix>& other) const;
  /// The covector taking the given values on another basis.
  Covector from_dual_coords(const std::vector<GaussScalar>& values, const std::vector<Matrix>& other) const;

 private:
  void validate() const;

  std::string name_;
  std::vector<Matrix> basis_;
  std::vector<std::string> names_;
  Matrix sigma_;
  Matrix theta_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> compact_cartan_;
  // Coordinates are read off dim_g matrix entries through a fixed inverse.
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  Matrix pivot_inverse_;
  Matrix killing_gram_;
  Matrix killing_gram_inverse_;
};

template <class S>
std::vector<S> Realization::coords(const BasicMatrix<S>& x) const {
  if (x.rows() != matrix_size() || x.cols() != matrix_size())
    throw DomainError("element has wrong matrix size");
  const std::size_t d = dim();
  std::vector<S> c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& coef = pivot_inverse_(i, k);
      if (!coef.is_zero()) c[i] += S(coef) * x(pivots_[k].first, pivots_[k].second);
    }
  }
  if (!(element(c) == x)) throw DomainError("matrix is not in the Lie algebra " + name_);
  return c;
}

template <class S>
BasicMatrix<S> Realization::element(const std::vector<S>& c) const {
  if (c.size() != dim()) throw DomainError("coordinate vector has wrong length");
  const std::size_t n = matrix_size();
  BasicMatrix<S> out(n, n);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        const auto& b = basis_[k](r, col);
        if (!b.is_zero()) out(r, col) += c[k] * S(b);
      }
  }
  return out;
}

template <class S>
BasicMatrix<S> Realization::apply(Involution which, const BasicMatrix<S>& x) const {
  std::vector<S> c = coords(x);
  const std::size_t d = dim();
  auto act = [&](const Matrix& m, const std::vector<S>& v) {
    std::vector<S> out(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (!m(i, k).is_zero()) out[i] += S(m(i, k)) * v[k];
    return out;
  };
  auto conj_all = [](std::vector<S> v) {
    for (auto& s : v) s = conj(s);
    return v;
  };
  switch (which) {
    case Involution::sigma:
      return element(act(sigma_, conj_all(c)));
    case Involution::theta:
      return element(act(theta_, c));
    case Involution::sigma_theta:
      return element(act(sigma_, conj_all(act(theta_, c))));
  }
  throw DomainError("unknown involution");
}

}  // namespace dsdict
