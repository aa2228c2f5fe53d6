#include "dsdict/realization.hpp"

namespace dsdict {

bool Covector::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Covector& Covector::operator+=(const Covector& o) {
  if (o.size() != size()) throw DomainError("covector length mismatch");
  for (std::size_t k = 0; k < size(); ++k) coords[k] += o.coords[k];
  return *this;
}

Covector& Covector::operator-=(const Covector& o) {
  if (o.size() != size()) throw DomainError("covector length mismatch");
  for (std::size_t k = 0; k < size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

Covector& Covector::operator*=(const GaussScalar& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

Covector Covector::operator-() const {
  Covector out(*this);
  for (auto& c : out.coords) c = -c;
  return out;
}

Realization::Realization(std::string name, std::vector<Matrix> basis, std::vector<std::string> basis_names,
                         Matrix sigma, Matrix theta, std::size_t rank, std::vector<std::size_t> compact_cartan)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      names_(std::move(basis_names)),
      sigma_(std::move(sigma)),
      theta_(std::move(theta)),
      rank_(rank),
      compact_cartan_(std::move(compact_cartan)) {
  if (basis_.empty()) throw ValidationError(name_ + ": empty basis");
  const std::size_t n = basis_.front().rows();
  const std::size_t d = basis_.size();
  for (const auto& b : basis_) {
    if (b.rows() != n || b.cols() != n) throw ValidationError(name_ + ": basis matrices have different sizes");
  }
  if (names_.size() != d) throw ValidationError(name_ + ": basis names do not match basis");
  if (sigma_.rows() != d || sigma_.cols() != d || theta_.rows() != d || theta_.cols() != d)
    throw ValidationError(name_ + ": involution matrices must be dim_g x dim_g");

  // Flatten the basis into an n^2 x d matrix and pick d independent rows.
  Matrix flat(n * n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat(r * n + c, k) = basis_[k](r, c);
  RowEchelon ech = row_reduce(flat.transpose());
  if (ech.pivots.size() != d) throw ValidationError(name_ + ": basis matrices are linearly dependent");
  Matrix square(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    pivots_.emplace_back(ech.pivots[k] / n, ech.pivots[k] % n);
    for (std::size_t j = 0; j < d; ++j) square(k, j) = flat(ech.pivots[k], j);
  }
  pivot_inverse_ = *inverse(square);

  killing_gram_ = Matrix(d, d);
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (const auto& b : basis_) ads.push_back(ad(b));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      GaussScalar v = (ads[i] * ads[j]).trace();
      killing_gram_(i, j) = v;
      killing_gram_(j, i) = v;
    }
  auto inv = inverse(killing_gram_);
  if (!inv) throw ValidationError(name_ + ": Killing form is degenerate (algebra not semisimple)");
  killing_gram_inverse_ = *inv;
  validate();
}

void Realization::validate() const {
  const std::size_t d = dim();
  const Matrix id = Matrix::identity(d);
  if (!(theta_ * theta_ == id)) throw ValidationError(name_ + ": theta^2 = 1 fails");
  if (!(sigma_ * sigma_.conj() == id)) throw ValidationError(name_ + ": sigma^2 = 1 fails");
  // sigma(theta(x)) = S conj(T x) and theta(sigma(x)) = T S conj(x).
  if (!(sigma_ * theta_.conj() == theta_ * sigma_))
    throw ValidationError(name_ + ": sigma and theta do not commute");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix br = bracket(basis_[i], basis_[j]);
      for (Involution f : {Involution::sigma, Involution::theta}) {
        if (!(apply(f, br) == bracket(apply(f, basis_[i]), apply(f, basis_[j])))) {
          throw ValidationError(name_ + ": " + std::string(f == Involution::sigma ? "sigma" : "theta") +
                                " is not a Lie algebra automorphism on (" + names_[i] + ", " + names_[j] + ")");
        }
      }
    }
  }
  for (auto k : compact_cartan_) {
    if (k >= d) throw ValidationError(name_ + ": compact Cartan index out of range");
    if (!(apply(Involution::theta, basis_[k]) == basis_[k]))
      throw ValidationError(name_ + ": Cartan element " + names_[k] + " is not theta-fixed");
    for (auto l : compact_cartan_) {
      if (!bracket(basis_[k], basis_[l]).is_zero())
        throw ValidationError(name_ + ": Cartan elements do not commute");
    }
  }
  if (compact_cartan_.size() != rank_) throw ValidationError(name_ + ": compact Cartan size differs from rank");
}

bool Realization::contains(const Matrix& x) const {
  try {
    coords(x);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

Matrix Realization::bracket(const Matrix& a, const Matrix& b) const { return commutator(a, b); }

Matrix Realization::ad(const Matrix& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = coords(commutator(x, basis_[j]));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
  }
  return m;
}

GaussScalar Realization::trace_form(const GaussScalar& c, const Matrix& x, const Matrix& y) const {
  return c * (x * y).trace();
}

GaussScalar Realization::killing_form(const Matrix& x, const Matrix& y) const {
  auto a = coords(x);
  auto b = coords(y);
  GaussScalar v;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!b[j].is_zero()) v += a[i] * killing_gram_(i, j) * b[j];
    }
  }
  return v;
}

Matrix Realization::trace_gram(const GaussScalar& c) const {
  const std::size_t d = dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = trace_form(c, basis_[i], basis_[j]);
  return g;
}

Covector Realization::psi_with(const Matrix& gram, const Matrix& x) const {
  auto a = coords(x);
  Covector xi = Covector::zero(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!a[i].is_zero()) xi.coords[j] += a[i] * gram(i, j);
    }
  return xi;
}

Matrix Realization::psi_inverse_with(const Matrix& gram, const Covector& xi) const {
  if (xi.size() != dim()) throw DomainError("covector has wrong length");
  // xi_j = sum_i a_i G_ij, so G^t a = xi.
  auto a = solve(gram.transpose(), xi.coords);
  if (!a) throw ValidationError(name_ + ": singular Gram matrix");
  return element(*a);
}

GaussScalar Realization::pair(const Covector& xi, const Matrix& x) const {
  auto a = coords(x);
  GaussScalar v;
  for (std::size_t k = 0; k < dim(); ++k) v += xi.coords[k] * a[k];
  return v;
}

Covector Realization::apply(Involution which, const Covector& xi) const {
  // Transport through the Killing form, which every involution preserves up to conjugation.
  Matrix x = psi_inverse(xi);
  Matrix y = apply(which, x);
  Covector out = psi(y);
  return out;
}

Covector Realization::coadjoint(const Matrix& z, const Covector& xi) const {
  // (ad* Z xi)(Y) = -xi([Z, Y]) = xi([Y, Z])
  Matrix adz = ad(z);
  Covector out = Covector::zero(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!adz(i, j).is_zero()) out.coords[j] -= xi.coords[i] * adz(i, j);
    }
  return out;
}

Covector Realization::coadjoint_group(const Matrix& g, const Covector& xi) const {
  auto ginv = inverse(g);
  if (!ginv) throw DomainError("group element is singular");
  Covector out = Covector::zero(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.coords[j] = pair(xi, *ginv * basis_[j] * g);
  return out;
}

bool Realization::is_nilpotent(const Matrix& x) const { return x.power(static_cast<unsigned>(matrix_size())).is_zero(); }

std::size_t Realization::centralizer_dim(const Matrix& x) const { return dim() - dsdict::rank(ad(x)); }

bool Realization::is_regular_nilpotent(const Matrix& x) const {
  if (!contains(x) || !is_nilpotent(x)) return false;
  return centralizer_dim(x) == rank_;
}

std::vector<GaussScalar> Realization::dual_coords(const Covector& xi, const std::vector<Matrix>& other) const {
  if (other.size() != dim()) throw DomainError("alternative basis has wrong length");
  std::vector<GaussScalar> out;
  out.reserve(dim());
  for (const auto& b : other) out.push_back(pair(xi, b));
  return out;
}

Covector Realization::from_dual_coords(const std::vector<GaussScalar>& values, const std::vector<Matrix>& other) const {
  if (other.size() != dim() || values.size() != dim()) throw DomainError("alternative basis has wrong length");
  // Rows: coordinates of the other basis; xi satisfies C xi = values.
  Matrix c(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    auto a = coords(other[k]);
    for (std::size_t j = 0; j < dim(); ++j) c(k, j) = a[j];
  }
  auto sol = solve(c, values);
  if (!sol || dsdict::rank(c) != dim()) throw DomainError("alternative basis is not a basis");
  return Covector(*sol);
}

}  // namespace dsdict
