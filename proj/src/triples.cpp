#include "dsdict/triples.hpp"

#include <algorithm>

#include "dsdict/error.hpp"

namespace dsdict {

std::string adaptation_name(Adaptation a) {
  switch (a) {
    case Adaptation::theta_adapted:
      return "theta_adapted";
    case Adaptation::real_adapted:
      return "real_adapted";
    case Adaptation::none:
      return "none";
  }
  return "?";
}

QuadTriple lift(const Triple& t) { return {lift(t.E), lift(t.H), lift(t.F), t.adaptation}; }

bool has_adaptation(const Realization& lie, const QuadTriple& t, Adaptation a) {
  if (!satisfies_relations(t)) return false;
  auto sigma = [&](const QuadMatrix& x) { return lie.apply(Involution::sigma, x); };
  auto theta = [&](const QuadMatrix& x) { return lie.apply(Involution::theta, x); };
  switch (a) {
    case Adaptation::theta_adapted:
      return theta(t.E) == -t.E && theta(t.F) == -t.F && theta(t.H) == t.H && sigma(t.E) == t.F;
    case Adaptation::real_adapted:
      return sigma(t.E) == -t.E && sigma(t.F) == -t.F && sigma(t.H) == t.H && theta(t.E) == t.F;
    case Adaptation::none:
      return true;
  }
  return false;
}

namespace {

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

}  // namespace

Triple complete_triple(const Realization& lie, const Matrix& e, std::optional<Involution> average) {
  if (!lie.is_nilpotent(e) || e.is_zero()) throw DomainError("Jacobson-Morozov needs a nonzero nilpotent element");
  const std::size_t d = lie.dim();
  Matrix ade = lie.ad(e);
  // h = [e, z] with [h, e] = 2e, i.e. ad(e)^2 z = -2e.
  std::vector<GaussScalar> rhs = lie.coords(e);
  for (auto& x : rhs) x *= GaussScalar(-2);
  auto z = solve(ade * ade, rhs);
  if (!z) throw ConsistencyError("Jacobson-Morozov: no neutral element found");
  Matrix h = lie.bracket(e, lie.element(*z));
  if (average) {
    Matrix other = lie.apply(*average, h);
    h = (h + other) * GaussScalar(Rational(1, 2));
  }
  // y is unique with [e, y] = h and [h, y] = -2y.
  Matrix adh = lie.ad(h);
  for (std::size_t k = 0; k < d; ++k) adh(k, k) += GaussScalar(2);
  Matrix system = stack(ade, adh);
  std::vector<GaussScalar> target = lie.coords(h);
  target.resize(2 * d);
  auto y = solve(system, target);
  if (!y) throw ConsistencyError("Jacobson-Morozov: no nilnegative element found");
  Triple t{e, h, lie.element(*y), Adaptation::none};
  if (!satisfies_relations(t)) throw ConsistencyError("Jacobson-Morozov produced a non-triple");
  return t;
}

Triple complete_from_nilnegative(const Realization& lie, const Matrix& f, std::optional<Involution> average) {
  Triple t = complete_triple(lie, f, average);
  return Triple{t.F, -t.H, t.E, Adaptation::none};
}

std::optional<NormalForm> torus_normal_form(const CatalogEntry& entry, const Matrix& f) {
  if (!entry.lie.contains(f)) return std::nullopt;
  auto c = entry.lie.coords(f);
  const auto& rd = entry.roots;
  for (std::size_t j = 0; j < rd.rank(); ++j) {
    if (!c[entry.lie.compact_cartan()[j]].is_zero()) return std::nullopt;
  }
  // Support of f, written as the set S with f in the span of X_{-alpha}.
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < rd.size(); ++k) {
    if (!c[rd.root(k).basis_index].is_zero()) support.push_back(rd.negative_of(k));
  }
  std::sort(support.begin(), support.end());
  for (const auto& ch : all_chambers(rd)) {
    auto simple = simple_roots(rd, ch);
    std::sort(simple.begin(), simple.end());
    if (simple != support || !is_large(rd, ch)) continue;
    NormalForm nf{ch, simple, {}};
    for (auto a : simple) nf.coefficients.push_back(c[rd.root(rd.negative_of(a)).basis_index]);
    return nf;
  }
  return std::nullopt;
}

Matrix f_pi(const CatalogEntry& entry, const WeylChamber& chamber) {
  if (!is_large(entry.roots, chamber))
    throw DomainError("chamber " + chamber_str(entry.roots, chamber) + " is not large; parameter is not generic");
  Matrix f = Matrix::square(entry.lie.matrix_size());
  for (auto a : simple_roots(entry.roots, chamber)) f += entry.root_vector(entry.roots.negative_of(a));
  return f;
}

QuadTriple complete_triple_theta(const CatalogEntry& entry, const Matrix& f) {
  const auto& lie = entry.lie;
  const auto& rd = entry.roots;
  auto nf = torus_normal_form(entry, f);
  if (!nf) throw DomainError("element is not in torus normal form for a large chamber");
  if (!lie.is_regular_nilpotent(f)) throw DomainError("element is not regular nilpotent");
  const std::size_t m = nf->simple.size();
  // E = sum c_alpha X_alpha with [[E,F],F] = -2F; the system is linear in c.
  Matrix system(lie.dim(), m);
  for (std::size_t k = 0; k < m; ++k) {
    auto col = lie.coords(lie.bracket(lie.bracket(entry.root_vector(nf->simple[k]), f), f));
    for (std::size_t r = 0; r < lie.dim(); ++r) system(r, k) = col[r];
  }
  std::vector<GaussScalar> rhs = lie.coords(f);
  for (auto& x : rhs) x *= GaussScalar(-2);
  auto c = solve(system, rhs);
  if (!c) throw ConsistencyError("no E completes the normal-form F");
  Matrix e = Matrix::square(lie.matrix_size());
  for (std::size_t k = 0; k < m; ++k) e += entry.root_vector(nf->simple[k]) * (*c)[k];
  Matrix h = lie.bracket(e, f);
  if (!(lie.bracket(h, e) == e * GaussScalar(2))) throw ConsistencyError("normal-form completion fails [H,E] = 2E");

  // sigma(E) has coefficient conj(c_alpha) on X_{-alpha}; rescale so it equals F.
  auto se = lie.coords(lie.apply(Involution::sigma, e));
  QuadMatrix e2 = QuadMatrix::square(lie.matrix_size());
  QuadMatrix f2 = QuadMatrix::square(lie.matrix_size());
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t neg = rd.negative_of(nf->simple[k]);
    GaussScalar mu = se[rd.root(neg).basis_index] / nf->coefficients[k];
    if (!mu.is_real() || sgn(mu.re()) <= 0)
      throw DomainError("sigma-adaptation needs a positive ratio; got " + mu.str());
    QuadScalar dk = QuadScalar::sqrt_of(mu.re());
    f2 += lift(entry.root_vector(neg)) * (dk * QuadScalar(nf->coefficients[k]));
    e2 += lift(entry.root_vector(nf->simple[k])) * (QuadScalar((*c)[k]) / dk);
  }
  QuadTriple t{e2, commutator(e2, f2), f2, Adaptation::theta_adapted};
  if (!has_adaptation(lie, t, Adaptation::theta_adapted))
    throw ConsistencyError("normal theta-triple fails its adaptation checks");
  return t;
}

QuadTriple ks_theta_to_real(const Realization& lie, const QuadTriple& t) {
  if (t.adaptation != Adaptation::theta_adapted || !has_adaptation(lie, t, Adaptation::theta_adapted))
    throw DomainError("Kostant-Sekiguchi transport needs a theta-adapted triple");
  const QuadScalar half(GaussScalar(Rational(1, 2)));
  QuadTriple r{(t.E - t.F - t.H) * half, t.E + t.F, (-t.E + t.F - t.H) * half, Adaptation::real_adapted};
  if (!has_adaptation(lie, r, Adaptation::real_adapted))
    throw ConsistencyError("Kostant-Sekiguchi image is not real-adapted");
  return r;
}

QuadTriple ks_real_to_theta(const Realization& lie, const QuadTriple& t) {
  if (t.adaptation != Adaptation::real_adapted || !has_adaptation(lie, t, Adaptation::real_adapted))
    throw DomainError("inverse Kostant-Sekiguchi transport needs a real-adapted triple");
  const QuadScalar half(GaussScalar(Rational(1, 2)));
  QuadTriple r{(t.E - t.F + t.H) * half, -t.E - t.F, (-t.E + t.F + t.H) * half, Adaptation::theta_adapted};
  if (!has_adaptation(lie, r, Adaptation::theta_adapted))
    throw ConsistencyError("inverse Kostant-Sekiguchi image is not theta-adapted");
  return r;
}

}  // namespace dsdict
