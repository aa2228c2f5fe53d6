#include "dsdict/orbits.hpp"

#include <algorithm>
#include <map>

#include "dsdict/error.hpp"

namespace dsdict {

std::string label_code(const OrbitLabel& l) {
  std::string side = l.side == Side::real_orbit ? "wf" : l.side == Side::k_orbit ? "av" : "wh";
  return side + (l.tag > 0 ? ":+" : ":-");
}

OrbitLabel parse_label_code(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("label must look like wf:+ or av:-");
  std::string side = s.substr(0, colon);
  std::string tag = s.substr(colon + 1);
  OrbitLabel l;
  if (side == "wf") {
    l.side = Side::real_orbit;
  } else if (side == "av") {
    l.side = Side::k_orbit;
  } else if (side == "wh") {
    l.side = Side::whittaker;
  } else {
    throw ParseError("unknown label side '" + side + "'");
  }
  if (tag == "+") {
    l.tag = 1;
  } else if (tag == "-" || tag == "−") {
    l.tag = -1;
  } else {
    throw ParseError("label tag must be + or -");
  }
  return l;
}

std::string label_display(const CatalogEntry& entry, const OrbitLabel& l) { return entry.label_name(l.side, l.tag); }

// ------------------------------------------------------------------ labels

namespace {

int first_nonzero_sign(const QuadMatrix& q) {
  const std::size_t n = q.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (!q(k, k).is_zero()) return q(k, k).real_sign();
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      QuadScalar v = q(k, k) + q(k, l) + q(l, k) + q(l, l);
      if (!v.is_zero()) return v.real_sign();
    }
  return 0;
}

}  // namespace

int real_orbit_tag(const CatalogEntry& entry, const QuadMatrix& x) {
  if (!(entry.lie.apply(Involution::sigma, x) == -x)) throw DomainError("element is not in i g(R)");
  const std::size_t n = x.rows();
  QuadMatrix nreal = x * QuadScalar(GaussScalar(Rational(0), Rational(-1)));
  QuadMatrix top = nreal.power(static_cast<unsigned>(n - 1));
  if (top.is_zero() || !(top * nreal).is_zero()) throw DomainError("element is not principal nilpotent");
  QuadMatrix form = top.transpose() * lift(entry.symplectic_form);
  int s = first_nonzero_sign(form);
  if (s == 0) throw ConsistencyError("degenerate orbit form");
  return s;
}

OrbitLabel real_orbit_label(const CatalogEntry& entry, const Covector& xi) {
  Matrix x = entry.lie.psi_inverse(xi);
  if (!entry.lie.is_regular_nilpotent(x)) throw DomainError("covector is not principal nilpotent");
  return {Side::real_orbit, real_orbit_tag(entry, lift(x))};
}

namespace {

int k_tag_normal_form(const CatalogEntry& entry, const Matrix& f) {
  QuadTriple t = complete_triple_theta(entry, f);
  QuadTriple r = ks_theta_to_real(entry.lie, t);
  return real_orbit_tag(entry, -r.E);
}

Matrix center_of_k(const Realization& lie) {
  const std::size_t d = lie.dim();
  Matrix tm = lie.theta_matrix();
  for (std::size_t k = 0; k < d; ++k) tm(k, k) -= GaussScalar(1);
  std::vector<Matrix> kbasis;
  for (const auto& v : kernel(tm)) kbasis.push_back(lie.element(v));
  // z = sum a_j k_j with [z, k_i] = 0 for all i.
  Matrix system(d * kbasis.size(), kbasis.size());
  for (std::size_t j = 0; j < kbasis.size(); ++j)
    for (std::size_t i = 0; i < kbasis.size(); ++i) {
      auto c = lie.coords(lie.bracket(kbasis[j], kbasis[i]));
      for (std::size_t r = 0; r < d; ++r) system(i * d + r, j) = c[r];
    }
  auto center = kernel(system);
  if (center.empty()) throw DomainError("k has trivial center; the rank invariant does not apply");
  Matrix z = Matrix::square(lie.matrix_size());
  for (std::size_t j = 0; j < kbasis.size(); ++j) z += kbasis[j] * center.front()[j];
  return z;
}

}  // namespace

std::pair<std::size_t, std::size_t> k_rank_invariant(const CatalogEntry& entry, const Matrix& f) {
  const auto& lie = entry.lie;
  Matrix z = center_of_k(lie);
  Matrix zf = lie.bracket(z, f);
  Matrix zzf = lie.bracket(z, zf);
  auto cf = lie.coords(f);
  auto czzf = lie.coords(zzf);
  GaussScalar c2;
  for (std::size_t k = 0; k < cf.size(); ++k) {
    if (!cf[k].is_zero()) {
      c2 = czzf[k] / cf[k];
      break;
    }
  }
  if (!(zzf == f * c2) || c2.is_zero()) throw DomainError("ad z does not act by a scalar square on the element");
  GaussScalar c;
  if (!gauss_sqrt(c2, c)) throw DomainError("eigenvalue of ad z is not in Q(i)");
  Matrix plus = (f * c + zf) * (GaussScalar(2) * c).inverse();
  Matrix minus = f - plus;
  return {rank(plus), rank(minus)};
}

int k_orbit_tag(const CatalogEntry& entry, const Matrix& f) {
  const auto& lie = entry.lie;
  if (!(lie.apply(Involution::theta, f) == -f)) throw DomainError("element is not in s");
  if (!lie.is_regular_nilpotent(f)) throw DomainError("element is not principal nilpotent");
  if (torus_normal_form(entry, f)) return k_tag_normal_form(entry, f);
  // Calibrate the rank invariant on normal-form representatives of every large chamber.
  std::map<std::pair<std::size_t, std::size_t>, int> table;
  for (const auto& ch : all_chambers(entry.roots)) {
    if (!is_large(entry.roots, ch)) continue;
    Matrix rep = f_pi(entry, ch);
    auto key = k_rank_invariant(entry, rep);
    int tag = k_tag_normal_form(entry, rep);
    auto [it, inserted] = table.emplace(key, tag);
    if (!inserted && it->second != tag) throw ConsistencyError("rank invariant does not separate K-orbits");
  }
  auto it = table.find(k_rank_invariant(entry, f));
  if (it == table.end()) throw ConsistencyError("rank invariant of the element matches no principal K-orbit");
  return it->second;
}

OrbitLabel k_orbit_label(const CatalogEntry& entry, const Covector& xi) {
  return {Side::k_orbit, k_orbit_tag(entry, entry.lie.psi_inverse(xi))};
}

// ---------------------------------------------------------------- elliptic

EllipticInvariant elliptic_invariant(const CatalogEntry& entry, const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix a = p * GaussScalar(Rational(0), Rational(-1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!a(r, c).is_real()) throw DomainError("element is not in i g(R)");
  auto cp = characteristic_polynomial(a);
  for (std::size_t k = 1; k < cp.size(); k += 2) {
    if (!cp[k].is_zero()) throw DomainError("characteristic polynomial is not even");
  }
  // Polynomial in y = x^2 with coefficients cp[0], cp[2], ...
  std::vector<Rational> py;
  for (std::size_t k = 0; k < cp.size(); k += 2) py.push_back(cp[k].re());
  std::vector<Rational> roots;
  if (py.size() == 2) {
    roots.push_back(-py[0] / py[1]);
  } else if (py.size() == 3) {
    Rational b = py[1] / py[2];
    Rational c = py[0] / py[2];
    Rational disc = b * b - 4 * c;
    Rational s;
    if (sgn(disc) <= 0 || !rational_sqrt(disc, s)) throw DomainError("eigenvalues are repeated or irrational");
    roots.push_back((-b - s) / 2);
    roots.push_back((-b + s) / 2);
  } else {
    throw DomainError("elliptic invariant implemented up to rank 2");
  }
  EllipticInvariant inv;
  Matrix a2 = a * a;
  for (auto& y : roots) {
    y.canonicalize();
    if (sgn(y) >= 0) throw DomainError("element is not elliptic");
    Matrix shifted = a2 - Matrix::identity(n) * GaussScalar(y);
    auto space = kernel(shifted);
    int sign = 0;
    auto value = [&](const std::vector<GaussScalar>& v) {
      Matrix col = Matrix::column(v);
      return ((a * col).transpose() * entry.symplectic_form * col)(0, 0);
    };
    for (const auto& v : space) {
      GaussScalar w = value(v);
      if (!w.is_zero()) {
        sign = w.real_sign();
        break;
      }
    }
    if (sign == 0) throw ConsistencyError("degenerate elliptic form");
    inv.parts.emplace_back(y, sign);
  }
  std::sort(inv.parts.begin(), inv.parts.end());
  return inv;
}

// ---------------------------------------------------------------- sections

KostantSection kostant_section(const CatalogEntry& entry, const Covector& xi) {
  return kostant_section_with(entry, entry.lie.killing_gram(), xi);
}

KostantSection kostant_section_with(const CatalogEntry& entry, const Matrix& gram, const Covector& xi) {
  const auto& lie = entry.lie;
  Matrix n = lie.psi_inverse_with(gram, xi);
  if (!lie.is_regular_nilpotent(n)) throw DomainError("covector is not principal nilpotent");
  std::optional<Involution> avg;
  if (lie.apply(Involution::sigma, n) == -n) avg = Involution::sigma;
  KostantSection s;
  s.triple = complete_triple(lie, n, avg);
  s.gram = gram;
  Matrix ady = lie.ad(s.triple.F);
  Matrix adh = lie.ad(s.triple.H);
  const std::size_t d = lie.dim();
  for (long w = -2; s.centralizer.size() < lie.rank() && w >= -2 * static_cast<long>(d); w -= 2) {
    Matrix shifted = adh;
    for (std::size_t k = 0; k < d; ++k) shifted(k, k) -= GaussScalar(w);
    Matrix system(2 * d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        system(r, c) = ady(r, c);
        system(d + r, c) = shifted(r, c);
      }
    for (const auto& v : kernel(system)) {
      s.centralizer.push_back(lie.element(v));
      s.weights.push_back(w);
    }
  }
  if (s.centralizer.size() != lie.rank() || kernel(ady).size() != lie.rank())
    throw ConsistencyError("centralizer of the nilnegative element has the wrong dimension");
  s.affine.base = lie.psi_with(gram, n);
  for (const auto& c : s.centralizer) s.affine.directions.push_back(lie.psi_with(gram, c));
  return s;
}

namespace {

Matrix rows_of(const std::vector<Covector>& vs) {
  if (vs.empty()) return {};
  Matrix m(vs.size(), vs.front().size());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < vs[r].size(); ++c) m(r, c) = vs[r].coords[c];
  return m;
}

bool in_span(const std::vector<Covector>& span, const Covector& v) {
  auto with = span;
  with.push_back(v);
  return rank(rows_of(with)) == rank(rows_of(span));
}

}  // namespace

bool same_affine_subspace(const AffineSubspace& a, const AffineSubspace& b) {
  std::vector<Covector> both = a.directions;
  both.insert(both.end(), b.directions.begin(), b.directions.end());
  std::size_t ra = rank(rows_of(a.directions));
  if (ra != rank(rows_of(b.directions)) || ra != rank(rows_of(both))) return false;
  return in_span(a.directions, b.base - a.base);
}

bool section_contains(const KostantSection& s, const Covector& point) {
  return in_span(s.affine.directions, point - s.affine.base);
}

Matrix section_fiber_point(const CatalogEntry& entry, const KostantSection& s, const Matrix& p) {
  const std::size_t n = p.rows();
  auto target = characteristic_polynomial(p);
  std::vector<GaussScalar> coeff(s.centralizer.size());
  auto point = [&](const std::vector<GaussScalar>& c) {
    Matrix m = s.triple.E;
    for (std::size_t k = 0; k < c.size(); ++k) m += s.centralizer[k] * c[k];
    return m;
  };
  // Centralizer vectors of weight -2e are matched against the invariant of degree e + 1,
  // which is linear in that coordinate once the lower ones are fixed.
  std::vector<std::size_t> order(s.centralizer.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return s.weights[a] > s.weights[b]; });
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    std::size_t j = order[idx];
    if (idx + 1 < order.size() && s.weights[order[idx + 1]] == s.weights[j])
      throw DomainError("repeated exponents are not supported");
    std::size_t degree = static_cast<std::size_t>(-s.weights[j] / 2 + 1);
    std::size_t slot = n - degree;
    std::vector<GaussScalar> values;
    for (long t = 0; t <= 2; ++t) {
      coeff[j] = GaussScalar(t);
      values.push_back(characteristic_polynomial(point(coeff))[slot]);
    }
    GaussScalar slope = values[1] - values[0];
    if (!(values[2] - values[1] == slope) || slope.is_zero())
      throw ConsistencyError("invariant is not linear in the section coordinate");
    coeff[j] = (target[slot] - values[0]) / slope;
  }
  Matrix m = point(coeff);
  if (!(characteristic_polynomial(m) == target)) throw ConsistencyError("section point misses the target fiber");
  (void)entry;
  return m;
}

SectionMeet section_meets_orbit(const CatalogEntry& entry, const KostantSection& s, const HCParameter& lambda) {
  const auto& lie = entry.lie;
  Matrix p = lie.psi_inverse_with(s.gram, entry.covector_of(lambda.lambda));
  SectionMeet out;
  out.point = section_fiber_point(entry, s, p);
  out.witness = lie.psi_with(s.gram, out.point);
  if (!(lie.apply(Involution::sigma, out.point) == -out.point)) return out;
  out.meets = elliptic_invariant(entry, out.point) == elliptic_invariant(entry, p);
  return out;
}

Matrix scaling_limit(const CatalogEntry& entry, const Matrix& p) {
  const auto& w = entry.scaling_cocharacter;
  if (w.empty()) throw DomainError(entry.name + ": no scaling cocharacter; the scaling route is unsupported");
  const std::size_t n = p.rows();
  long top = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!p(r, c).is_zero()) top = std::max(top, w[r] - w[c]);
  if (top <= 0) throw DomainError("conjugation orbit does not escape along the cocharacter");
  Matrix limit = Matrix::square(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (w[r] - w[c] == top) limit(r, c) = p(r, c);
  if (!entry.lie.is_regular_nilpotent(limit)) throw ConsistencyError("scaling limit is not principal nilpotent");
  return limit;
}

Matrix asymptotic_cone_scaling(const CatalogEntry& entry, const HCParameter& lambda) {
  return scaling_limit(entry, entry.lie.psi_inverse(entry.covector_of(lambda.lambda)));
}

bool asymptotic_cone_member(const CatalogEntry& entry, const Covector& xi, const HCParameter& lambda) {
  Matrix x = entry.lie.psi_inverse(xi);
  if (!entry.lie.is_nilpotent(x)) throw DomainError("covector is not nilpotent");
  if (!entry.lie.is_regular_nilpotent(x)) throw DomainError("non-principal nilpotent covectors are unsupported");
  return section_meets_orbit(entry, kostant_section(entry, xi), lambda).meets;
}

// ------------------------------------------------------------------ oracle

Matrix exp_nilpotent(const Matrix& n) {
  const std::size_t size = n.rows();
  Matrix out = Matrix::identity(size);
  Matrix term = Matrix::identity(size);
  for (long k = 1; k <= static_cast<long>(size); ++k) {
    term = term * n * GaussScalar(Rational(1, k));
    if (term.is_zero()) return out;
    out += term;
  }
  if (!(term * n).is_zero()) throw DomainError("exp of a non-nilpotent matrix");
  return out;
}

Matrix torus_element(const CatalogEntry& entry, std::size_t j, const GaussScalar& d) {
  const Matrix& h = entry.cartan(j);
  const std::size_t n = h.rows();
  Matrix h2 = h * h;
  if (!(h2 * h == h)) throw DomainError("Cartan element does not have eigenvalues in {-1, 0, 1}");
  const GaussScalar half(Rational(1, 2));
  Matrix plus = (h2 + h) * half;
  Matrix minus = (h2 - h) * half;
  return Matrix::identity(n) - h2 + plus * d + minus * d.inverse();
}

ConjugacyOracle::ConjugacyOracle(const CatalogEntry& entry, GroupSide side, std::uint64_t seed) {
  const std::vector<Rational> steps = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                       Rational(-1, 2)};
  const auto& gens = side == GroupSide::real_group ? entry.real_unipotents : entry.k_unipotents;
  for (const auto& g : gens)
    for (const auto& t : steps) letters_.push_back(exp_nilpotent(g * GaussScalar(t)));
  if (side == GroupSide::k_group) {
    const std::vector<GaussScalar> scales = {GaussScalar(2), GaussScalar(Rational(1, 2)), GaussScalar(3),
                                             GaussScalar(Rational(1, 3)), GaussScalar(-1), GaussScalar::i()};
    for (std::size_t j = 0; j < entry.lie.rank(); ++j)
      for (const auto& d : scales) letters_.push_back(torus_element(entry, j, d));
  }
  const std::size_t n = entry.lie.matrix_size();
  words_.push_back({});
  word_matrices_.push_back(Matrix::identity(n));
  for (std::size_t a = 0; a < letters_.size(); ++a) {
    words_.push_back({a});
    word_matrices_.push_back(letters_[a]);
  }
  for (std::size_t a = 0; a < letters_.size(); ++a)
    for (std::size_t b = 0; b < letters_.size(); ++b) {
      words_.push_back({a, b});
      word_matrices_.push_back(letters_[a] * letters_[b]);
    }
  order_.resize(words_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) order_[k] = k;
  std::mt19937_64 rng(seed);
  std::shuffle(order_.begin(), order_.end(), rng);
}

OracleResult ConjugacyOracle::find(const Matrix& x, const Matrix& y, std::size_t budget) const {
  OracleResult res;
  const std::size_t n = x.rows();
  for (std::size_t k = 0; k < order_.size() && res.words_tried < budget; ++k) {
    ++res.words_tried;
    const Matrix& g = word_matrices_[order_[k]];
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      for (std::size_t c = 0; c < n && ok; ++c) {
        GaussScalar lhs;
        GaussScalar rhs;
        for (std::size_t m = 0; m < n; ++m) {
          if (!g(r, m).is_zero() && !x(m, c).is_zero()) lhs += g(r, m) * x(m, c);
          if (!y(r, m).is_zero() && !g(m, c).is_zero()) rhs += y(r, m) * g(m, c);
        }
        ok = lhs == rhs;
      }
    if (ok) {
      res.conjugate = true;
      res.conjugator = g;
      res.word = words_[order_[k]];
      return res;
    }
  }
  return res;
}

std::pair<std::vector<std::size_t>, Matrix> ConjugacyOracle::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, words_.size() - 1);
  std::size_t k = pick(rng);
  return {words_[k], word_matrices_[k]};
}

}  // namespace dsdict
