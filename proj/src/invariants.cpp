#include "dsdict/invariants.hpp"

#include "dsdict/error.hpp"

namespace dsdict {

Matrix f_pi(const CatalogEntry& entry, const HCParameter& lambda) {
  return f_pi(entry, positive_system(entry.roots, lambda.lambda));
}

OrbitLabel av_of(const CatalogEntry& entry, const HCParameter& lambda) {
  return {Side::k_orbit, k_orbit_tag(entry, f_pi(entry, lambda))};
}

Covector real_orbit_representative(const CatalogEntry& entry, int tag) {
  if (tag != 1 && tag != -1) throw DomainError("orbit tags are +1 or -1");
  const Matrix& x = entry.real_representative;
  Covector xi = entry.lie.psi(x);
  return real_orbit_tag(entry, lift(x)) == tag ? xi : -xi;
}

Covector k_orbit_representative(const CatalogEntry& entry, int tag) {
  for (const auto& ch : all_chambers(entry.roots)) {
    if (!is_large(entry.roots, ch)) continue;
    Matrix f = f_pi(entry, ch);
    if (k_orbit_tag(entry, f) == tag) return entry.lie.psi(f);
  }
  throw DomainError(entry.name + ": no principal K-orbit with tag " + std::to_string(tag));
}

WfRoutes wf_routes(const CatalogEntry& entry, const HCParameter& lambda, bool with_cone) {
  WfRoutes out;
  Matrix f = f_pi(entry, lambda);
  QuadTriple real = ks_theta_to_real(entry.lie, complete_triple_theta(entry, f));
  out.explicit_route = real_orbit_tag(entry, -real.F);
  out.ks_route = av_of(entry, lambda).tag;
  if (!entry.scaling_cocharacter.empty()) {
    out.scaling_route = real_orbit_tag(entry, lift(asymptotic_cone_scaling(entry, lambda)));
  }
  if (with_cone) {
    for (int tag : {1, -1}) {
      auto s = kostant_section(entry, real_orbit_representative(entry, tag));
      if (!section_meets_orbit(entry, s, lambda).meets) continue;
      if (out.cone_route) throw ConsistencyError("two principal sections meet the same orbit");
      out.cone_route = tag;
    }
    if (!out.cone_route) throw ConsistencyError("no principal section meets the orbit");
  }
  return out;
}

OrbitLabel wf_of(const CatalogEntry& entry, const HCParameter& lambda) {
  WfRoutes r = wf_routes(entry, lambda);
  if (r.explicit_route != r.ks_route)
    throw ConsistencyError("wave-front routes disagree: explicit " + std::to_string(r.explicit_route) + ", KS " +
                           std::to_string(r.ks_route));
  if (r.scaling_route && *r.scaling_route != r.explicit_route)
    throw ConsistencyError("wave-front routes disagree: scaling " + std::to_string(*r.scaling_route));
  return {Side::real_orbit, r.explicit_route};
}

WhittakerDatum whittaker_of(const CatalogEntry& entry, const HCParameter& lambda) {
  int tag = wf_of(entry, lambda).tag;
  return {{Side::whittaker, tag}, real_orbit_representative(entry, tag)};
}

namespace {

std::vector<Matrix> eigenspace(const Realization& lie, const Matrix& adh, long w) {
  Matrix shifted = adh;
  for (std::size_t k = 0; k < lie.dim(); ++k) shifted(k, k) -= GaussScalar(w);
  std::vector<Matrix> out;
  for (const auto& v : kernel(shifted)) out.push_back(lie.element(v));
  return out;
}

// Matrix of ad t restricted to span(v), in the coordinates of v.
Matrix restricted_ad(const Realization& lie, const Matrix& t, const std::vector<Matrix>& v) {
  const std::size_t d = lie.dim();
  Matrix cols(d, v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto c = lie.coords(v[k]);
    for (std::size_t r = 0; r < d; ++r) cols(r, k) = c[r];
  }
  Matrix out(v.size(), v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto image = solve(cols, lie.coords(lie.bracket(t, v[k])));
    if (!image) throw ConsistencyError("ad of the Cartan does not preserve the weight space");
    for (std::size_t r = 0; r < v.size(); ++r) out(r, k) = (*image)[r];
  }
  return out;
}

std::vector<Matrix> split_root_lines(const Realization& lie, const std::vector<Matrix>& cartan,
                                     const std::vector<Matrix>& space) {
  if (space.size() <= 1) return space;
  if (space.size() > 2) throw DomainError("simple root splitting implemented up to rank 2");
  for (long a = 1; a <= 5; ++a) {
    Matrix t = Matrix::square(lie.matrix_size());
    for (std::size_t k = 0; k < cartan.size(); ++k) t += cartan[k] * GaussScalar(k == 0 ? 1 : a + static_cast<long>(k));
    Matrix m = restricted_ad(lie, t, space);
    GaussScalar tr = m(0, 0) + m(1, 1);
    GaussScalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    GaussScalar disc = tr * tr - GaussScalar(4) * det;
    if (disc.is_zero()) continue;
    GaussScalar s;
    if (!gauss_sqrt(disc, s)) throw DomainError("root eigenvalues are not in Q(i)");
    std::vector<Matrix> lines;
    for (const auto& ev : {(tr + s) * GaussScalar(Rational(1, 2)), (tr - s) * GaussScalar(Rational(1, 2))}) {
      Matrix shifted = m;
      shifted(0, 0) -= ev;
      shifted(1, 1) -= ev;
      auto k = kernel(shifted);
      if (k.size() != 1) throw ConsistencyError("root line is not one-dimensional");
      lines.push_back(space[0] * k[0][0] + space[1] * k[0][1]);
    }
    return lines;
  }
  throw ConsistencyError("no regular element found in the Cartan subalgebra");
}

}  // namespace

WhittakerPair whittaker_pair(const CatalogEntry& entry, const Covector& xi) {
  const auto& lie = entry.lie;
  Matrix n = lie.psi_inverse(xi);
  if (!lie.is_regular_nilpotent(n)) throw DomainError("covector is not principal nilpotent");
  if (!(lie.apply(Involution::sigma, n) == -n)) throw DomainError("covector is not in i g(R)*");
  Triple t = complete_triple(lie, n, Involution::sigma);
  Matrix adh = lie.ad(t.H);
  WhittakerPair out;
  const long top = 2 * static_cast<long>(lie.dim());
  for (long w = 0; w <= top; w += 2) {
    for (auto& v : eigenspace(lie, adh, w)) out.borel.push_back(std::move(v));
  }
  auto cartan = eigenspace(lie, adh, 0);
  out.simple_vectors = split_root_lines(lie, cartan, eigenspace(lie, adh, -2));
  if (out.simple_vectors.size() != lie.rank()) throw ConsistencyError("wrong number of simple root spaces");
  for (const auto& v : out.simple_vectors) {
    GaussScalar value = lie.pair(xi, v);
    if (value.is_zero()) throw ConsistencyError("character is trivial on a simple root space");
    out.values.push_back(value);
  }
  for (const auto& b : out.borel) {
    if (!lie.pair(xi, b).is_zero()) throw ConsistencyError("covector does not vanish on its Borel subalgebra");
  }
  return out;
}

Matrix chamber_neutral(const CatalogEntry& entry, const WeylChamber& chamber) {
  const auto& rd = entry.roots;
  auto simple = simple_roots(rd, chamber);
  Matrix system(simple.size(), rd.rank());
  for (std::size_t r = 0; r < simple.size(); ++r)
    for (std::size_t c = 0; c < rd.rank(); ++c) system(r, c) = GaussScalar(rd.root(simple[r]).weight[c]);
  auto coeff = solve(system, std::vector<GaussScalar>(simple.size(), GaussScalar(2)));
  if (!coeff) throw ConsistencyError("no neutral element for chamber " + chamber_str(rd, chamber));
  Matrix h = Matrix::square(entry.lie.matrix_size());
  for (std::size_t j = 0; j < rd.rank(); ++j) h += entry.cartan(j) * (*coeff)[j];
  return h;
}

std::vector<ChamberClass> large_classes(const CatalogEntry& entry) {
  return large_chambers_mod_wk(entry.roots, wk_subgroup(entry.roots, entry.wk_extra));
}

std::size_t reconstruct_chamber(const CatalogEntry& entry, const OrbitLabel& omega, const HCParameter& packet) {
  if (omega.side != Side::real_orbit && omega.side != Side::whittaker)
    throw DomainError("reconstruction needs a real orbit label");
  if (!is_regular(entry.roots, packet.lambda)) throw DomainError("packet parameter is not regular");
  const auto& lie = entry.lie;
  Matrix f = lie.psi_inverse(real_orbit_representative(entry, omega.tag));
  Triple t = complete_from_nilnegative(lie, f, Involution::sigma);
  auto target = elliptic_invariant(entry, t.E + t.F);
  auto classes = large_classes(entry);
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!(elliptic_invariant(entry, chamber_neutral(entry, classes[c].representative)) == target)) continue;
    if (found) throw ConsistencyError("two chamber classes match the same orbit");
    found = c;
  }
  if (!found) throw ConsistencyError("no large chamber class matches the orbit");
  return *found;
}

}  // namespace dsdict
