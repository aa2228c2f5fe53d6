#include "dsdict/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dsdict/error.hpp"

namespace dsdict {

namespace {

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[r][k] != 0)
        for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  SmithForm f{identity_int(rows), identity_int(rows), m, identity_int(cols), 0};
  auto& s = f.S;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(s[a], s[b]);
    std::swap(f.U[a], f.U[b]);
    for (auto& row : f.Uinv) std::swap(row[a], row[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : s) std::swap(row[a], row[b]);
    for (auto& row : f.V) std::swap(row[a], row[b]);
  };
  // row_i += q row_t
  auto add_row = [&](std::size_t i, std::size_t t, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) s[i][c] += q * s[t][c];
    for (std::size_t c = 0; c < rows; ++c) f.U[i][c] += q * f.U[t][c];
    for (auto& row : f.Uinv) row[t] -= q * row[i];
  };
  // col_j += q col_t
  auto add_col = [&](std::size_t j, std::size_t t, const mpz_class& q) {
    for (auto& row : s) row[j] += q * row[t];
    for (auto& row : f.V) row[j] += q * row[t];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block goes to the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (s[r][c] != 0 && (pr == rows || abs(s[r][c]) < abs(s[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return f;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (s[r][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), s[r][t].get_mpz_t(), s[t][t].get_mpz_t());
        add_row(r, t, -q);
        if (s[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (s[t][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), s[t][c].get_mpz_t(), s[t][t].get_mpz_t());
        add_col(c, t, -q);
        if (s[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (s[r][c] % s[t][t] != 0) {
            add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s[t][t] < 0) {
      for (auto& x : s[t]) x = -x;
      for (auto& x : f.U[t]) x = -x;
      for (auto& row : f.Uinv) row[t] = -row[t];
    }
    f.rank = t + 1;
  }
  return f;
}

namespace {

// Basis (as columns) of the lattice generated by the columns of g, assumed of full row rank.
IntMatrix lattice_basis(const IntMatrix& g) {
  SmithForm f = smith_normal_form(g);
  const std::size_t n = g.size();
  if (f.rank != n) throw ConsistencyError("lattice is not of full rank");
  IntMatrix basis(n, std::vector<mpz_class>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) basis[r][c] = f.Uinv[r][c] * f.S[c][c];
  return basis;
}

void validate(const FiniteAbelianInvolution& a) {
  const std::size_t r = a.orders.size();
  if (a.tau.size() != r) throw ValidationError("tau must be a square matrix matching the cyclic orders");
  for (long n : a.orders)
    if (n <= 0) throw ValidationError("cyclic orders must be positive");
  for (std::size_t i = 0; i < r; ++i) {
    if (a.tau[i].size() != r) throw ValidationError("tau must be a square matrix matching the cyclic orders");
    for (std::size_t j = 0; j < r; ++j)
      if ((a.tau[i][j] * a.orders[j]) % a.orders[i] != 0) throw ValidationError("tau is not well defined on the group");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long sq = 0;
      for (std::size_t k = 0; k < r; ++k) sq += a.tau[i][k] * a.tau[k][j];
      if ((sq - (i == j ? 1 : 0)) % a.orders[i] != 0) throw ValidationError("tau is not an involution");
    }
}

}  // namespace

FiniteAbelianGroup h1(const FiniteAbelianInvolution& a) {
  validate(a);
  const std::size_t r = a.orders.size();
  FiniteAbelianGroup out;
  if (r == 0) {
    out.elements.push_back({});
    return out;
  }
  // Cocycle lattice: a with (1 + tau) a in D Z^r, from the kernel of [1 + tau | -D].
  IntMatrix system(r, std::vector<mpz_class>(2 * r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) system[i][j] = a.tau[i][j] + (i == j ? 1 : 0);
    system[i][r + i] = -a.orders[i];
  }
  SmithForm sys = smith_normal_form(system);
  IntMatrix gens(r, std::vector<mpz_class>());
  for (std::size_t c = sys.rank; c < 2 * r; ++c)
    for (std::size_t i = 0; i < r; ++i) gens[i].push_back(sys.V[i][c]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gens[i].push_back(i == j ? mpz_class(a.orders[i]) : mpz_class(0));
  IntMatrix zb = lattice_basis(gens);

  // Coboundary lattice (1 - tau) Z^r + D Z^r, written in the cocycle basis.
  IntMatrix bgens(r, std::vector<mpz_class>(2 * r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) bgens[i][j] = (i == j ? 1 : 0) - a.tau[i][j];
    bgens[i][r + i] = a.orders[i];
  }
  SmithForm zf = smith_normal_form(zb);
  // zb = Uinv S V^{-1}, so zb^{-1} = V S^{-1} U.
  IntMatrix ub = multiply(zf.U, bgens);
  for (std::size_t i = 0; i < r; ++i)
    for (auto& x : ub[i]) {
      if (x % zf.S[i][i] != 0) throw ConsistencyError("coboundaries are not cocycles");
      x /= zf.S[i][i];
    }
  IntMatrix coords = multiply(zf.V, ub);
  SmithForm q = smith_normal_form(coords);
  if (q.rank != r) throw ConsistencyError("coboundary lattice is not of full rank");
  IntMatrix gen = multiply(zb, q.Uinv);

  std::vector<long> factors;
  for (std::size_t j = 0; j < r; ++j) {
    long s = q.S[j][j].get_si();
    factors.push_back(s);
    if (s > 1) out.invariants.push_back(s);
  }
  std::set<std::vector<long>> elements;
  std::vector<long> c(r, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == r) {
      std::vector<long> e(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class v = 0;
        for (std::size_t k = 0; k < r; ++k) v += gen[i][k] * c[k];
        mpz_class m;
        mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), mpz_class(a.orders[i]).get_mpz_t());
        e[i] = m.get_si();
      }
      elements.insert(e);
      return;
    }
    for (c[j] = 0; c[j] < factors[j]; ++c[j]) walk(j + 1);
  };
  walk(0);
  out.elements.assign(elements.begin(), elements.end());
  return out;
}

QGroupData q_group(const CatalogEntry& entry) {
  QGroupData d;
  d.h1_z = h1({entry.center_orders, entry.center_tau});
  d.table = entry.h1_kernel;
  if (d.table == "all") {
    d.kernel_size = d.h1_z.order();
  } else if (!d.table.empty() && std::all_of(d.table.begin(), d.table.end(), ::isdigit)) {
    d.kernel_size = std::stoul(d.table);
    if (d.kernel_size == 0 || d.h1_z.order() % d.kernel_size != 0)
      throw ConsistencyError(entry.name + ": kernel size " + d.table + " does not divide |H^1| = " +
                             std::to_string(d.h1_z.order()));
  } else {
    throw DomainError(entry.name + ": missing H^1 kernel table entry");
  }
  return d;
}

std::size_t q_order(const CatalogEntry& entry) { return q_group(entry).kernel_size; }

namespace {

Matrix conjugate(const Matrix& q, const Matrix& x) {
  auto inv = inverse(q);
  if (!inv) throw DomainError("Q representative is not invertible");
  return q * x * *inv;
}

}  // namespace

std::vector<std::size_t> q_root_permutation(const CatalogEntry& entry, const Matrix& q) {
  const auto& rd = entry.roots;
  std::vector<std::size_t> perm(rd.size());
  for (std::size_t a = 0; a < rd.size(); ++a) {
    auto c = entry.lie.coords(conjugate(q, entry.root_vector(a)));
    std::optional<std::size_t> target;
    for (std::size_t b = 0; b < rd.size(); ++b) {
      if (c[rd.root(b).basis_index].is_zero()) continue;
      if (target) throw DomainError("Q representative does not permute the root spaces");
      target = b;
    }
    if (!target) throw DomainError("Q representative does not permute the root spaces");
    perm[a] = *target;
  }
  return perm;
}

WeylChamber q_action(const CatalogEntry& entry, const Matrix& q, const WeylChamber& ch) {
  auto perm = q_root_permutation(entry, q);
  WeylChamber out{std::vector<int>(ch.signs.size())};
  for (std::size_t a = 0; a < perm.size(); ++a) out.signs[perm[a]] = ch.signs[a];
  return out;
}

Weight q_action(const CatalogEntry& entry, const Matrix& q, const Weight& lambda) {
  auto qinv = inverse(q);
  if (!qinv) throw DomainError("Q representative is not invertible");
  const auto& lie = entry.lie;
  Weight out(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    auto c = lie.coords(conjugate(*qinv, entry.cartan(j)));
    Rational v = 0;
    for (std::size_t m = 0; m < lambda.size(); ++m) {
      const auto& x = c[lie.compact_cartan()[m]];
      if (!x.is_real()) throw DomainError("Q representative does not act rationally on the torus");
      v += x.re() * lambda[m];
    }
    out[j] = v;
  }
  return out;
}

OrbitLabel q_action(const CatalogEntry& entry, const Matrix& q, const OrbitLabel& label) {
  const auto& lie = entry.lie;
  if (label.side == Side::k_orbit) {
    Matrix f = lie.psi_inverse(k_orbit_representative(entry, label.tag));
    return {label.side, k_orbit_tag(entry, conjugate(q, f))};
  }
  Matrix x = lie.psi_inverse(real_orbit_representative(entry, label.tag));
  return {label.side, real_orbit_tag(entry, lift(conjugate(q, x)))};
}

std::vector<HCParameter> packet_parameters(const CatalogEntry& entry) {
  std::vector<HCParameter> out;
  std::set<Weight> seen;
  for (const auto& w : weyl_group(entry.roots)) {
    Weight l = act(w, entry.packet_base);
    if (!seen.insert(l).second) continue;
    if (is_large(entry.roots, positive_system(entry.roots, l))) out.push_back(make_parameter(entry.roots, l));
  }
  return out;
}

namespace {

// The permutations of {0..n-1} generated by gens act simply transitively.
bool simply_transitive(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<std::size_t> id(n);
  for (std::size_t k = 0; k < n; ++k) id[k] = k;
  std::set<std::vector<std::size_t>> group{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<std::size_t> c(n);
        for (std::size_t k = 0; k < n; ++k) c[k] = g[p[k]];
        if (group.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  if (group.size() != n) return false;
  std::set<std::size_t> orbit;
  for (const auto& p : group) orbit.insert(p.empty() ? 0 : p[0]);
  return orbit.size() == n;
}

}  // namespace

TorsorReport verify_torsor_counts(const CatalogEntry& entry) {
  TorsorReport r;
  r.entry = entry.name;
  auto classes = large_classes(entry);
  r.chambers = classes.size();
  if (classes.empty()) {
    r.q_simply_transitive = true;
    r.pass = true;
    return r;
  }
  std::set<OrbitLabel> wf, av, wh;
  for (const auto& lam : packet_parameters(entry)) {
    wf.insert(wf_of(entry, lam));
    av.insert(av_of(entry, lam));
    wh.insert(whittaker_of(entry, lam).orbit);
  }
  r.wf = wf.size();
  r.av = av.size();
  r.wh = wh.size();
  r.q = q_order(entry);

  // Q acts through its representatives on each of the four sets.
  bool transitive = true;
  auto check = [&](const auto& items, auto act) {
    std::vector<typename std::decay_t<decltype(items)>::value_type> list(items.begin(), items.end());
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& q : entry.q_representatives) {
      std::vector<std::size_t> p;
      for (const auto& x : list) {
        auto it = std::find(list.begin(), list.end(), act(q, x));
        if (it == list.end()) {
          transitive = false;
          return;
        }
        p.push_back(static_cast<std::size_t>(it - list.begin()));
      }
      gens.push_back(std::move(p));
    }
    if (list.size() != r.q || !simply_transitive(list.size(), gens)) transitive = false;
  };
  std::vector<std::size_t> class_ids(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) class_ids[k] = k;
  check(class_ids, [&](const Matrix& q, std::size_t c) {
    return class_of(classes, q_action(entry, q, classes[c].representative)).value_or(classes.size());
  });
  auto label_act = [&](const Matrix& q, const OrbitLabel& l) { return q_action(entry, q, l); };
  check(wf, label_act);
  check(av, label_act);
  check(wh, label_act);
  r.q_simply_transitive = transitive;
  r.pass = transitive && r.chambers == r.wf && r.wf == r.av && r.av == r.wh && r.wh == r.q;
  return r;
}

nlohmann::json torsor_to_json(const TorsorReport& r) {
  return {{"entry", r.entry},
          {"counts", {{"chambers", r.chambers}, {"wf", r.wf}, {"av", r.av}, {"wh", r.wh}, {"q", r.q}}},
          {"q_simply_transitive", r.q_simply_transitive},
          {"pass", r.pass}};
}

}  // namespace dsdict
