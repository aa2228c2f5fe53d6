#pragma once

// SL(2)-triples (E, H, F): [E,F] = H, [H,E] = 2E, [H,F] = -2F.

#include <optional>
#include <string>
#include <vector>

#include "dsdict/catalog.hpp"
#include "dsdict/matrix.hpp"
#include "dsdict/realization.hpp"
#include "dsdict/roots.hpp"

namespace dsdict {

enum class Adaptation { theta_adapted, real_adapted, none };

std::string adaptation_name(Adaptation a);

template <class S>
struct BasicTriple {
  BasicMatrix<S> E;
  BasicMatrix<S> H;
  BasicMatrix<S> F;
  Adaptation adaptation = Adaptation::none;
};

using Triple = BasicTriple<GaussScalar>;
using QuadTriple = BasicTriple<QuadScalar>;

template <class S>
bool satisfies_relations(const BasicTriple<S>& t) {
  return commutator(t.E, t.F) == t.H && commutator(t.H, t.E) == t.E * S(2) && commutator(t.H, t.F) == t.F * S(-2);
}

QuadTriple lift(const Triple& t);

/// Exact check of the adaptation flag.  theta_adapted: E, F in s, H in k,
/// sigma(E) = F.  real_adapted: E, F in i g(R), H in g(R), theta(E) = F.
bool has_adaptation(const Realization& lie, const QuadTriple& t, Adaptation a);

/// Jacobson-Morozov completion of a nilpositive e.  When an involution is
/// given, h is averaged with its image, which keeps the triple inside the
/// corresponding form.
Triple complete_triple(const Realization& lie, const Matrix& e, std::optional<Involution> average = std::nullopt);
/// Completion of a nilnegative f to (e, h, f).
Triple complete_from_nilnegative(const Realization& lie, const Matrix& f,
                                 std::optional<Involution> average = std::nullopt);

/// F = sum over the simple roots S of a large chamber of f_alpha X_{-alpha}, all f_alpha nonzero.
struct NormalForm {
  WeylChamber chamber;
  std::vector<std::size_t> simple;       // root indices alpha in S
  std::vector<GaussScalar> coefficients;  // f_alpha
};

std::optional<NormalForm> torus_normal_form(const CatalogEntry& entry, const Matrix& f);

/// F_pi = sum over S of X_{-alpha}; throws DomainError unless the chamber is large.
Matrix f_pi(const CatalogEntry& entry, const WeylChamber& chamber);

/// theta-adapted triple with sigma(E) = F, after rescaling F by an element of
/// the compact torus (which stays inside the K-orbit).  The rescaling may
/// need square roots, hence the quadratic extension.
QuadTriple complete_triple_theta(const CatalogEntry& entry, const Matrix& f);

/// E_R = (E - F - H)/2, F_R = (-E + F - H)/2, H_R = E + F.
QuadTriple ks_theta_to_real(const Realization& lie, const QuadTriple& t);
/// E_theta = (E_R - F_R + H_R)/2, F_theta = (-E_R + F_R + H_R)/2, H_theta = -E_R - F_R.
QuadTriple ks_real_to_theta(const Realization& lie, const QuadTriple& t);

}  // namespace dsdict
