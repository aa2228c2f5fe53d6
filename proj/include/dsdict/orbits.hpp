#pragma once

// Orbit labels, Kostant sections, asymptotic cones and the conjugacy oracle.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dsdict/catalog.hpp"
#include "dsdict/triples.hpp"

namespace dsdict {

struct OrbitLabel {
  Side side = Side::real_orbit;
  int tag = 0;
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// "wf:+", "av:-", "wh:+".
std::string label_code(const OrbitLabel& l);
OrbitLabel parse_label_code(const std::string& s);
std::string label_display(const CatalogEntry& entry, const OrbitLabel& l);

/// Sign of v -> omega(N^(2n-1) v, v) for N = -iX; X principal nilpotent in i g(R).
int real_orbit_tag(const CatalogEntry& entry, const QuadMatrix& x);
OrbitLabel real_orbit_label(const CatalogEntry& entry, const Covector& xi);

/// K-orbit of a principal nilpotent F in s: the tag of its Kostant-Sekiguchi image G(R).(-E_R).
/// Inputs outside torus normal form go through a K-invariant (ranks of the
/// center-of-k eigencomponents) calibrated on normal-form representatives.
int k_orbit_tag(const CatalogEntry& entry, const Matrix& f);
OrbitLabel k_orbit_label(const CatalogEntry& entry, const Covector& xi);
std::pair<std::size_t, std::size_t> k_rank_invariant(const CatalogEntry& entry, const Matrix& f);

/// Conjugation-invariant data of a regular semisimple elliptic element p of i g(R):
/// for A = -ip, the eigenvalues y of A^2 with the sign of omega(Av, v) on ker(A^2 - y).
struct EllipticInvariant {
  std::vector<std::pair<Rational, int>> parts;
  friend bool operator==(const EllipticInvariant&, const EllipticInvariant&) = default;
};
EllipticInvariant elliptic_invariant(const CatalogEntry& entry, const Matrix& p);

struct AffineSubspace {
  Covector base;
  std::vector<Covector> directions;
};

struct KostantSection {
  AffineSubspace affine;
  Triple triple;                    // (n, h, y) with n = psi^{-1}(X)
  Matrix gram;                      // form used for psi
  std::vector<Matrix> centralizer;  // basis of Cent(y), sorted by ad h weight
  std::vector<long> weights;
};

/// X + Cent(Y) transported to g*, for the bilinear form with the given Gram matrix.
KostantSection kostant_section(const CatalogEntry& entry, const Covector& xi);
KostantSection kostant_section_with(const CatalogEntry& entry, const Matrix& gram, const Covector& xi);
bool same_affine_subspace(const AffineSubspace& a, const AffineSubspace& b);
bool section_contains(const KostantSection& s, const Covector& point);

/// The unique point of the section with the characteristic polynomial of p.
Matrix section_fiber_point(const CatalogEntry& entry, const KostantSection& s, const Matrix& p);

struct SectionMeet {
  bool meets = false;
  Matrix point;     // fiber point in g
  Covector witness; // psi(point)
};
SectionMeet section_meets_orbit(const CatalogEntry& entry, const KostantSection& s, const HCParameter& lambda);

/// Limit of eps * Ad(cocharacter) applied to psi^{-1}(lambda): keeps the entries of top weight.
/// Only for entries that supply a scaling cocharacter (SL(2)).
Matrix scaling_limit(const CatalogEntry& entry, const Matrix& p);
Matrix asymptotic_cone_scaling(const CatalogEntry& entry, const HCParameter& lambda);
bool asymptotic_cone_member(const CatalogEntry& entry, const Covector& xi, const HCParameter& lambda);

/// exp of a nilpotent matrix, exactly.
Matrix exp_nilpotent(const Matrix& n);

enum class GroupSide { real_group, k_group };

struct OracleResult {
  bool conjugate = false;
  std::size_t words_tried = 0;
  std::optional<Matrix> conjugator;
  std::vector<std::size_t> word;
};

/// Randomized search over words of length <= 2 in exp(t n) (n from the
/// catalog generators, t in {+-1, +-2, +-1/2}), plus compact torus elements
/// on the K side.  "not found" is inconclusive.
class ConjugacyOracle {
 public:
  ConjugacyOracle(const CatalogEntry& entry, GroupSide side, std::uint64_t seed);

  static constexpr std::size_t default_budget = 4096;

  OracleResult find(const Matrix& x, const Matrix& y, std::size_t budget = default_budget) const;
  /// A word drawn from the search distribution, with its matrix.
  std::pair<std::vector<std::size_t>, Matrix> sample(std::mt19937_64& rng) const;
  std::size_t letter_count() const { return letters_.size(); }
  std::size_t word_count() const { return words_.size(); }
  const Matrix& word_matrix(std::size_t k) const { return word_matrices_[k]; }

 private:
  std::vector<Matrix> letters_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<Matrix> word_matrices_;
  std::vector<std::size_t> order_;
};

/// Elements t_j(d) = exp(log(d) h_j) of the complexified compact torus.
Matrix torus_element(const CatalogEntry& entry, std::size_t j, const GaussScalar& d);

}  // namespace dsdict
