#pragma once

// Roots of the compact Cartan t, Weyl chambers, W and W_K, and
// Harish-Chandra parameters.  Weights are written in the coordinates
// lambda_j = lambda(h_j) for the Cartan basis h_1..h_r of the realization.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsdict/scalar.hpp"

namespace dsdict {

using Weight = std::vector<Rational>;

struct Root {
  std::vector<long> weight;
  Weight coroot;
  std::size_t basis_index = 0;  // index of X_alpha in the realization basis
  bool compact = false;
};

class RootDatum {
 public:
  RootDatum() = default;
  /// Checks <alpha, alpha-check> = 2, closure under negation and reflections,
  /// and multiplicativity of the grading.
  RootDatum(std::size_t rank, std::vector<Root> roots);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t k) const { return roots_.at(k); }

  std::optional<std::size_t> index_of(const std::vector<long>& weight) const;
  std::size_t negative_of(std::size_t k) const;
  Rational pairing(const Weight& lambda, std::size_t root) const;
  Weight weight_of(std::size_t root) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Root> roots_;
};

/// Sign vector on the fixed root enumeration: +1 iff the root is positive.
struct WeylChamber {
  std::vector<int> signs;
  friend bool operator==(const WeylChamber&, const WeylChamber&) = default;
  friend auto operator<=>(const WeylChamber&, const WeylChamber&) = default;
};

/// Linear action on weights (row-major rank x rank) plus the induced root permutation.
struct WeylElement {
  std::vector<Rational> matrix;
  std::vector<std::size_t> perm;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm == b.perm; }
};

struct HCParameter {
  Weight lambda;
};

struct ChamberClass {
  WeylChamber representative;
  std::vector<WeylChamber> members;
};

bool is_regular(const RootDatum& rd, const Weight& lambda);
/// lambda - rho has integer coordinates, rho taken for the positive system of lambda.
bool is_integral(const RootDatum& rd, const Weight& lambda);
/// Throws DomainError unless lambda is regular and integral.
HCParameter make_parameter(const RootDatum& rd, Weight lambda);

WeylChamber positive_system(const RootDatum& rd, const Weight& lambda);
std::vector<std::size_t> positive_roots(const WeylChamber& ch);
std::vector<std::size_t> simple_roots(const RootDatum& rd, const WeylChamber& ch);
Weight rho(const RootDatum& rd, const WeylChamber& ch);
bool is_large(const RootDatum& rd, const WeylChamber& ch);
/// Checks the closure conditions of a positive system.
bool is_positive_system(const RootDatum& rd, const WeylChamber& ch);
/// A weight strictly inside the chamber.
Weight interior_point(const RootDatum& rd, const WeylChamber& ch);

WeylElement reflection(const RootDatum& rd, std::size_t root);
WeylElement compose(const RootDatum& rd, const WeylElement& a, const WeylElement& b);
WeylElement weyl_identity(const RootDatum& rd);
/// Group element from a weight-space matrix; throws ValidationError if it does not permute the roots.
WeylElement weyl_element_from_matrix(const RootDatum& rd, std::vector<Rational> matrix);
Weight act(const WeylElement& w, const Weight& lambda);
WeylChamber act(const WeylElement& w, const WeylChamber& ch);

std::vector<WeylElement> generate_group(const RootDatum& rd, const std::vector<WeylElement>& generators);
std::vector<WeylElement> weyl_group(const RootDatum& rd);
/// Generated by reflections in compact roots and the extra generators; extras must preserve the grading.
std::vector<WeylElement> wk_subgroup(const RootDatum& rd, const std::vector<WeylElement>& extra);

std::vector<WeylChamber> all_chambers(const RootDatum& rd);
std::vector<ChamberClass> large_chambers_mod_wk(const RootDatum& rd, const std::vector<WeylElement>& wk);
/// Index into the class list containing the chamber, or nullopt.
std::optional<std::size_t> class_of(const std::vector<ChamberClass>& classes, const WeylChamber& ch);

std::string weight_str(const Weight& w);
std::string chamber_str(const RootDatum& rd, const WeylChamber& ch);

}  // namespace dsdict
