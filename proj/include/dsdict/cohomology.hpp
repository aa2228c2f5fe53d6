#pragma once

// H^1 of an involution on a finite abelian group, the group Q(G) and its action.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "dsdict/invariants.hpp"

namespace dsdict {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U * M * V = S with S diagonal, each entry dividing the next; U, V unimodular.
struct SmithForm {
  IntMatrix U, Uinv, S, V;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// tau acting on Z/n_1 + ... + Z/n_r, matrix entries act on the standard generators.
struct FiniteAbelianInvolution {
  std::vector<long> orders;
  std::vector<std::vector<long>> tau;
};

struct FiniteAbelianGroup {
  std::vector<long> invariants;               // orders of the cyclic factors, all > 1
  std::vector<std::vector<long>> elements;    // coset representatives in the ambient group, sorted
  std::size_t order() const { return elements.size(); }
};

/// Cocycles {a : tau(a) = -a} modulo coboundaries {x - tau(x)}.
FiniteAbelianGroup h1(const FiniteAbelianInvolution& a);

struct QGroupData {
  FiniteAbelianGroup h1_z;
  std::size_t kernel_size = 0;
  std::string table;
};
QGroupData q_group(const CatalogEntry& entry);
std::size_t q_order(const CatalogEntry& entry);

/// Action of a normalizing element q on chambers (root permutation), weights and labels.
std::vector<std::size_t> q_root_permutation(const CatalogEntry& entry, const Matrix& q);
WeylChamber q_action(const CatalogEntry& entry, const Matrix& q, const WeylChamber& ch);
Weight q_action(const CatalogEntry& entry, const Matrix& q, const Weight& lambda);
OrbitLabel q_action(const CatalogEntry& entry, const Matrix& q, const OrbitLabel& label);

/// Generic parameters of the packet of the catalog base weight.
std::vector<HCParameter> packet_parameters(const CatalogEntry& entry);

struct TorsorReport {
  std::string entry;
  std::size_t chambers = 0, wf = 0, av = 0, wh = 0, q = 0;
  bool q_simply_transitive = false;
  bool pass = false;
};
TorsorReport verify_torsor_counts(const CatalogEntry& entry);
nlohmann::json torsor_to_json(const TorsorReport& r);

}  // namespace dsdict
