#pragma once

// AV, WF and Whittaker invariants of generic discrete series, and the converse.

#include <optional>
#include <vector>

#include "dsdict/orbits.hpp"

namespace dsdict {

Matrix f_pi(const CatalogEntry& entry, const HCParameter& lambda);

OrbitLabel av_of(const CatalogEntry& entry, const HCParameter& lambda);

/// Each route's answer; scaling and cone routes only where the entry supports them.
struct WfRoutes {
  int explicit_route = 0;  // tag of psi(-F_R) for the real triple of F_pi
  int ks_route = 0;        // KS image of the AV label
  std::optional<int> scaling_route;
  std::optional<int> cone_route;  // the unique principal label whose section meets the orbit
};
WfRoutes wf_routes(const CatalogEntry& entry, const HCParameter& lambda, bool with_cone = false);
/// Throws ConsistencyError when the routes disagree.
OrbitLabel wf_of(const CatalogEntry& entry, const HCParameter& lambda);

/// psi of the catalog representative, negated if needed to carry the tag.
Covector real_orbit_representative(const CatalogEntry& entry, int tag);
/// Representative of the principal K-orbit with the given tag: psi(F_pi) of a large chamber.
Covector k_orbit_representative(const CatalogEntry& entry, int tag);

struct WhittakerDatum {
  OrbitLabel orbit;
  Covector representative;
};
WhittakerDatum whittaker_of(const CatalogEntry& entry, const HCParameter& lambda);

struct WhittakerPair {
  std::vector<Matrix> borel;          // basis of the Borel subalgebra in ker X
  std::vector<Matrix> simple_vectors; // opposite simple root vectors
  std::vector<GaussScalar> values;    // X on each of them, all nonzero
};
WhittakerPair whittaker_pair(const CatalogEntry& entry, const Covector& xi);

/// H in the compact Cartan with alpha(H) = 2 on the simple roots of the chamber.
Matrix chamber_neutral(const CatalogEntry& entry, const WeylChamber& chamber);

/// Index into large_chambers_mod_wk of the class whose WF label is the given real orbit.
std::size_t reconstruct_chamber(const CatalogEntry& entry, const OrbitLabel& omega, const HCParameter& packet);

std::vector<ChamberClass> large_classes(const CatalogEntry& entry);

}  // namespace dsdict
