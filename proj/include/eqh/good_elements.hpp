#pragma once

#include "eqh/burghelea.hpp"

namespace eqh {

// Verdict data for one element x: p divides [C_G(x) : Omega C_G(x)] with
// Omega = Gamma_x, the derived subgroup of C_G(x) sits inside the closure,
// and a Gamma_x-stable transversal exists. The generated subgroup [H,Omega]
// is reported alongside the normal closure since the two can differ.
struct GoodElementReport {
  int x = 0;
  int centralizer_order = 0;
  std::vector<int> omega_h;    // the normal closure Omega C_G(x)
  std::vector<int> bracket_h;  // the generated subgroup [C_G(x), Omega]
  bool subgroups_differ = false;
  int index = 0;  // |C_G(x) : Omega C_G(x)|
  bool p_divides = false;
  bool derived_contained = false;
  StableTransversalResult transversal;
  bool verdict = false;
};

GoodElementReport is_good(const GroupAction& act, int x, uint32_t p);

// Reports for every x in ascending order.
std::vector<GoodElementReport> find_good_elements(const GroupAction& act,
                                                  uint32_t p);

// A machine-checked witness that HH^1_{Gamma_x}(kG) is nonzero: an index-p
// normal subgroup A of C_G(x) above the closure, the additive character f
// vanishing on A, and the image nu^1(f), a Gamma_x-equivariant Hochschild
// 1-cocycle whose class survives. Every stage is re-verified; a failure
// names the stage.
struct NonvanishingCertificate {
  int x = 0;
  std::vector<int> normal_subgroup_a;  // elements of A, parent indices
  std::vector<uint8_t> hom;  // f on C_G(x), indexed by centralizer position
  uint32_t scalar = 1;       // the nonzero multiplier applied to f
  std::vector<uint8_t> nu_image;  // 1-cochain on C^1(kG,kG), basis (g, u)
  bool class_nonzero = false;
  int equivariant_h1_dim = 0;  // dim HH^1_{Gamma_x}(kG), for cross-checking
};

NonvanishingCertificate hh1_nonvanishing_certificate(
    const GroupAction& act, int x, uint32_t p, int dim_cap = kDefaultDimCap);

}  // namespace eqh
