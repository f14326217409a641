#pragma once

#include <optional>
#include <string>

#include "sdop/fock.hpp"
#include "sdop/fps.hpp"
#include "sdop/involution.hpp"

namespace sdop {

// Highest-weight data for a quasifiniteness check: the generating functions
// Delta_0, Delta_1 to a common order, plus the central charge.
struct XiSpec {
  SubalgId algebra = SubalgId::Zero;
  Rat c;
  Fps delta0, delta1;
};

struct AnnPair {
  Poly alpha;
  Poly beta;  // unused for the zero family
};

// alpha(d/dx)(Delta_0 + Delta_1 e^{x/2} - c/2) = 0 to the available order.
bool qf_check_zero(const XiSpec& xi, const Poly& alpha);

// beta(d/dx)(Delta_0) = 0 and
// alpha(d/dx)((e^{x/2}+e^{-x/2}) Delta_0 + (e^{x/2}-e^{-x/2}) Delta_1 - 2c) = 0.
// Throws on a parity violation of the pair for the family.
bool qf_check_pm(const XiSpec& xi, const AnnPair& pair);

// Required parities: PP: alpha odd, beta even; PM: alpha even, beta odd;
// MP: both even; MM: both odd.
bool ann_pair_parity_ok(SubalgId id, const AnnPair& pair, std::string* why = nullptr);

struct AnnSearchResult {
  bool is_hw = false;
  std::string detail;
  std::optional<Poly> alpha;  // minimal-degree monic generator when found
};

// Degree -1/2 annihilator search for a highest weight vector of the zero
// family module on the Fock space: finds the minimal monic alpha with
// (theta t^{-1} g alpha(D) + del_theta g(-D) alpha(-D)) v = 0 for all g.
AnnSearchResult fock_annihilator_search(const FockState& v, int degree_bound);

// Extracts the zero-family Delta series of the module generated by v.
XiSpec xi_from_module(const FockState& v, int order);

}  // namespace sdop
