#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdop/fock.hpp"
#include "sdop/fps.hpp"

namespace sdop {

// Weakly decreasing integer tuple, possibly with negative entries, indexing
// rational GL(l) irreps.
struct GenYoung {
  std::vector<long> parts;

  int l() const { return static_cast<int>(parts.size()); }
  bool weakly_decreasing() const;
  bool is_partition() const { return weakly_decreasing() && (parts.empty() || parts.back() >= 0); }
  // Signed column length: #{i : parts_i >= j} for j >= 1,
  // -#{i : parts_i < j} for j <= 0.
  long col_len(long j) const;
};

enum class MinorVariant { Plain, Tilde };

// Ordered-product determinant of the first r x r minor of the mode matrix
// for diagram column j, applied to the vacuum.
FockState build_minor(int l, long j, int r, MinorVariant variant, int twice_cutoff);

enum class HwvKind { GL, PinA, PinB };

// Product of column minors applied to the vacuum, in diagram-column order.
// twice_cutoff < 0 lets the builder pick a sufficient cutoff.
FockState build_hwv(const GenYoung& lambda, HwvKind kind, int twice_cutoff = -1);

enum class RaisingSet { GL, OSP };

struct HwvCheck {
  bool ok = false;
  std::string offending;
};

// Annihilation by the positive part: window E_{ab} (a < b) plus the
// horizontal raising operators of the chosen set.
HwvCheck verify_hwv(const FockState& v, RaisingSet set, int probe_margin = 4);

// Weight of (gl_infinity)_0^*: finitely many E_{aa}-eigenvalues plus the
// central charge.
struct HwWeight {
  std::map<HalfIdx, Rat> values;  // twice-indexed
  Rat central;
};

// Operational weight of the constructed GL highest weight vector.
HwWeight lambda_weight(const GenYoung& lambda);

// Printed clauses of the weight formula that carry no ambiguity; used as a
// cross-check of lambda_weight. Returns mismatch description or empty.
std::string lambda_weight_formula_check(const GenYoung& lambda, const HwWeight& w);

// so(2l) weight of the Pin family vectors: lambda + 1/2*(1,..,1), variant B
// flips the sign of the last coordinate.
std::vector<Rat> pin_weight(const GenYoung& lambda, HwvKind variant);

// Orthosymplectic highest weight of both Pin families: eigenvalues of
// E_{aa} - E_{-a,-a} are <lambda'_j - j> at integers and
// <lambda_{r+1/2} - (r-1/2)> at half-integers. Twice-indexed, zeros omitted.
std::map<HalfIdx, Rat> osp_lambda_values(const GenYoung& lambda);

enum class DeltaTarget { SD, SD0_FROM_OSP, SD0_GENERIC, SDPP, SDPM, SDMP, SDMM };

// Highest-weight generating functions (Delta_0, Delta_1) of the pullback
// along phi_hat_s, as series to order K.
std::pair<Fps, Fps> delta_pullback(const HwWeight& w, const Rat& s,
                                   DeltaTarget target, int K);

}  // namespace sdop
