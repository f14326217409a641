#pragma once

#include "sdop/glinf.hpp"
#include "sdop/sdalg.hpp"

namespace sdop {

struct EmbedParams {
  Rat s;
  int window_n = 12;
};

// phi_s of A restricted to the window. Nonzero coefficients whose indices
// fall outside the window are counted in *clipped when provided.
WinMat phi_s(const EmbedParams& p, const SdElem& A, long* clipped = nullptr);

// Str_s(antidifference of the diagonal entries); zero on every t^k term
// with k != 0 and on the off-diagonal entries.
Rat str_s_correction(const Rat& s, const SdElem& A);

// phi_s(A) + (str_s_correction(s, A) + A.central) * 1.
WinMat phi_hat_s(const EmbedParams& p, const SdElem& A, long* clipped = nullptr);

struct HomCheckResult {
  bool ok = false;
  std::string detail;
};

// gl_bracket(phi_hat A, phi_hat B) == phi_hat(sd_bracket(A,B)) on window
// entries at distance >= margin from the edge, and exactly on centrals.
HomCheckResult homomorphism_check(const EmbedParams& p, const SdElem& A,
                                  const SdElem& B, int margin);

// Polynomial kernel surrogate t^k f(D) M_slot with
// f(w) = prod_{n=-N-k}^{N} (w - n - s); its phi_s image vanishes on the window.
SdElem kernel_witness(const Rat& s, int window_n, int k, char slot);

}  // namespace sdop
