#include "sdop/embed.hpp"

#include <sstream>

namespace sdop {

WinMat phi_s(const EmbedParams& p, const SdElem& A, long* clipped) {
  WinMat m(p.window_n);
  const int N = p.window_n;
  for (const auto& [k, F] : A.terms()) {
    // Columns j with any chance of landing in the window.
    for (int j = -N - std::abs(k) - 1; j <= N + std::abs(k) + 1; ++j) {
      Rat w = Rat(-j) + p.s;
      // E_{j-k,j} M0 = E_{j-k,j}
      m.add(2 * (j - k), 2 * j, F.f0.eval(w), clipped);
      // E_{j-k,j} M1 = E_{j-k-1/2, j-1/2}
      m.add(2 * (j - k) - 1, 2 * j - 1, F.f1.eval(w), clipped);
      // E_{j-k,j} M+ = E_{j-k, j-1/2}
      m.add(2 * (j - k), 2 * j - 1, F.fp.eval(w), clipped);
      // E_{j-k,j} M- = E_{j-k-1/2, j}
      m.add(2 * (j - k) - 1, 2 * j, F.fm.eval(w), clipped);
    }
  }
  return m;
}

Rat str_s_correction(const Rat& s, const SdElem& A) {
  auto it = A.terms().find(0);
  if (it == A.terms().end()) return Rat(0);
  Poly F0 = antidifference(it->second.f0);
  Poly F1 = antidifference(it->second.f1);
  // Str_s kills constants, so the f(0)=0 normalization is immaterial.
  return F0.eval(s) - F0.eval(Rat(0)) - F1.eval(s) + F1.eval(Rat(0));
}

WinMat phi_hat_s(const EmbedParams& p, const SdElem& A, long* clipped) {
  WinMat m = phi_s(p, A, clipped);
  m.central() += str_s_correction(p.s, A) + A.central();
  return m;
}

HomCheckResult homomorphism_check(const EmbedParams& p, const SdElem& A,
                                  const SdElem& B, int margin) {
  HomCheckResult res;
  WinMat lhs = gl_bracket(phi_hat_s(p, A), phi_hat_s(p, B));
  WinMat rhs = phi_hat_s(p, sd_bracket(A, B));
  if (lhs.central() != rhs.central()) {
    std::ostringstream os;
    os << "central mismatch: " << lhs.central().str() << " vs " << rhs.central().str();
    res.detail = os.str();
    return res;
  }
  const int bound = 2 * (p.window_n - margin);
  WinMat diff = lhs - rhs;
  for (const auto& [ij, c] : diff.entries()) {
    if (std::abs(ij.first) <= bound && std::abs(ij.second) <= bound) {
      std::ostringstream os;
      os << "interior mismatch at (" << idx_str(ij.first) << "," << idx_str(ij.second)
         << "): " << c.str();
      res.detail = os.str();
      return res;
    }
  }
  res.ok = true;
  return res;
}

SdElem kernel_witness(const Rat& s, int window_n, int k, char slot) {
  Poly f(Rat(1));
  for (int n = -window_n - k; n <= window_n; ++n)
    f = f * Poly(std::vector<Rat>{Rat(-n) - s, Rat(1)});
  return SdElem::monomial(k, f, slot);
}

}  // namespace sdop
