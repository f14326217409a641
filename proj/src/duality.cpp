#include "sdop/duality.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdop {

bool GenYoung::weakly_decreasing() const {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return false;
  return true;
}

long GenYoung::col_len(long j) const {
  long c = 0;
  if (j >= 1) {
    for (long p : parts) c += (p >= j) ? 1 : 0;
    return c;
  }
  for (long p : parts) c -= (p < j) ? 1 : 0;
  return c;
}

namespace {

struct MatEntry {
  int sign;  // +-1 coefficient
  Mode mode;
};

// Entry (row, col), 1-based, of the mode matrix for diagram column j.
// The tilde variant replaces the last column by alternating-sign modes of
// the opposite species (the Pin reflection in the last color).
MatEntry x_matrix_entry(int l, long j, int row, int col, MinorVariant variant) {
  MatEntry e{1, {}};
  if (j >= 1) {
    bool tilde_col = (variant == MinorVariant::Tilde && col == l);
    if (row <= j) {
      e.mode = {Species::GamPlus, col, 1 - 2 * row};  // gamma+_{ -row + 1/2 }
      if (tilde_col) {
        e.mode.sp = Species::GamMinus;
        e.sign = neg_one_pow(row);
      }
    } else {
      e.mode = {Species::PsiPlus, col, static_cast<HalfIdx>(-2 * j)};  // psi+_{-j}
      if (tilde_col) {
        e.mode.sp = Species::PsiMinus;
        e.sign = neg_one_pow(j);
      }
    }
  } else {
    long J = -j;
    int color = l - col + 1;  // columns carry colors l, l-1, ..., 1
    if (row <= J)
      e.mode = {Species::GamMinus, color, 1 - 2 * row};  // gamma-_{ -row + 1/2 }
    else
      e.mode = {Species::PsiMinus, color, static_cast<HalfIdx>(2 * j)};  // psi-_j
  }
  return e;
}

// Applies the ordered-product determinant of the first r x r minor to v.
FockState apply_minor(int l, long j, int r, MinorVariant variant, const FockState& v) {
  if (r == 0) return v;
  if (r > l) throw std::invalid_argument("minor size exceeds color count");
  if (variant == MinorVariant::Tilde && j < 1)
    throw std::invalid_argument("tilde minors need column j >= 1");
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  do {
    int psign = 1;
    for (int i = 0; i < r; ++i)
      for (int t = i + 1; t < r; ++t)
        if (perm[i] > perm[t]) psign = -psign;
    FockState term = v;
    int csign = 1;
    // Row-major product a^1_{s1} a^2_{s2} ... a^r_{sr}: apply rightmost first.
    for (int row = r; row >= 1; --row) {
      MatEntry e = x_matrix_entry(l, j, row, perm[row - 1] + 1, variant);
      csign *= e.sign;
      term = apply_mode(e.mode, term);
      if (term.is_zero()) break;
    }
    out += Rat(psign * csign) * term;
    out.drops += term.drops;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int hwv_twice_energy_bound(const GenYoung& lambda) {
  // Each column-j minor of size r uses rows of twice-energy at most
  // max(2|j|, 2r-1); a generous additive bound suffices for cutoffs.
  long e = 2;
  for (long p : lambda.parts) e += 2 * std::abs(p) + 2 * lambda.parts.size();
  return static_cast<int>(e);
}

}  // namespace

FockState build_minor(int l, long j, int r, MinorVariant variant, int twice_cutoff) {
  FockState vac = FockState::vacuum(l, twice_cutoff);
  return apply_minor(l, j, r, variant, vac);
}

FockState build_hwv(const GenYoung& lambda, HwvKind kind, int twice_cutoff) {
  if (!lambda.weakly_decreasing())
    throw std::invalid_argument("generalized Young diagram must be weakly decreasing");
  if (kind != HwvKind::GL && !lambda.is_partition())
    throw std::invalid_argument("Pin families need a genuine partition");
  const int l = lambda.l();
  if (l == 0) throw std::invalid_argument("empty diagram");
  if (twice_cutoff < 0) twice_cutoff = hwv_twice_energy_bound(lambda);
  FockState v = FockState::vacuum(l, twice_cutoff);
  MinorVariant variant = (kind == HwvKind::PinB) ? MinorVariant::Tilde : MinorVariant::Plain;

  // Rightmost factor first: positive columns descending, then nonpositive
  // columns descending toward lambda_l + 1.
  long lmax = lambda.parts.front(), lmin = lambda.parts.back();
  for (long j = lmax; j >= 1; --j) {
    long r = lambda.col_len(j);
    if (r > 0) v = apply_minor(l, j, static_cast<int>(r), variant, v);
  }
  if (kind == HwvKind::GL) {
    for (long j = 0; j >= lmin + 1; --j) {
      long r = -lambda.col_len(j);
      if (r > 0) v = apply_minor(l, j, static_cast<int>(r), MinorVariant::Plain, v);
    }
  }
  if (kind == HwvKind::PinB)
    v = apply_mode({Species::PsiMinus, l, 0}, v);
  if (v.drops > 0) throw std::runtime_error("build_hwv: cutoff too small");
  return v;
}

HwvCheck verify_hwv(const FockState& v, RaisingSet set, int probe_margin) {
  HwvCheck res;
  int bound = v.max_twice_energy() + probe_margin;
  if (set == RaisingSet::GL) {
    for (HalfIdx a = -bound; a <= bound; ++a) {
      for (HalfIdx b = a + 1; b <= bound; ++b) {
        FockState img = act_gl_entry(a, b, v);
        if (!img.is_zero()) {
          res.offending = "E[" + idx_str(a) + "," + idx_str(b) + "]";
          return res;
        }
      }
    }
  } else {
    // The positive part of the orthosymplectic algebra is spanned by the
    // form-preserving combinations, not by bare matrix units.
    int nb = bound / 2 + 1;
    int window = nb + 2;
    for (int i = -nb; i <= nb; ++i) {
      for (int j = i + 1; j <= nb; ++j) {
        for (int shape = 0; shape <= 2; ++shape) {
          WinMat g = subalg_generator(BilFormKind::OSP, shape, 2 * i, 2 * j, window);
          if (g.is_zero()) continue;
          FockState img = act_winmat(g, v);
          if (!img.is_zero()) {
            res.offending = "osp raising (" + std::to_string(i) + "," +
                            std::to_string(j) + ") shape " + std::to_string(shape);
            return res;
          }
        }
      }
    }
  }
  for (int p = 1; p <= v.colors; ++p) {
    for (int q = 1; q <= v.colors; ++q) {
      if (p == q) continue;
      if (set == RaisingSet::GL) {
        if (p < q && !act_horiz_gl(p, q, v).is_zero()) {
          res.offending = "horizontal gl e(" + std::to_string(p) + "," + std::to_string(q) + ")";
          return res;
        }
      } else {
        if (p < q && !act_so_e_zero(p, q, v).is_zero()) {
          res.offending = "so e(" + std::to_string(p) + "," + std::to_string(q) + ")(0)";
          return res;
        }
        if (p < q && !act_so_e_plus(p, q, v).is_zero()) {
          res.offending = "so e+(" + std::to_string(p) + "," + std::to_string(q) + ")(0)";
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

HwWeight lambda_weight(const GenYoung& lambda) {
  FockState v = build_hwv(lambda, HwvKind::GL);
  WeightRecord rec = weight_of(v);
  if (!rec.ok) throw std::runtime_error("lambda_weight: " + rec.detail);
  HwWeight w;
  w.values = rec.gl_diag;
  w.central = Rat(lambda.l());
  return w;
}

std::string lambda_weight_formula_check(const GenYoung& lambda, const HwWeight& w) {
  std::ostringstream os;
  auto wval = [&](HalfIdx t) {
    auto it = w.values.find(t);
    return it == w.values.end() ? Rat(0) : it->second;
  };
  long bound = 0;
  for (long p : lambda.parts) bound = std::max(bound, std::abs(p));
  bound += lambda.l() + 2;
  // lambda_i = <lambda'_i - i> for positive integers i.
  for (long i = 1; i <= bound; ++i) {
    long expect = std::max(lambda.col_len(i) - i, 0L);
    if (wval(2 * i) != Rat(expect)) {
      os << "clause 1 mismatch at i=" << i;
      return os.str();
    }
  }
  // lambda_j = -<-lambda'_j + j> for j in -Z_+.
  for (long j = 0; j >= -bound; --j) {
    long expect = -std::max(-lambda.col_len(j) + j, 0L);
    if (wval(2 * j) != Rat(expect)) {
      os << "clause 2 mismatch at j=" << j;
      return os.str();
    }
  }
  // lambda_r = <lambda_{r+1/2} - (r-1/2)> for r in 1/2 + Z_+, with the
  // diagram extended by zeros; valid for partitions, where the negative-side
  // clause (the one with the undefined symbol) never engages.
  if (lambda.is_partition()) {
    for (long rr = 0; rr <= bound; ++rr) {  // r = rr + 1/2
      long part = (rr < lambda.l()) ? lambda.parts[rr] : 0;
      long expect = std::max(part - rr, 0L);
      if (wval(2 * rr + 1) != Rat(expect)) {
        os << "clause 3 mismatch at r=" << rr << "+1/2";
        return os.str();
      }
    }
  }
  return {};
}

std::map<HalfIdx, Rat> osp_lambda_values(const GenYoung& lambda) {
  if (!lambda.is_partition()) throw std::invalid_argument("osp weight needs a partition");
  std::map<HalfIdx, Rat> vals;
  long bound = lambda.l() + 2;
  for (long p : lambda.parts) bound = std::max(bound, p + 2);
  for (long j = 1; j <= bound; ++j) {
    long v = std::max(lambda.col_len(j) - j, 0L);
    if (v) vals[2 * j] = Rat(v);
  }
  for (long rr = 0; rr <= bound; ++rr) {  // r = rr + 1/2
    long part = (rr < lambda.l()) ? lambda.parts[rr] : 0;
    long v = std::max(part - rr, 0L);
    if (v) vals[2 * rr + 1] = Rat(v);
  }
  return vals;
}

std::vector<Rat> pin_weight(const GenYoung& lambda, HwvKind variant) {
  if (!lambda.is_partition()) throw std::invalid_argument("pin_weight needs a partition");
  if (variant == HwvKind::GL) throw std::invalid_argument("pin_weight: variant must be PinA/PinB");
  std::vector<Rat> w;
  for (long p : lambda.parts) w.push_back(Rat(p) + Rat(1, 2));
  if (variant == HwvKind::PinB) w.back() = -w.back();
  return w;
}

std::pair<Fps, Fps> delta_pullback(const HwWeight& w, const Rat& s,
                                   DeltaTarget target, int K) {
  auto lam = [&](HalfIdx t) {
    auto it = w.values.find(t);
    return it == w.values.end() ? Rat(0) : it->second;
  };
  const Rat& c = w.central;
  int lo = 0, hi = 0;
  for (const auto& [t, val] : w.values) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  int ilo = lo / 2 - 2, ihi = hi / 2 + 2;

  switch (target) {
    case DeltaTarget::SD: {
      // Delta_a = (sum_i (lam_i - lam_{i+1} +- delta_{i,0} c) e^{(-i+s)x} -+ c)/(e^x - 1),
      // the trailing constant taken opposite to the delta term so the
      // numerator vanishes at x = 0.
      std::vector<std::pair<Rat, Rat>> t0, t1;
      for (int i = ilo; i <= ihi; ++i) {
        Rat rate = Rat(-i) + s;
        Rat c0 = lam(2 * i) - lam(2 * (i + 1)) + (i == 0 ? c : Rat(0));
        Rat c1 = lam(2 * i - 1) - lam(2 * i + 1) - (i == 0 ? c : Rat(0));
        if (!c0.is_zero()) t0.push_back({c0, rate});
        if (!c1.is_zero()) t1.push_back({c1, rate});
      }
      Fps num0 = exp_combination(t0, K + 1) - Fps::constant(c, K + 1);
      Fps num1 = exp_combination(t1, K + 1) + Fps::constant(c, K + 1);
      if (!num0.coeff(0).is_zero() || !num1.coeff(0).is_zero())
        throw std::domain_error("delta_pullback: pole at zero (weight not quasifinite-compatible)");
      Fps den = Fps::exponential(Rat(1), K + 1) - Fps::constant(Rat(1), K + 1);
      return {num0 / den, num1 / den};
    }
    case DeltaTarget::SD0_FROM_OSP: {
      // Weight components are lam_a = Lambda(E_aa - E_{-a,-a}), a > 0; s = 0.
      Fps d0(K), d1(K);
      for (const auto& [t, val] : w.values) {
        if (t <= 0) continue;
        if (t % 2 == 0)
          d0 = d0 - val * fps_sinh(Rat(-t, 2), K);
        else
          d1 = d1 - val * fps_sinh(Rat(-t, 2), K);
      }
      return {d0, d1};
    }
    case DeltaTarget::SD0_GENERIC: {
      Fps d0(K), d1(K);
      for (const auto& [t, val] : w.values) {
        Rat rate = Rat(-t, 2) + s;
        if (t % 2 == 0)
          d0 = d0 - val * fps_sinh(rate, K);
        else
          d1 = d1 - val * fps_sinh(rate, K);
      }
      // Central corrections from the lifted embedding.
      Fps sh_half = fps_sinh(Rat(1, 2), K + 1);
      Fps num0 = fps_cosh(s - Rat(1, 2), K + 1) - fps_cosh(Rat(1, 2), K + 1);
      Fps num1 = fps_cosh(s, K + 1) - Fps::constant(Rat(1), K + 1);
      d0 = d0 + (Rat(1, 2) * c) * ((num0 / sh_half).truncated(K));
      d1 = d1 - (Rat(1, 2) * c) * ((num1 / sh_half).truncated(K));
      return {d0, d1};
    }
    case DeltaTarget::SDPP:
    case DeltaTarget::SDPM:
    case DeltaTarget::SDMP:
    case DeltaTarget::SDMM: {
      // The Cartan generating functions are built from g(D + 1/2), whose
      // integer-diagonal evaluation point is -i + 1/2 + s.
      Fps d0(K), d1(K);
      for (const auto& [t, val] : w.values) {
        Rat rate = (t % 2 == 0 ? Rat(1 - t, 2) : Rat(-t, 2)) + s;
        d0 = d0 - val * fps_sinh(rate, K);
        if (t % 2 == 0)
          d1 = d1 + val * fps_cosh(rate, K);
        else
          d1 = d1 - val * fps_cosh(rate, K);
      }
      Fps sh_half = fps_sinh(Rat(1, 2), K + 1);
      Fps num = fps_sinh(s, K + 1);
      d1 = d1 - c * ((num / sh_half).truncated(K));
      return {d0, d1};
    }
  }
  throw std::logic_error("bad delta target");
}

}  // namespace sdop
