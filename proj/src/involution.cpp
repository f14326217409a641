#include "sdop/involution.hpp"

#include <sstream>
#include <stdexcept>

#include "sdop/rng.hpp"

namespace sdop {

std::string AntiInvolution::name() const {
  std::ostringstream os;
  switch (family) {
    case SigmaFamily::AB: os << "sigma_{" << a.str() << "," << b.str() << "}"; break;
    case SigmaFamily::PP: os << "sigma_{++," << a.str() << "}"; break;
    case SigmaFamily::PM: os << "sigma_{+-," << a.str() << "}"; break;
    case SigmaFamily::MP: os << "sigma_{-+," << a.str() << "}"; break;
    case SigmaFamily::MM: os << "sigma_{--," << a.str() << "}"; break;
  }
  return os.str();
}

namespace {

void family_signs(SigmaFamily f, int* eps, int* delta) {
  switch (f) {
    case SigmaFamily::PP: *eps = 1;  *delta = 1;  return;
    case SigmaFamily::PM: *eps = 1;  *delta = -1; return;
    case SigmaFamily::MP: *eps = -1; *delta = 1;  return;
    case SigmaFamily::MM: *eps = -1; *delta = -1; return;
    default: throw std::logic_error("family_signs: AB");
  }
}

}  // namespace

SdElem apply_sigma(const AntiInvolution& sigma, const SdElem& A) {
  SdElem out;
  const Rat& a = sigma.a;
  if (sigma.family == SigmaFamily::AB) {
    if (sigma.b.is_zero()) throw std::invalid_argument("sigma_{a,b} needs b != 0");
    const Rat binv = Rat(1) / sigma.b;
    for (const auto& [k, F] : A.terms()) {
      int sk = neg_one_pow(k);
      // t^k f M0 -> (-1)^k t^k f(-D-k+a+1) M0
      out += Rat(sk) * SdElem::monomial(k, F.f0.compose_affine(Rat(-1), a - Rat(k) + Rat(1)), '0');
      // t^k f M1 -> (-1)^k t^k f(-D-k+a) M1
      out += Rat(sk) * SdElem::monomial(k, F.f1.compose_affine(Rat(-1), a - Rat(k)), '1');
      // t^k f M+ -> (-1)^{k+1} b^{-1} t^{k-1} f(-D-k+a+1) M-
      out += (Rat(-sk) * binv) *
             SdElem::monomial(k - 1, F.fp.compose_affine(Rat(-1), a - Rat(k) + Rat(1)), '-');
      // t^k f M- -> (-1)^k b t^{k+1} f(-D-k+a) M+
      out += (Rat(sk) * sigma.b) *
             SdElem::monomial(k + 1, F.fm.compose_affine(Rat(-1), a - Rat(k)), '+');
    }
  } else {
    int eps, delta;
    family_signs(sigma.family, &eps, &delta);
    for (const auto& [k, F] : A.terms()) {
      Rat ek(k % 2 == 0 ? 1 : eps);
      Poly refl0 = F.f0.compose_affine(Rat(-1), a - Rat(k));
      Poly refl1 = F.f1.compose_affine(Rat(-1), a - Rat(k));
      Poly reflp = F.fp.compose_affine(Rat(-1), a - Rat(k));
      Poly reflm = F.fm.compose_affine(Rat(-1), a - Rat(k));
      out += ek * SdElem::monomial(k, refl0, '1');  // M0 and M1 swap
      out += ek * SdElem::monomial(k, refl1, '0');
      out += (Rat(-delta) * ek) * SdElem::monomial(k, reflp, '+');
      out += (Rat(delta) * ek) * SdElem::monomial(k, reflm, '-');
    }
  }
  return out;
}

SdElem fixed_part(const AntiInvolution& sigma, const SdElem& A) {
  SdElem r = Rat(1, 2) * (A - apply_sigma(sigma, A));
  r.central() = A.central();
  return r;
}

SdElem apply_flow(const FlowAut& flow, const SdElem& A) {
  SdElem out(A.central());
  if (flow.kind == FlowAut::Kind::Theta) {
    for (const auto& [k, F] : A.terms()) out.set_term(k, F.shifted(flow.param));
    return out;
  }
  if (flow.param.is_zero()) throw std::invalid_argument("sharp flow needs alpha != 0");
  Rat ainv = Rat(1) / flow.param;
  for (const auto& [k, F] : A.terms())
    out.set_term(k, SuperMat{F.f0, F.f1, ainv * F.fp, flow.param * F.fm});
  return out;
}

namespace {

std::vector<SdElem> conjugation_panel(unsigned seed) {
  std::vector<SdElem> panel;
  SuperMat one{Poly(Rat(1)), Poly(Rat(1)), Poly(), Poly()};
  SuperMat d{Poly::x(), Poly::x(), Poly(), Poly()};
  panel.push_back(SdElem::monomial(1, one));       // t
  panel.push_back(SdElem::monomial(-1, one));      // t^{-1}
  panel.push_back(SdElem::monomial(0, d));         // D
  panel.push_back(SdElem::monomial(0, Poly::x(), '0'));
  panel.push_back(SdElem::monomial(0, Poly::x(), '1'));
  panel.push_back(SdElem::monomial(0, Poly(Rat(1)), '+'));
  panel.push_back(SdElem::monomial(0, Poly(Rat(1)), '-'));
  panel.push_back(SdElem::monomial(1, Poly(Rat(1)), '+'));
  Rng rng(seed);
  for (int i = 0; i < 12; ++i) panel.push_back(rng.random_monomial(3, 3));
  return panel;
}

}  // namespace

FlowConjugationResult flow_conjugation_check(const AntiInvolution& sigma,
                                             const FlowAut& flow, unsigned seed) {
  FlowConjugationResult res;
  AntiInvolution cand = sigma;
  FlowAut other = flow;
  if (flow.kind == FlowAut::Kind::Theta) {
    cand.a = sigma.a + flow.param;
    other = FlowAut::theta(-flow.param);
  } else if (sigma.family == SigmaFamily::AB) {
    cand.b = sigma.b * flow.param;
    other = FlowAut::sharp(Rat(1) / flow.param);
  } else {
    res.detail = "sharp flow does not normalize the " + sigma.name() + " family";
    return res;
  }
  for (const auto& X : conjugation_panel(seed)) {
    SdElem lhs = apply_sigma(sigma, apply_flow(flow, X));
    SdElem mid = apply_flow(other, apply_sigma(sigma, X));
    SdElem rhs = apply_sigma(cand, X);
    if (!(lhs == rhs) || !(mid == rhs)) {
      std::ostringstream os;
      os << "mismatch on element " << X;
      res.detail = os.str();
      return res;
    }
  }
  res.ok = true;
  res.transformed = cand;
  return res;
}

AntiInvolution defining_sigma(SubalgId id) {
  switch (id) {
    case SubalgId::Zero: return AntiInvolution::ab(Rat(-1), Rat(1));
    case SubalgId::PP: return AntiInvolution::pm_family(SigmaFamily::PP, Rat(-1));
    case SubalgId::PM: return AntiInvolution::pm_family(SigmaFamily::PM, Rat(-1));
    case SubalgId::MP: return AntiInvolution::pm_family(SigmaFamily::MP, Rat(-1));
    case SubalgId::MM: return AntiInvolution::pm_family(SigmaFamily::MM, Rat(-1));
  }
  throw std::logic_error("bad SubalgId");
}

SdElem spanning_generator(SubalgId id, char label, int n, int k) {
  if (n < 0) throw std::invalid_argument("spanning_generator: n < 0");
  Poly ffn = falling_factorial(n);
  auto refl = [&](int shift) {  // [-D - shift]_n
    return ffn.compose_affine(Rat(-1), Rat(-shift));
  };
  const int sk1 = neg_one_pow(k + 1);
  if (id == SubalgId::Zero) {
    switch (label) {
      case '0':
        if (n < 1) throw std::invalid_argument("zero-family labels 0,1 need n >= 1");
        return SdElem::monomial(k, ffn + Rat(sk1) * refl(k), '0');
      case '1':
        if (n < 1) throw std::invalid_argument("zero-family labels 0,1 need n >= 1");
        return SdElem::monomial(k, ffn + Rat(sk1) * refl(k + 1), '1');
      case 'x':
        return SdElem::monomial(k, ffn, '-') +
               Rat(sk1) * SdElem::monomial(k + 1, refl(k + 1), '+');
      default:
        throw std::invalid_argument("zero-family label must be 0, 1 or x");
    }
  }
  int eps, delta;
  family_signs(defining_sigma(id).family, &eps, &delta);
  Rat ek(eps == 1 ? 1 : neg_one_pow(k));  // eps^k
  switch (label) {
    case '.':
      return SdElem::monomial(k, ffn, '0') - SdElem::monomial(k, ek * refl(k + 1), '1');
    case '+':  // theta side, lands in the M- slot
      return SdElem::monomial(k, ffn + Rat(-delta) * ek * refl(k + 1), '-');
    case '-':  // del_theta side, lands in the M+ slot
      return SdElem::monomial(k, ffn + Rat(delta) * ek * refl(k + 1), '+');
    default:
      throw std::invalid_argument("pm-family label must be ., + or -");
  }
}

namespace {

// Whether p(-w - shift) == sign * p(w).
bool reflect_eq(const Poly& p, long shift, int sign) {
  Poly refl = p.compose_affine(Rat(-1), Rat(-shift));
  return refl == Rat(sign) * p;
}

}  // namespace

bool graded_membership(SubalgId id, const SdElem& A) {
  for (const auto& [d, comp] : A.grade_components()) {
    if (d % 2 == 0) {
      // Even component at degree j: t^j (f0 M0 + f1 M1).
      int j = d / 2;
      SuperMat F = comp.term(j);
      if (id == SubalgId::Zero) {
        if (!reflect_eq(F.f0, j, neg_one_pow(j + 1))) return false;
        if (!reflect_eq(F.f1, j + 1, neg_one_pow(j + 1))) return false;
      } else {
        int eps, delta;
        family_signs(defining_sigma(id).family, &eps, &delta);
        int ej = (j % 2 == 0) ? 1 : eps;
        // f1(w) = -eps^j f0(-w-j-1)
        Poly want = Rat(-ej) * F.f0.compose_affine(Rat(-1), Rat(-j - 1));
        if (!(F.f1 == want)) return false;
      }
    } else {
      // Odd component at degree j - 1/2: t^{j-1} gm M- + t^j gp M+.
      int j = (d + 1) / 2;
      Poly gm = comp.term(j - 1).fm;
      Poly gp = comp.term(j).fp;
      if (id == SubalgId::Zero) {
        // gp(w) = (-1)^j gm(-w-j)
        Poly want = Rat(neg_one_pow(j)) * gm.compose_affine(Rat(-1), Rat(-j));
        if (!(gp == want)) return false;
      } else {
        int eps, delta;
        family_signs(defining_sigma(id).family, &eps, &delta);
        int ejm1 = (j % 2 == 0) ? eps : 1;  // eps^{j-1}
        int ej = (j % 2 == 0) ? 1 : eps;
        if (!reflect_eq(gm, j, -delta * ejm1)) return false;
        if (!reflect_eq(gp, j + 1, delta * ej)) return false;
      }
    }
  }
  return true;
}

bool graded_membership_sigma(SubalgId id, const SdElem& A) {
  SdElem img = apply_sigma(defining_sigma(id), A);
  SdElem neg = -A;
  neg.central() = img.central();
  return img == neg;
}

}  // namespace sdop
