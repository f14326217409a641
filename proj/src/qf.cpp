#include "sdop/qf.hpp"

#include <stdexcept>

#include "sdop/duality.hpp"
#include "sdop/linalg.hpp"

namespace sdop {

bool qf_check_zero(const XiSpec& xi, const Poly& alpha) {
  int K = std::min(xi.delta0.order(), xi.delta1.order());
  Fps series = xi.delta0 + xi.delta1 * Fps::exponential(Rat(1, 2), K) -
               Fps::constant(Rat(1, 2) * xi.c, K);
  return apply_diffop(alpha, series).is_zero();
}

bool ann_pair_parity_ok(SubalgId id, const AnnPair& pair, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  switch (id) {
    case SubalgId::PP:
      if (!is_odd_poly(pair.alpha)) return fail("alpha must be odd for ++");
      if (!is_even_poly(pair.beta)) return fail("beta must be even for ++");
      return true;
    case SubalgId::PM:
      if (!is_even_poly(pair.alpha)) return fail("alpha must be even for +-");
      if (!is_odd_poly(pair.beta)) return fail("beta must be odd for +-");
      return true;
    case SubalgId::MP:
      if (!is_even_poly(pair.alpha) || !is_even_poly(pair.beta))
        return fail("alpha and beta must be even for -+");
      return true;
    case SubalgId::MM:
      if (!is_odd_poly(pair.alpha) || !is_odd_poly(pair.beta))
        return fail("alpha and beta must be odd for --");
      return true;
    default:
      return fail("zero family takes a single alpha");
  }
}

bool qf_check_pm(const XiSpec& xi, const AnnPair& pair) {
  std::string why;
  if (!ann_pair_parity_ok(xi.algebra, pair, &why)) throw std::invalid_argument(why);
  int K = std::min(xi.delta0.order(), xi.delta1.order());
  if (!apply_diffop(pair.beta, xi.delta0).is_zero()) return false;
  Fps ep = Fps::exponential(Rat(1, 2), K), em = Fps::exponential(Rat(-1, 2), K);
  Fps series = (ep + em) * xi.delta0 + (ep - em) * xi.delta1 -
               Fps::constant(Rat(2) * xi.c, K);
  return apply_diffop(pair.alpha, series).is_zero();
}

AnnSearchResult fock_annihilator_search(const FockState& v, int degree_bound) {
  AnnSearchResult res;
  HwvCheck hw = verify_hwv(v, RaisingSet::OSP);
  if (!hw.ok) {
    res.detail = "NOT_HW: raising operator " + hw.offending + " does not annihilate";
    return res;
  }
  res.is_hw = true;

  // X_h = t^{-1} h(D) M- + h(-D) M+ for h = w^0..w^degree_bound; collect the
  // images X_h v as columns and take the exact nullspace.
  std::vector<FockState> images;
  std::map<Monomial, size_t> rows;
  for (int d = 0; d <= degree_bound; ++d) {
    Poly h = Poly::monomial(d);
    SdElem xh = SdElem::monomial(-1, h, '-') +
                SdElem::monomial(0, h.compose_affine(Rat(-1), Rat(0)), '+');
    FockState img = act_sd(xh, v);
    if (img.drops > 0) {
      res.detail = "cutoff too small for a reliable action";
      return res;
    }
    for (const auto& [m, c] : img.terms) rows.try_emplace(m, rows.size());
    images.push_back(std::move(img));
  }
  RatMat m(rows.size(), RatRow(degree_bound + 1, Rat(0)));
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& [mono, c] : images[d].terms) m[rows[mono]][d] = c;
  std::vector<RatRow> ker = nullspace(m, degree_bound + 1);
  if (ker.empty()) {
    res.detail = "no annihilating polynomial within the degree bound";
    return res;
  }
  // Minimal-degree monic element of the nullspace: eliminate top
  // coefficients across the basis.
  RatMat rows_hi;  // coefficients listed from degree_bound down to 0
  for (const auto& k : ker) {
    RatRow rev(k.rbegin(), k.rend());
    rows_hi.push_back(std::move(rev));
  }
  rref(rows_hi);
  // The last nonzero row has the lowest degree.
  for (auto it = rows_hi.rbegin(); it != rows_hi.rend(); ++it) {
    bool nz = false;
    for (const auto& c : *it) nz = nz || !c.is_zero();
    if (!nz) continue;
    RatRow coeffs(it->rbegin(), it->rend());
    Poly alpha{std::vector<Rat>(coeffs.begin(), coeffs.end())};
    Rat lead = alpha.coeff(alpha.degree());
    res.alpha = (Rat(1) / lead) * alpha;
    return res;
  }
  res.detail = "degenerate nullspace";
  return res;
}

XiSpec xi_from_module(const FockState& v, int order) {
  XiSpec xi;
  xi.algebra = SubalgId::Zero;
  xi.c = Rat(v.colors);
  std::vector<Rat> d0(order + 1, Rat(0)), d1(order + 1, Rat(0));
  Rat fact(1);
  for (int n = 1; n <= order; ++n) {
    fact *= Rat(n);
    if (n % 2 == 0) continue;  // sinh has odd coefficients only
    SdElem a0 = SdElem::monomial(0, Poly::monomial(n), '0');
    SdElem a1 = SdElem::monomial(0, Poly::monomial(n).shifted(Rat(1, 2)), '1');
    auto e0 = sd_eigenvalue(a0, v), e1 = sd_eigenvalue(a1, v);
    if (!e0 || !e1) throw std::runtime_error("xi_from_module: not an eigenvector");
    d0[n] = -*e0 / fact;
    d1[n] = -*e1 / fact;
  }
  xi.delta0 = Fps(order, std::move(d0));
  xi.delta1 = Fps(order, std::move(d1));
  return xi;
}

}  // namespace sdop
