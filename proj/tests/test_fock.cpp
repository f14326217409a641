#include <doctest.h>

#include "sdop/embed.hpp"
#include "sdop/fock.hpp"
#include "sdop/rng.hpp"

using namespace sdop;

namespace {

FockState vac(int l = 1, int cut = 8) { return FockState::vacuum(l, cut); }

Mode psip(int color, int m) { return {Species::PsiPlus, color, 2 * m}; }
Mode psim(int color, int m) { return {Species::PsiMinus, color, 2 * m}; }
Mode gamp(int color, int twice_r) { return {Species::GamPlus, color, twice_r}; }
Mode gamm(int color, int twice_r) { return {Species::GamMinus, color, twice_r}; }

}  // namespace

TEST_CASE("vacuum axioms and CAR/CCR basics") {
  FockState v = vac();
  CHECK(apply_mode(psip(1, 0), v).is_zero());
  CHECK_FALSE(apply_mode(gamp(1, -1), v).is_zero());
  // psi+_0 psi-_0 |0> = |0>
  FockState w = apply_mode(psip(1, 0), apply_mode(psim(1, 0), v));
  CHECK(w == v);
  // psi-_0 is a zero-energy creation operator
  CHECK(apply_mode(psim(1, 0), v).max_twice_energy() == 0);
}

TEST_CASE("CAR/CCR as operator identities on a panel") {
  // [psi+_m, psi-_n]_+ = delta_{m+n}, [gam+_r, gam-_s] = delta_{r+s},
  // same-sign pairs (anti)commute; cross-species commute. Checked on all
  // states of energy <= 3/2 at l = 2.
  const int l = 2, cut = 10;
  std::vector<FockState> panel;
  FockState v0 = vac(l, cut);
  panel.push_back(v0);
  std::vector<Mode> creators;
  for (int p = 1; p <= l; ++p) {
    creators.push_back(psim(p, 0));
    creators.push_back(psip(p, -1));
    creators.push_back(psim(p, -1));
    creators.push_back(gamp(p, -1));
    creators.push_back(gamm(p, -1));
    creators.push_back(gamp(p, -3));
  }
  for (const Mode& a : creators) {
    panel.push_back(apply_mode(a, v0));
    for (const Mode& b : creators) {
      FockState s = apply_mode(a, apply_mode(b, v0));
      if (!s.is_zero() && s.drops == 0) panel.push_back(s);
    }
  }
  std::vector<Mode> all;
  for (int p = 1; p <= l; ++p)
    for (int m = -1; m <= 1; ++m) {
      all.push_back(psip(p, m));
      all.push_back(psim(p, m));
      all.push_back(gamp(p, 2 * m - 1));
      all.push_back(gamm(p, 2 * m - 1));
    }
  auto commutator_delta = [&](const Mode& a, const Mode& b) -> Rat {
    if (a.color != b.color) return Rat(0);
    if (a.sp == Species::PsiPlus && b.sp == Species::PsiMinus && a.idx + b.idx == 0)
      return Rat(1);
    if (a.sp == Species::PsiMinus && b.sp == Species::PsiPlus && a.idx + b.idx == 0)
      return Rat(1);
    if (a.sp == Species::GamPlus && b.sp == Species::GamMinus && a.idx + b.idx == 0)
      return Rat(1);
    if (a.sp == Species::GamMinus && b.sp == Species::GamPlus && a.idx + b.idx == 0)
      return Rat(-1);
    return Rat(0);
  };
  for (const Mode& a : all) {
    for (const Mode& b : all) {
      bool anti = a.fermionic() && b.fermionic();
      for (const FockState& s : panel) {
        FockState lhs = apply_mode(a, apply_mode(b, s));
        if (anti)
          lhs += apply_mode(b, apply_mode(a, s));
        else
          lhs -= apply_mode(b, apply_mode(a, s));
        if (lhs.drops) continue;
        FockState rhs = commutator_delta(a, b) * s;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gl action worked examples") {
  FockState v = vac();
  CHECK(act_gl_entry(0, 0, v).is_zero());
  // E_{1/2,1/2} on gam+_{-1/2}|0> has eigenvalue +1 (normal-ordering sign
  // fixed by the bracket suite)
  FockState g = apply_mode(gamp(1, -1), v);
  CHECK(act_gl_entry(1, 1, g) == g);
  // E_{-1,0}|0> = 0
  CHECK(act_gl_entry(-2, 0, v).is_zero());
  // E_{00} on psi-_0|0> has eigenvalue -1
  FockState pm0 = apply_mode(psim(1, 0), v);
  CHECK(act_gl_entry(0, 0, pm0) == Rat(-1) * pm0);
  // E_{1/2,3/2} maps gam+_{-3/2}|0> to gam+_{-1/2}|0>
  FockState g32 = apply_mode(gamp(1, -3), v);
  CHECK(act_gl_entry(1, 3, g32) == g);
}

TEST_CASE("act_gl matches gl_bracket with central charge l") {
  Rng rng(71);
  for (int l = 1; l <= 2; ++l) {
    FockState v0 = vac(l, 8);
    std::vector<FockState> panel{v0, apply_mode(psim(1, 0), v0),
                                 apply_mode(gamp(1, -1), v0),
                                 apply_mode(psip(1, -1), apply_mode(psim(1, 0), v0))};
    for (int i = 0; i < 30; ++i) {
      HalfIdx a = static_cast<HalfIdx>(rng.range(-3, 3));
      HalfIdx b = static_cast<HalfIdx>(rng.range(-3, 3));
      HalfIdx c = static_cast<HalfIdx>(rng.range(-3, 3));
      HalfIdx d = static_cast<HalfIdx>(rng.range(-3, 3));
      WinMat A = WinMat::unit(8, a, b), B = WinMat::unit(8, c, d);
      int sign = (((a - b) % 2) && ((c - d) % 2)) ? -1 : 1;
      WinMat br = gl_bracket(A, B);
      for (const auto& s : panel) {
        FockState lhs =
            act_gl_entry(a, b, act_gl_entry(c, d, s)) -
            Rat(sign) * act_gl_entry(c, d, act_gl_entry(a, b, s));
        FockState rhs = act_winmat(br, s);
        if (lhs.drops || rhs.drops) continue;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("field components agree with the windowed embedding route") {
  // act_field goes through the free-field bilinears; the second route
  // builds the windowed matrix of the same element and acts entrywise.
  FockState v0 = vac(2, 8);
  std::vector<FockState> panel{v0, apply_mode(psim(2, 0), v0),
                               apply_mode(gamp(1, -1), v0),
                               apply_mode(psip(1, -1), v0)};
  EmbedParams p{Rat(0), 10};
  std::vector<FieldOpId> ops;
  for (int n = 0; n <= 2; ++n)
    for (int k = -1; k <= 1; ++k)
      for (char lab : {'0', '1', '+', '-'})
        ops.push_back({FieldOpId::Alg::SD, lab, n, k});
  for (int n = 0; n <= 1; ++n)
    for (int k = -1; k <= 1; ++k) {
      ops.push_back({FieldOpId::Alg::SD0, 'x', n, k});
      if (n >= 1) {
        ops.push_back({FieldOpId::Alg::SD0, '0', n, k});
        ops.push_back({FieldOpId::Alg::SD0, '1', n, k});
      }
      for (char lab : {'.', '+', '-'}) {
        ops.push_back({FieldOpId::Alg::SDPP, lab, n, k});
        ops.push_back({FieldOpId::Alg::SDMM, lab, n, k});
      }
    }
  for (const auto& op : ops) {
    SdElem elem = field_elem(op);
    WinMat img = phi_s(p, elem);
    for (const auto& s : panel) {
      FockState lhs = act_field(op, s);
      FockState rhs = act_winmat(img, s);
      if (lhs.drops || rhs.drops) continue;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("spec worked field examples") {
  FockState v = vac();
  FockState g = apply_mode(gamp(1, -1), v);
  // J^{0,0}_0 on a pure boson state vanishes
  CHECK(act_field({FieldOpId::Alg::SD, '0', 0, 0}, g).is_zero());
  // zero-family Cartan annihilates the vacuum
  CHECK(act_field({FieldOpId::Alg::SD0, '0', 1, 0}, v).is_zero());
  // the ++ family label + at n = 0 vanishes identically as an element
  CHECK(field_elem({FieldOpId::Alg::SDPP, '+', 0, 3}).is_zero());
  CHECK(act_field({FieldOpId::Alg::SDPP, '+', 0, 3}, g).is_zero());
}

TEST_CASE("horizontal actions") {
  FockState v = vac(2, 8);
  // normal-ordered charges kill the vacuum
  CHECK(act_horiz_gl(1, 1, v).is_zero());
  CHECK(act_horiz_gl(1, 2, v).is_zero());
  // e^{pp}(0)|0> = 1/2 |0>
  CHECK(act_so_e_zero(1, 1, v) == Rat(1, 2) * v);
  CHECK(act_so_e_zero(1, 2, v).is_zero());
  // the raising root vector kills the vacuum; the lowering one creates the
  // two-mode zero-energy state psi-_0 psi-_0 (recomputed oracle values)
  CHECK(act_so_e_plus(1, 2, v).is_zero());
  FockState two = apply_mode({Species::PsiMinus, 1, 0},
                             apply_mode({Species::PsiMinus, 2, 0}, v));
  CHECK(act_so_e_minus(1, 2, v) == two);
  // antisymmetry and vanishing diagonal
  FockState probe = apply_mode({Species::PsiMinus, 2, 0}, v);
  CHECK((act_so_e_plus(1, 2, probe) + act_so_e_plus(2, 1, probe)).is_zero());
  CHECK(act_so_e_plus(1, 1, probe).is_zero());
  // charge bookkeeping: gam+ carries +1, psi- carries -1
  FockState g = apply_mode(gamp(1, -1), v);
  CHECK(act_horiz_gl(1, 1, g) == g);
  FockState f = apply_mode(psim(2, 0), v);
  CHECK(act_horiz_gl(2, 2, f) == Rat(-1) * f);
}

TEST_CASE("horizontal gl commutes with the algebra fields") {
  FockState v0 = vac(2, 8);
  std::vector<FockState> panel{v0, apply_mode(psim(1, 0), v0), apply_mode(gamp(2, -1), v0)};
  std::vector<FieldOpId> ops = {{FieldOpId::Alg::SD, '0', 1, 0},
                                {FieldOpId::Alg::SD, '-', 0, 1},
                                {FieldOpId::Alg::SD0, 'x', 0, 0},
                                {FieldOpId::Alg::SDPP, '.', 1, -1},
                                {FieldOpId::Alg::SDMM, '-', 0, 0}};
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      for (const auto& op : ops) {
        for (const auto& s : panel) {
          FockState lhs = act_horiz_gl(p, q, act_field(op, s));
          FockState rhs = act_field(op, act_horiz_gl(p, q, s));
          if (lhs.drops || rhs.drops) continue;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("so(2l) horizontal commutes with the zero-family fields") {
  FockState v0 = vac(2, 9);
  std::vector<FockState> panel{v0, apply_mode(psim(1, 0), v0), apply_mode(gamp(2, -1), v0)};
  std::vector<FieldOpId> ops = {{FieldOpId::Alg::SD0, '0', 1, 0},
                                {FieldOpId::Alg::SD0, '1', 1, 1},
                                {FieldOpId::Alg::SD0, 'x', 0, -1}};
  auto so_ops = {+1, -1, 0};
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      for (int kind : so_ops) {
        auto horiz = [&](const FockState& s) {
          if (kind > 0) return act_so_e_plus(p, q, s);
          if (kind < 0) return act_so_e_minus(p, q, s);
          return act_so_e_zero(p, q, s);
        };
        for (const auto& op : ops) {
          for (const auto& s : panel) {
            FockState lhs = horiz(act_field(op, s));
            FockState rhs = act_field(op, horiz(s));
            if (lhs.drops || rhs.drops) continue;
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("Taylor-coefficient relation for the zero-family fields") {
  // phi_0 of the zero-family spanning element is the [-j]_n-weighted sum of
  // orthosymplectic generator combinations E_{j-k,j} + (-1)^{k+1} E_{-j,k-j}.
  EmbedParams p{Rat(0), 8};
  for (int n = 1; n <= 2; ++n) {
    for (int k = -1; k <= 1; ++k) {
      WinMat lhs = phi_s(p, field_elem({FieldOpId::Alg::SD0, '0', n, k}));
      WinMat rhs(8);
      Poly ff = falling_factorial(n);
      for (int j = -9; j <= 9; ++j) {
        Rat c = ff.eval(Rat(-j));
        if (c.is_zero()) continue;
        rhs.add(2 * (j - k), 2 * j, c);
        rhs.add(-2 * j, 2 * (k - j), Rat(neg_one_pow(k + 1)) * c);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("central charge worked instance") {
  // [t M0, t^{-1} M0] = C acts as l * Id on any state.
  for (int l = 1; l <= 2; ++l) {
    FockState v0 = vac(l, 8);
    std::vector<FockState> panel{v0, apply_mode(psim(1, 0), v0),
                                 apply_mode(gamp(l, -1), v0)};
    SdElem X = Rat(-1) * SdElem::monomial(1, Poly(Rat(1)), '0');
    SdElem Y = Rat(-1) * SdElem::monomial(-1, Poly(Rat(1)), '0');
    for (const auto& s : panel) {
      FockState comm = act_sd(X, act_sd(Y, s)) - act_sd(Y, act_sd(X, s));
      REQUIRE(comm.drops == 0);
      CHECK(comm == Rat(l) * s);
    }
  }
}

TEST_CASE("weights") {
  FockState v = vac(1, 8);
  WeightRecord w0 = weight_of(v);
  REQUIRE(w0.ok);
  CHECK(w0.gl_diag.empty());
  CHECK(w0.twice_energy == 0);
  FockState g = apply_mode(gamp(1, -1), v);
  WeightRecord wg = weight_of(g);
  REQUIRE(wg.ok);
  CHECK(wg.gl_diag.at(1) == Rat(1));
  CHECK(wg.twice_energy == 1);
  FockState f = apply_mode(psim(1, 0), v);
  WeightRecord wf = weight_of(f);
  REQUIRE(wf.ok);
  CHECK(wf.gl_diag.at(0) == Rat(-1));
  // non-eigenvector fails
  FockState mixed = g + f;
  CHECK_FALSE(weight_of(mixed).ok);
}
