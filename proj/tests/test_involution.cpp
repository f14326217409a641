#include <doctest.h>

#include "sdop/involution.hpp"
#include "sdop/rng.hpp"

using namespace sdop;

namespace {
SdElem mono(int k, Poly f, char slot) { return SdElem::monomial(k, f, slot); }
}

TEST_CASE("generator images of Thm-style anti-involutions") {
  // sigma_{a,b}(theta) = b t del_theta
  AntiInvolution s = AntiInvolution::ab(Rat(2), Rat(3));
  CHECK(apply_sigma(s, mono(0, Poly(Rat(1)), '-')) == Rat(3) * mono(1, Poly(Rat(1)), '+'));
  // sigma_{-1,1}(D M0) = -D M0
  AntiInvolution c = AntiInvolution::ab(Rat(-1), Rat(1));
  CHECK(apply_sigma(c, mono(0, Poly::x(), '0')) == Rat(-1) * mono(0, Poly::x(), '0'));
  // sigma_{++,a} swaps M0 and M1: sigma(t M0) = t M1
  AntiInvolution pp = AntiInvolution::pm_family(SigmaFamily::PP, Rat(-1));
  CHECK(apply_sigma(pp, mono(1, Poly(Rat(1)), '0')) == mono(1, Poly(Rat(1)), '1'));
  // sigma_{++,a}(theta) = theta so the fixed part of M- vanishes
  CHECK(fixed_part(pp, mono(0, Poly(Rat(1)), '-')).is_zero());
}

TEST_CASE("involution laws on random elements") {
  Rng rng(41);
  const SigmaFamily fams[5] = {SigmaFamily::AB, SigmaFamily::PP, SigmaFamily::PM,
                               SigmaFamily::MP, SigmaFamily::MM};
  for (SigmaFamily f : fams) {
    for (int rep = 0; rep < 3; ++rep) {
      AntiInvolution sigma{f, rng.small_rat(), rng.nonzero_rat()};
      for (int i = 0; i < 25; ++i) {
        SdElem A = rng.random_elem(3, 4);
        CHECK(apply_sigma(sigma, apply_sigma(sigma, A)) == A);
      }
      for (int i = 0; i < 25; ++i) {
        bool oa = rng.next() % 2, ob = rng.next() % 2;
        SdElem A = rng.random_homogeneous(3, 4, oa), B = rng.random_homogeneous(3, 4, ob);
        SdElem lhs = apply_sigma(sigma, sd_multiply(A, B));
        SdElem rhs = Rat((oa && ob) ? -1 : 1) *
                     sd_multiply(apply_sigma(sigma, B), apply_sigma(sigma, A));
        CHECK(lhs == rhs);
      }
      // degree preservation, componentwise
      for (int i = 0; i < 10; ++i) {
        SdElem A = rng.random_monomial(3, 3);
        int d;
        REQUIRE(A.homogeneous_degree(&d));
        SdElem img = apply_sigma(sigma, A);
        int di;
        CHECK(img.homogeneous_degree(&di));
        CHECK(d == di);
      }
    }
  }
}

TEST_CASE("fixed parts satisfy sigma(e) = -e") {
  Rng rng(42);
  const SigmaFamily fams[5] = {SigmaFamily::AB, SigmaFamily::PP, SigmaFamily::PM,
                               SigmaFamily::MP, SigmaFamily::MM};
  for (SigmaFamily f : fams) {
    AntiInvolution sigma{f, rng.small_rat(), rng.nonzero_rat()};
    for (int i = 0; i < 20; ++i) {
      SdElem e = fixed_part(sigma, rng.random_elem(3, 4));
      SdElem img = apply_sigma(sigma, e);
      SdElem neg = -e;
      neg.central() = img.central();
      CHECK(img == neg);
    }
  }
  CHECK(fixed_part(defining_sigma(SubalgId::Zero), SdElem()).is_zero());
  // fixed_part of D M0 under sigma_{-1,1} is D M0 itself
  SdElem dm0 = mono(0, Poly::x(), '0');
  CHECK(fixed_part(defining_sigma(SubalgId::Zero), dm0) == dm0);
}

TEST_CASE("spanning generators") {
  // zero family, label 0, n=1, k=0: 2 D M0
  CHECK(spanning_generator(SubalgId::Zero, '0', 1, 0) == Rat(2) * mono(0, Poly::x(), '0'));
  // ++ family, label +, n=0, k=3 vanishes
  CHECK(spanning_generator(SubalgId::PP, '+', 0, 3).is_zero());
  // ++ family, label ., n=0, k=2: t^2 (M0 - M1)
  CHECK(spanning_generator(SubalgId::PP, '.', 0, 2) ==
        mono(2, Poly(Rat(1)), '0') - mono(2, Poly(Rat(1)), '1'));
  CHECK_THROWS(spanning_generator(SubalgId::Zero, '0', 0, 0));
  CHECK_THROWS(spanning_generator(SubalgId::PP, 'x', 0, 0));
}

TEST_CASE("graded membership: normal form and sigma route agree") {
  const SubalgId ids[5] = {SubalgId::Zero, SubalgId::PP, SubalgId::PM, SubalgId::MP,
                           SubalgId::MM};
  Rng rng(43);
  for (SubalgId id : ids) {
    // spanning generators are members
    for (int n = 0; n <= 3; ++n) {
      for (int k = -2; k <= 2; ++k) {
        if (id == SubalgId::Zero) {
          if (n >= 1) {
            CHECK(graded_membership(id, spanning_generator(id, '0', n, k)));
            CHECK(graded_membership(id, spanning_generator(id, '1', n, k)));
          }
          CHECK(graded_membership(id, spanning_generator(id, 'x', n, k)));
        } else {
          for (char lab : {'.', '+', '-'})
            CHECK(graded_membership(id, spanning_generator(id, lab, n, k)));
        }
      }
    }
    // t D M0 alone is not in the zero family (t M0 itself is: it equals
    // -W^1_{0,1} of the spanning set)
    CHECK_FALSE(graded_membership(SubalgId::Zero, mono(1, Poly::x(), '0')));
    CHECK(graded_membership(SubalgId::Zero, mono(1, Poly(Rat(1)), '0')));
    CHECK(graded_membership(id, SdElem()));
    // the two routes agree on random elements and random fixed parts
    for (int i = 0; i < 200; ++i) {
      SdElem A = (i % 2 == 0) ? rng.random_elem(3, 3)
                              : fixed_part(defining_sigma(id), rng.random_elem(3, 3));
      CHECK(graded_membership(id, A) == graded_membership_sigma(id, A));
    }
  }
}

TEST_CASE("flow conjugation relations") {
  Rng rng(44);
  for (int i = 0; i < 5; ++i) {
    Rat a = rng.small_rat(), b = rng.nonzero_rat(), sflow = rng.small_rat();
    Rat alpha = rng.nonzero_rat();
    auto r1 = flow_conjugation_check(AntiInvolution::ab(a, b), FlowAut::theta(sflow));
    REQUIRE(r1.ok);
    CHECK(r1.transformed.a == a + sflow);
    CHECK(r1.transformed.b == b);
    auto r2 = flow_conjugation_check(AntiInvolution::ab(a, b), FlowAut::sharp(alpha));
    REQUIRE(r2.ok);
    CHECK(r2.transformed.a == a);
    CHECK(r2.transformed.b == b * alpha);
    auto r3 = flow_conjugation_check(AntiInvolution::pm_family(SigmaFamily::PP, a),
                                     FlowAut::theta(sflow));
    REQUIRE(r3.ok);
    CHECK(r3.transformed.a == a + sflow);
  }
  // sharp does not act within the plus/minus families
  auto bad = flow_conjugation_check(AntiInvolution::pm_family(SigmaFamily::MM, Rat(0)),
                                    FlowAut::sharp(Rat(2)));
  CHECK_FALSE(bad.ok);
}

TEST_CASE("bracket closure of fixed subalgebras") {
  Rng rng(45);
  const SubalgId ids[5] = {SubalgId::Zero, SubalgId::PP, SubalgId::PM, SubalgId::MP,
                           SubalgId::MM};
  for (SubalgId id : ids) {
    AntiInvolution sigma = defining_sigma(id);
    for (int i = 0; i < 30; ++i) {
      SdElem a = fixed_part(sigma, rng.random_elem(2, 3));
      SdElem b = fixed_part(sigma, rng.random_elem(2, 3));
      SdElem br = sd_bracket(a, b);
      br.central() = Rat(0);
      CHECK(graded_membership(id, br));
    }
  }
}
