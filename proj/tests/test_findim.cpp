#include <doctest.h>

#include "sdop/findim.hpp"

using namespace sdop;

namespace {
SuperPoly xv(int i, int j) { return SuperPoly::variable({false, i, j}); }
SuperPoly xiv(int i, int j) { return SuperPoly::variable({true, i, j}); }
}

TEST_CASE("first-order operators") {
  // (sum_j xi^1_j d/dx^1_j) x^1_1 = xi^1_1
  FirstOrderOp op;
  op.terms.push_back({Rat(1), {true, 1, 1}, {false, 1, 1}});
  op.terms.push_back({Rat(1), {true, 1, 2}, {false, 1, 2}});
  CHECK(op.apply(xv(1, 1)) == xiv(1, 1));
  // d/dxi on a monomial without that xi
  FirstOrderOp op2;
  op2.terms.push_back({Rat(1), {false, 1, 1}, {true, 2, 1}});
  CHECK(op2.apply(xv(1, 1)).is_zero());
  // Cartan counts xi degree
  FirstOrderOp cartan;
  cartan.terms.push_back({Rat(1), {true, 1, 1}, {true, 1, 1}});
  cartan.terms.push_back({Rat(1), {true, 1, 2}, {true, 1, 2}});
  SuperPoly m = xiv(1, 1) * xiv(1, 2);
  CHECK(cartan.apply(m) == Rat(2) * m);
}

TEST_CASE("grassmann sign conventions") {
  SuperPoly a = xiv(1, 1), b = xiv(1, 2);
  SuperPoly ab = a * b, ba = b * a;
  CHECK(ab == Rat(-1) * ba);
  CHECK((a * a).is_zero());
  // x commutes with everything
  CHECK(xv(1, 1) * a == a * xv(1, 1));
}

TEST_CASE("radical operator shapes") {
  // B1 at n=2: 2 ops of the first shape, 1 of the second
  auto b1 = radical_ops(BorelKind::B1, 2, 2);
  CHECK(b1.size() == 3);
  auto b2 = radical_ops(BorelKind::B2, 1, 1);
  CHECK(b2.size() == 1);
  auto bp = radical_ops(BorelKind::BPrime, 1, 1);
  CHECK(bp.empty());
  CHECK_THROWS(radical_ops(BorelKind::B1, 1, 2));
}

TEST_CASE("minors") {
  // i=1, r=1: xi^1_1
  CHECK(findim_minor(1, 1, 2, 2) == xiv(1, 1));
  // i=2, r=2: x^1_1 xi^2_2 - x^1_2 xi^2_1
  SuperPoly expect = xv(1, 1) * xiv(2, 2);
  expect -= xv(1, 2) * xiv(2, 1);
  CHECK(findim_minor(2, 2, 2, 2) == expect);
  CHECK(findim_minor(3, 0, 2, 2) == SuperPoly::one());
  // repeated odd rows: det X^1_2 = 2 xi^1_1 xi^1_2
  CHECK(findim_minor(1, 2, 2, 2) == Rat(2) * (xiv(1, 1) * xiv(1, 2)));
}

TEST_CASE("hwv annihilation across small partitions") {
  const int n = 2, l = 2;
  for (const auto& parts : std::vector<std::vector<long>>{
           {}, {1}, {2}, {1, 1}, {3}, {2, 1}, {2, 2}, {4}, {3, 1}}) {
    Partition lam{parts};
    for (BorelKind borel : {BorelKind::B1, BorelKind::B2}) {
      SuperPoly v = findim_hwv(lam, borel, n, l);
      CHECK_FALSE(v.is_zero());
      auto ops = radical_ops(borel, n, l);
      for (auto& op : radical_ops(BorelKind::BPrime, n, l)) ops.push_back(op);
      INFO("borel ", borel == BorelKind::B1 ? 1 : 2, " lambda size ", lam.size());
      CHECK(annihilation_check(v, ops));
    }
  }
  // single-application counterexample: x^1_1 is not B1-highest at n=l=1
  auto ops1 = radical_ops(BorelKind::B1, 1, 1);
  CHECK_FALSE(annihilation_check(xv(1, 1), ops1));
  CHECK(annihilation_check(SuperPoly::one(), ops1));
}

TEST_CASE("phi weights") {
  // lambda = (1), n = 1
  Partition one{{1}};
  GlnnWeight w1 = phi_weight(one, BorelKind::B1, 1);
  CHECK(w1.xi_deg == std::vector<long>{1});
  CHECK(w1.x_deg == std::vector<long>{0});
  GlnnWeight w2 = phi_weight(one, BorelKind::B2, 1);
  CHECK(w2.xi_deg == std::vector<long>{0});
  CHECK(w2.x_deg == std::vector<long>{1});
  Partition zero{{}};
  GlnnWeight wz = phi_weight(zero, BorelKind::B1, 2);
  CHECK(wz.xi_deg == std::vector<long>{0, 0});
  CHECK(wz.x_deg == std::vector<long>{0, 0});
}

TEST_CASE("hwv worked examples at n = l = 1") {
  CHECK(findim_hwv(Partition{{1}}, BorelKind::B1, 1, 1) == xiv(1, 1));
  CHECK(findim_hwv(Partition{{1}}, BorelKind::B2, 1, 1) == xv(1, 1));
  // lambda = (2): xi^1_1 x^1_1 under B1
  CHECK(findim_hwv(Partition{{2}}, BorelKind::B1, 1, 1) == xiv(1, 1) * xv(1, 1));
}

TEST_CASE("brute-force decomposition") {
  // n=l=1, k=1: one component, dim 2
  DecomposeReport r11 = decompose_bruteforce(1, 1, 1);
  CHECK(r11.singular_count == 1);
  CHECK(r11.expected_count == 1);
  CHECK(r11.space_dim == 2);
  CHECK(r11.closure_dim_sum == 2);
  CHECK(r11.weights_match);
  // k=0 is the trivial component
  DecomposeReport r0 = decompose_bruteforce(1, 1, 0);
  CHECK(r0.singular_count == 1);
  CHECK(r0.space_dim == 1);
  // n=2, l=1, k=2: lambda = (2) only; super dimension 8
  DecomposeReport r212 = decompose_bruteforce(2, 1, 2);
  CHECK(r212.expected_count == 1);
  CHECK(r212.singular_count == 1);
  CHECK(r212.space_dim == 8);
  CHECK(r212.closure_dim_sum == 8);
  CHECK(r212.weights_match);
  // both Borel choices agree on counts
  for (int k = 0; k <= 3; ++k) {
    DecomposeReport a = decompose_bruteforce(2, 2, k, BorelKind::B1);
    DecomposeReport b = decompose_bruteforce(2, 2, k, BorelKind::B2);
    CHECK(a.singular_count == a.expected_count);
    CHECK(b.singular_count == b.expected_count);
    CHECK(a.weights_match);
    CHECK(b.weights_match);
    CHECK(a.closure_dim_sum == a.space_dim);
    CHECK(b.closure_dim_sum == b.space_dim);
  }
}

TEST_CASE("dual actions commute") {
  // the gl(n|n)-type operators commute with the gl(l)-type operators
  const int n = 2, l = 2;
  auto glnn = radical_ops(BorelKind::B1, n, l);
  for (auto& op : lowering_ops(BorelKind::B1, n, l)) glnn.push_back(op);
  auto gll = radical_ops(BorelKind::BPrime, n, l);
  for (auto& op : lowering_ops(BorelKind::BPrime, n, l)) gll.push_back(op);
  std::vector<SuperPoly> probes = {
      xiv(1, 1), xv(2, 2), xiv(1, 1) * xv(1, 2), xiv(2, 1) * xiv(1, 2) * xv(1, 1),
      findim_hwv(Partition{{2, 1}}, BorelKind::B1, n, l)};
  for (const auto& a : glnn)
    for (const auto& b : gll)
      for (const auto& f : probes)
        CHECK(a.apply(b.apply(f)) == b.apply(a.apply(f)));
}

TEST_CASE("determinant product identities") {
  CHECK(det_identity_check(1, 2, 2));
  CHECK(det_identity_check(0, 1, 1));
  CHECK(det_identity_check(0, 2, 3));
  CHECK(det_identity_check(1, 2, 3, 0));
  CHECK(det_identity_check(1, 3, 3, 1));  // corollary shape with one even row
  CHECK_THROWS(det_identity_check(2, 2, 3));
}
