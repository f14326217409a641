#include <doctest.h>

#include "sdop/fps.hpp"
#include "sdop/poly.hpp"
#include "sdop/rat.hpp"
#include "sdop/rng.hpp"

using namespace sdop;

TEST_CASE("rationals reduce and serialize") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6).str() == "1/2");
  CHECK(Rat::parse("7/3") == Rat(7, 3));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(0) == Poly(Rat(1)));
  // [w]_2 = w^2 - w
  CHECK(falling_factorial(2) == Poly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
  CHECK(falling_factorial(3).eval(Rat(3)) == Rat(6));
  // [n]_l = 0 for integer n in [0, l-1], l <= 10
  for (int l = 1; l <= 10; ++l)
    for (int n = 0; n < l; ++n)
      CHECK(falling_factorial(l).eval(Rat(n)) == Rat(0));
}

TEST_CASE("parity split") {
  Poly f(std::vector<Rat>{Rat(0), Rat(1), Rat(1)});  // w^2 + w
  auto [e, o] = parity_split(f);
  CHECK(e == Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
  CHECK(o == Poly::x());
  auto [ez, oz] = parity_split(Poly());
  CHECK(ez.is_zero());
  CHECK(oz.is_zero());
  // w^3 - 3w + 5 -> (5, w^3 - 3w)
  Poly g(std::vector<Rat>{Rat(5), Rat(-3), Rat(0), Rat(1)});
  auto [ge, go] = parity_split(g);
  CHECK(ge == Poly(Rat(5)));
  CHECK(go == Poly(std::vector<Rat>{Rat(0), Rat(-3), Rat(0), Rat(1)}));

  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    Poly h = rng.poly(8);
    auto [he, ho] = parity_split(h);
    CHECK(he + ho == h);
    for (int t = 0; t < 20; ++t) {
      Rat w = rng.small_rat(9, 5);
      CHECK(he.eval(-w) == he.eval(w));
      CHECK(ho.eval(-w) == -ho.eval(w));
    }
  }
}

TEST_CASE("antidifference") {
  CHECK(antidifference(Poly(Rat(-1))) == Poly::x());
  CHECK(antidifference(Poly()).is_zero());
  // f(w) - f(w+1) = -2w - 1 has f = w^2
  CHECK(antidifference(Poly(std::vector<Rat>{Rat(-1), Rat(-2)})) == Poly::monomial(2));
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    Poly g = rng.poly(8);
    Poly f = antidifference(g);
    CHECK(f - f.shifted(Rat(1)) == g);
    CHECK(f.eval(Rat(0)) == Rat(0));
  }
}

TEST_CASE("series from exponential sums") {
  // sinh: x + x^3/6 to order 3
  Fps s = exp_combination({{Rat(1, 2), Rat(1)}, {Rat(-1, 2), Rat(-1)}}, 3);
  CHECK(s.coeff(0) == Rat(0));
  CHECK(s.coeff(1) == Rat(1));
  CHECK(s.coeff(2) == Rat(0));
  CHECK(s.coeff(3) == Rat(1, 6));
  CHECK(exp_combination({{Rat(1), Rat(0)}}, 5) == Fps::constant(Rat(1), 5));
  // (e^{2x} - 1)/(e^x - 1) = e^x + 1 = 2 + x + ...
  Fps num = Fps::exponential(Rat(2), 4) - Fps::constant(Rat(1), 4);
  Fps den = Fps::exponential(Rat(1), 4) - Fps::constant(Rat(1), 4);
  Fps q = num / den;
  CHECK(q.coeff(0) == Rat(2));
  CHECK(q.coeff(1) == Rat(1));
  CHECK(q == Fps::exponential(Rat(1), q.order()) + Fps::constant(Rat(1), q.order()));
}

TEST_CASE("apply_diffop") {
  CHECK(apply_diffop(Poly::x(), Fps::constant(Rat(5), 6)).is_zero());
  Fps s = Fps::exponential(Rat(3), 8);
  CHECK(apply_diffop(Poly(Rat(1)), s) == s);
  // w^2 on x^3 gives 6x
  Fps x3(5);
  x3 = x3 + Fps(5, std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});
  Fps d = apply_diffop(Poly::monomial(2), x3);
  CHECK(d.coeff(1) == Rat(6));
  CHECK(d.coeff(0) == Rat(0));
  CHECK_THROWS(apply_diffop(Poly::monomial(4), Fps(2)));
}

TEST_CASE("series ring laws at order 12") {
  Rng rng(23);
  auto random_fps = [&](int K) {
    std::vector<Rat> c(K + 1);
    for (auto& x : c) x = rng.small_rat();
    return Fps(K, std::move(c));
  };
  for (int i = 0; i < 12; ++i) {
    Fps a = random_fps(12), b = random_fps(12), c = random_fps(12);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}
