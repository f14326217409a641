#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "sdop/rat.hpp"

namespace sdop {

// Dense univariate polynomial over Rat in the variable w.
// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(int deg, Rat c = Rat(1));
  static Poly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }

  Rat eval(const Rat& w) const;

  // f(a*w + b) with a = ±1 handled exactly for any polynomial.
  Poly compose_affine(const Rat& a, const Rat& b) const;
  Poly shifted(const Rat& b) const { return compose_affine(Rat(1), b); }   // f(w+b)
  Poly reflected(const Rat& b) const { return compose_affine(Rat(-1), b); } // f(-w+b)

  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, Poly p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rat> c_;
};

// [x]_l = x(x-1)...(x-l+1); l = 0 gives the constant 1.
Poly falling_factorial(int l);

// f = even + odd with even(-w) = even(w), odd(-w) = -odd(w).
std::pair<Poly, Poly> parity_split(const Poly& f);

bool is_even_poly(const Poly& f);
bool is_odd_poly(const Poly& f);

// The unique f with f(w) - f(w+1) = g(w) and f(0) = 0.
Poly antidifference(const Poly& g);

}  // namespace sdop
