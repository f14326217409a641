#pragma once

#include <iosfwd>
#include <vector>

#include "sdop/poly.hpp"
#include "sdop/rat.hpp"

namespace sdop {

// Formal power series in x over Rat, truncated at a fixed order K
// (coefficients of x^0..x^K). Arithmetic is closed at the minimum order
// of the operands.
class Fps {
 public:
  Fps() : order_(0), c_(1, Rat(0)) {}
  explicit Fps(int order) : order_(order), c_(order + 1, Rat(0)) {}
  Fps(int order, std::vector<Rat> coeffs);

  static Fps constant(const Rat& c, int order);
  // e^{rate x} truncated at `order`.
  static Fps exponential(const Rat& rate, int order);

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i <= order_) ? c_[i] : Rat(0); }
  bool is_zero() const;

  Fps truncated(int new_order) const;

  Fps operator-() const;
  friend Fps operator+(const Fps& a, const Fps& b);
  friend Fps operator-(const Fps& a, const Fps& b);
  friend Fps operator*(const Fps& a, const Fps& b);
  friend Fps operator*(const Rat& s, Fps f);
  friend bool operator==(const Fps& a, const Fps& b);

  // Division. The divisor must have nonzero constant term, or both series
  // must be divisible by the same power of x (exact factor cancellation);
  // in the latter case the result order shrinks accordingly.
  friend Fps operator/(const Fps& a, const Fps& b);

  friend std::ostream& operator<<(std::ostream& os, const Fps& f);

 private:
  int order_;
  std::vector<Rat> c_;
};

// sum_i coeff_i * e^{rate_i x}, truncated at order K.
Fps exp_combination(const std::vector<std::pair<Rat, Rat>>& terms, int K);
Fps fps_sinh(const Rat& rate, int K);
Fps fps_cosh(const Rat& rate, int K);

// alpha(d/dx) applied to S, truncated at order S.order() - deg(alpha).
// Throws if the resulting order would be negative.
Fps apply_diffop(const Poly& alpha, const Fps& S);

}  // namespace sdop
