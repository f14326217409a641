#include "sdop/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace sdop {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int deg, Rat c) {
  Poly p;
  if (c.is_zero() || deg < 0) return p;
  p.c_.assign(deg + 1, Rat(0));
  p.c_[deg] = std::move(c);
  return p;
}

Rat Poly::eval(const Rat& w) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  // Horner: f(aw+b) built from the top coefficient down.
  Poly lin(std::vector<Rat>{b, a});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, Poly p) {
  if (s.is_zero()) return Poly();
  for (auto& c : p.c_) c *= s;
  p.trim();
  return p;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.sign() < 0 ? -c : c;
    first = false;
    if (i == 0) { os << a.str(); continue; }
    if (a != Rat(1)) os << a.str() << "*";
    os << "w";
    if (i > 1) os << "^" << i;
  }
  return os;
}

Poly falling_factorial(int l) {
  if (l < 0) throw std::invalid_argument("falling_factorial: negative order");
  Poly p(Rat(1));
  for (int i = 0; i < l; ++i)
    p = p * Poly(std::vector<Rat>{Rat(-i), Rat(1)});
  return p;
}

std::pair<Poly, Poly> parity_split(const Poly& f) {
  std::vector<Rat> even(f.coeffs().size(), Rat(0)), odd(f.coeffs().size(), Rat(0));
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    ((i % 2 == 0) ? even[i] : odd[i]) = f.coeffs()[i];
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

bool is_even_poly(const Poly& f) {
  for (size_t i = 1; i < f.coeffs().size(); i += 2)
    if (!f.coeffs()[i].is_zero()) return false;
  return true;
}

bool is_odd_poly(const Poly& f) {
  for (size_t i = 0; i < f.coeffs().size(); i += 2)
    if (!f.coeffs()[i].is_zero()) return false;
  return true;
}

Poly antidifference(const Poly& g) {
  if (g.is_zero()) return Poly();
  int d = g.degree();
  // f has degree d+1 and f(0) = 0; match coefficients of
  // f(w) - f(w+1) = -sum_k f_k sum_{j<k} C(k,j) w^j from the top down.
  std::vector<Rat> f(d + 2, Rat(0));
  // Binomial table up to d+1.
  std::vector<std::vector<Rat>> C(d + 2, std::vector<Rat>(d + 2, Rat(0)));
  for (int n = 0; n <= d + 1; ++n) {
    C[n][0] = Rat(1);
    for (int k = 1; k <= n; ++k)
      C[n][k] = C[n - 1][k - 1] + (k <= n - 1 ? C[n - 1][k] : Rat(0));
  }
  for (int j = d; j >= 0; --j) {
    Rat rhs = g.coeff(j);
    for (int k = j + 2; k <= d + 1; ++k) rhs += f[k] * C[k][j];
    // -f_{j+1} * C(j+1, j) = rhs contribution
    f[j + 1] = -rhs / Rat(static_cast<long>(j + 1));
  }
  return Poly(std::move(f));
}

}  // namespace sdop
