#include "sdop/fps.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sdop {

Fps::Fps(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order_ < 0) throw std::invalid_argument("fps: negative order");
  c_.resize(order_ + 1, Rat(0));
}

Fps Fps::constant(const Rat& c, int order) {
  Fps f(order);
  f.c_[0] = c;
  return f;
}

Fps Fps::exponential(const Rat& rate, int order) {
  Fps f(order);
  Rat term(1);
  f.c_[0] = term;
  for (int n = 1; n <= order; ++n) {
    term = term * rate / Rat(n);
    f.c_[n] = term;
  }
  return f;
}

bool Fps::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Fps Fps::truncated(int new_order) const {
  if (new_order < 0) throw std::invalid_argument("fps: negative truncation");
  Fps r(new_order);
  for (int i = 0; i <= std::min(new_order, order_); ++i) r.c_[i] = c_[i];
  return r;
}

Fps Fps::operator-() const {
  Fps r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Fps operator+(const Fps& a, const Fps& b) {
  int K = std::min(a.order_, b.order_);
  Fps r(K);
  for (int i = 0; i <= K; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Fps operator-(const Fps& a, const Fps& b) {
  int K = std::min(a.order_, b.order_);
  Fps r(K);
  for (int i = 0; i <= K; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Fps operator*(const Fps& a, const Fps& b) {
  int K = std::min(a.order_, b.order_);
  Fps r(K);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; i + j <= K; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

Fps operator*(const Rat& s, Fps f) {
  for (auto& c : f.c_) c *= s;
  return f;
}

bool operator==(const Fps& a, const Fps& b) {
  int K = std::min(a.order_, b.order_);
  for (int i = 0; i <= K; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Fps operator/(const Fps& a, const Fps& b) {
  if (b.is_zero()) throw std::domain_error("fps: division by zero series");
  // Exact cancellation of a common power of x.
  int v = 0;
  while (v <= b.order_ && b.c_[v].is_zero()) ++v;
  if (v > 0) {
    for (int i = 0; i < v; ++i)
      if (i <= a.order_ && !a.c_[i].is_zero())
        throw std::domain_error("fps: division would have a pole at 0");
    int K = std::min(a.order_, b.order_) - v;
    Fps na(K), nb(K);
    for (int i = 0; i <= K; ++i) {
      na.c_[i] = a.coeff(i + v);
      nb.c_[i] = b.coeff(i + v);
    }
    return na / nb;
  }
  int K = std::min(a.order_, b.order_);
  Fps q(K);
  for (int n = 0; n <= K; ++n) {
    Rat acc = a.c_[n];
    for (int i = 0; i < n; ++i) acc -= q.c_[i] * b.c_[n - i];
    q.c_[n] = acc / b.c_[0];
  }
  return q;
}

std::ostream& operator<<(std::ostream& os, const Fps& f) {
  os << "[";
  for (int i = 0; i <= f.order(); ++i) {
    if (i) os << ", ";
    os << f.coeff(i).str();
  }
  return os << "]";
}

Fps exp_combination(const std::vector<std::pair<Rat, Rat>>& terms, int K) {
  Fps r(K);
  for (const auto& [coeff, rate] : terms) r = r + coeff * Fps::exponential(rate, K);
  return r;
}

Fps fps_sinh(const Rat& rate, int K) {
  return exp_combination({{Rat(1, 2), rate}, {Rat(-1, 2), -rate}}, K);
}

Fps fps_cosh(const Rat& rate, int K) {
  return exp_combination({{Rat(1, 2), rate}, {Rat(1, 2), -rate}}, K);
}

Fps apply_diffop(const Poly& alpha, const Fps& S) {
  if (alpha.is_zero()) return Fps(S.order());
  int d = alpha.degree();
  int K = S.order() - d;
  if (K < 0) throw std::domain_error("apply_diffop: truncation order would be negative");
  std::vector<Rat> out(K + 1, Rat(0));
  // m-th derivative sends x^{n+m} to (n+m)!/n! x^n.
  for (int m = 0; m <= d; ++m) {
    Rat am = alpha.coeff(m);
    if (am.is_zero()) continue;
    for (int n = 0; n <= K; ++n) {
      Rat fall(1);
      for (int t = 0; t < m; ++t) fall *= Rat(static_cast<long>(n + m - t));
      out[n] += S.coeff(n + m) * fall * am;
    }
  }
  return Fps(K, std::move(out));
}

}  // namespace sdop
