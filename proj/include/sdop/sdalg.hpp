#pragma once

#include <iosfwd>
#include <map>

#include "sdop/poly.hpp"
#include "sdop/rat.hpp"

namespace sdop {

enum class Parity { Even, Odd, Mixed };

// 2x2 supermatrix of polynomials in D:
//   [ f0  fp ]     f0 ~ M0 = del_theta theta,  f1 ~ M1 = theta del_theta,
//   [ fm  f1 ]     fp ~ M+ = del_theta,        fm ~ M- = theta.
struct SuperMat {
  Poly f0, f1, fp, fm;

  bool is_zero() const;
  bool diag_only() const { return fp.is_zero() && fm.is_zero(); }
  bool offdiag_only() const { return f0.is_zero() && f1.is_zero(); }

  SuperMat shifted(const Rat& s) const;  // entries composed with w -> w+s
  SuperMat even_part() const { return {f0, f1, Poly(), Poly()}; }
  SuperMat odd_part() const { return {Poly(), Poly(), fp, fm}; }

  friend SuperMat operator+(const SuperMat& a, const SuperMat& b);
  friend SuperMat operator-(const SuperMat& a, const SuperMat& b);
  friend SuperMat operator*(const SuperMat& a, const SuperMat& b);  // matrix product
  friend SuperMat operator*(const Rat& s, const SuperMat& m);
  friend bool operator==(const SuperMat& a, const SuperMat& b);
};

// str(F(w)) = f0(w) - f1(w).
Rat supertrace_at(const SuperMat& F, const Rat& w);

// Element sum_k t^k F_k(D) + central * C of the centrally extended algebra.
// Zero matrices are never stored.
class SdElem {
 public:
  SdElem() = default;
  explicit SdElem(Rat central) : central_(std::move(central)) {}

  static SdElem monomial(int k, const SuperMat& F);
  static SdElem monomial(int k, const Poly& f, char slot);  // slot in {'0','1','+','-'}
  static SdElem central_elem(const Rat& c) { return SdElem(c); }

  const std::map<int, SuperMat>& terms() const { return terms_; }
  const Rat& central() const { return central_; }
  Rat& central() { return central_; }
  void set_term(int k, const SuperMat& F);
  SuperMat term(int k) const;

  bool is_zero() const { return terms_.empty() && central_.is_zero(); }
  bool non_central_zero() const { return terms_.empty(); }

  Parity parity() const;     // of the non-central part; zero counts as Even
  SdElem even_part() const;  // includes the central coefficient
  SdElem odd_part() const;

  // Principal-degree support in half-integer units (twice the degree):
  // t^k M0/M1 has 2k, t^k M+ has 2k-1, t^k M- has 2k+1.
  std::map<int, SdElem> grade_components() const;  // keyed by twice-degree
  SdElem grade_project(int twice_degree) const;
  bool homogeneous_degree(int* twice_degree = nullptr) const;

  SdElem operator-() const;
  SdElem& operator+=(const SdElem& o);
  SdElem& operator-=(const SdElem& o);
  friend SdElem operator+(SdElem a, const SdElem& b) { return a += b; }
  friend SdElem operator-(SdElem a, const SdElem& b) { return a -= b; }
  friend SdElem operator*(const Rat& s, const SdElem& e);
  friend bool operator==(const SdElem& a, const SdElem& b);

  friend std::ostream& operator<<(std::ostream& os, const SdElem& e);

 private:
  std::map<int, SuperMat> terms_;
  Rat central_;
};

// Associative product; central coefficients of the inputs are ignored and
// the result has central coefficient 0.
SdElem sd_multiply(const SdElem& A, const SdElem& B);

// Two-cocycle Psi. Bilinear; the r < 0 monomial branch is defined through
// super-skew symmetry on homogeneous parts.
Rat cocycle_psi(const SdElem& A, const SdElem& B);

// Super-bracket with central term Psi(A,B) C. Central coefficients of the
// inputs contribute nothing.
SdElem sd_bracket(const SdElem& A, const SdElem& B);

}  // namespace sdop
