#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdop/rat.hpp"

namespace sdop {

// Variable x^i_j (even, commuting) or xi^i_j (odd, Grassmann) of the
// supersymmetric model of the skew tensor space.
struct SuperVar {
  bool odd;  // true: xi, false: x
  int i;     // superscript 1..n
  int j;     // color 1..l
  auto operator<=>(const SuperVar&) const = default;
};

// Monomial: x-exponents and an ordered xi subset (canonically sorted;
// coefficients are stored against this order).
struct SuperMonomial {
  std::map<std::pair<int, int>, int> xs;     // (i,j) -> exponent
  std::vector<std::pair<int, int>> xis;      // sorted (i,j) pairs
  int degree() const;
  auto operator<=>(const SuperMonomial&) const = default;
};

struct SuperPoly {
  std::map<SuperMonomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const SuperMonomial& m, const Rat& c);
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator*(const Rat& s, SuperPoly p);
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.terms == b.terms;
  }
  friend std::ostream& operator<<(std::ostream& os, const SuperPoly& p);

  static SuperPoly one();
  static SuperPoly variable(const SuperVar& v);
};

// Multiplication by a single variable with Koszul signs.
SuperPoly var_mul(const SuperVar& v, const SuperPoly& p);
// Left derivative with respect to a variable.
SuperPoly var_derivative(const SuperVar& u, const SuperPoly& p);

// First-order operator sum_t coeff_t * v_t d/du_t.
struct FirstOrderOp {
  struct Term {
    Rat coeff;
    SuperVar to;    // multiplied variable
    SuperVar from;  // differentiated variable
  };
  std::vector<Term> terms;
  std::string name;

  SuperPoly apply(const SuperPoly& p) const;
};

enum class BorelKind { B1, B2, BPrime };

// Simple radical operators of the chosen Borel subalgebra; n >= l enforced.
std::vector<FirstOrderOp> radical_ops(BorelKind borel, int n, int l);
// Opposite (lowering) operators.
std::vector<FirstOrderOp> lowering_ops(BorelKind borel, int n, int l);

// Ordered-product determinant of the first r x r minor of the variable
// matrix for column i >= 1.
SuperPoly findim_minor(int i, int r, int n, int l);

struct Partition {
  std::vector<long> parts;  // weakly decreasing, nonnegative
  long size() const;
  long length() const;
  long col_len(long j) const;  // #{parts >= j}, j >= 1
};

SuperPoly findim_hwv(const Partition& lambda, BorelKind borel, int n, int l);

bool annihilation_check(const SuperPoly& f, const std::vector<FirstOrderOp>& ops);

// Weight tuple (xi-degrees; x-degrees) per superscript.
struct GlnnWeight {
  std::vector<long> xi_deg;  // length n
  std::vector<long> x_deg;   // length n
  friend bool operator==(const GlnnWeight&, const GlnnWeight&) = default;
};

GlnnWeight phi_weight(const Partition& lambda, BorelKind borel, int n);

struct DecomposeReport {
  long space_dim = 0;      // dim of the degree-k component
  long singular_count = 0;
  long expected_count = 0;  // #{lambda |- k : l(lambda) <= l}
  long closure_dim_sum = 0;
  bool weights_match = true;  // singular weights are exactly the predicted pairs
  std::vector<std::pair<std::vector<long>, GlnnWeight>> components;  // (gl(l) wt, gl(n|n) wt)
};

DecomposeReport decompose_bruteforce(int n, int l, int k, BorelKind borel = BorelKind::B1);

// Product-of-determinants vanishing identity; q < t <= r. extra_rows > 0
// switches to the corollary shape with even rows x^{q+2}..x^{q+1+extra_rows}.
bool det_identity_check(int q, int t, int r, int extra_rows = 0);

}  // namespace sdop
