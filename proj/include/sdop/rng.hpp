#pragma once

#include <cstdint>

#include "sdop/poly.hpp"
#include "sdop/sdalg.hpp"

namespace sdop {

// Deterministic splitmix64 generator for reproducible property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  long range(long lo, long hi);  // inclusive
  Rat small_rat(long num_bound = 4, long den_bound = 3);
  Rat nonzero_rat(long num_bound = 4, long den_bound = 3);
  Poly poly(int max_deg, long num_bound = 3);
  Poly nonzero_poly(int max_deg, long num_bound = 3);

  // t^k f(D) M_slot with |k| <= kmax, deg f <= dmax.
  SdElem random_monomial(int kmax, int dmax);
  // Sum of a few monomials.
  SdElem random_elem(int kmax, int dmax, int nterms = 3);
  // Random homogeneous (Z2) element.
  SdElem random_homogeneous(int kmax, int dmax, bool odd, int nterms = 2);

 private:
  std::uint64_t state_;
};

}  // namespace sdop
