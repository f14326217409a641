#include "sdop/rng.hpp"

namespace sdop {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::small_rat(long num_bound, long den_bound) {
  return Rat(range(-num_bound, num_bound), range(1, den_bound));
}

Rat Rng::nonzero_rat(long num_bound, long den_bound) {
  Rat r = small_rat(num_bound, den_bound);
  while (r.is_zero()) r = small_rat(num_bound, den_bound);
  return r;
}

Poly Rng::poly(int max_deg, long num_bound) {
  std::vector<Rat> c(range(0, max_deg) + 1);
  for (auto& x : c) x = small_rat(num_bound, 2);
  return Poly(std::move(c));
}

Poly Rng::nonzero_poly(int max_deg, long num_bound) {
  Poly p = poly(max_deg, num_bound);
  while (p.is_zero()) p = poly(max_deg, num_bound);
  return p;
}

SdElem Rng::random_monomial(int kmax, int dmax) {
  static const char slots[4] = {'0', '1', '+', '-'};
  char slot = slots[range(0, 3)];
  return SdElem::monomial(static_cast<int>(range(-kmax, kmax)),
                          nonzero_poly(dmax), slot);
}

SdElem Rng::random_elem(int kmax, int dmax, int nterms) {
  SdElem e;
  int n = static_cast<int>(range(1, nterms));
  for (int i = 0; i < n; ++i) e += random_monomial(kmax, dmax);
  return e;
}

SdElem Rng::random_homogeneous(int kmax, int dmax, bool odd, int nterms) {
  SdElem e;
  int n = static_cast<int>(range(1, nterms));
  for (int i = 0; i < n; ++i) {
    char slot = odd ? (next() % 2 ? '+' : '-') : (next() % 2 ? '0' : '1');
    e += SdElem::monomial(static_cast<int>(range(-kmax, kmax)),
                          nonzero_poly(dmax), slot);
  }
  return e;
}

}  // namespace sdop
