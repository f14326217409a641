#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdop/glinf.hpp"
#include "sdop/sdalg.hpp"

namespace sdop {

// bc/beta-gamma mode. Indices are stored doubled; psi modes have twice-even
// indices, gamma modes twice-odd.
enum class Species : int { PsiPlus = 0, PsiMinus = 1, GamPlus = 2, GamMinus = 3 };

inline bool species_fermionic(Species s) {
  return s == Species::PsiPlus || s == Species::PsiMinus;
}

struct Mode {
  Species sp;
  int color;     // 1..l
  HalfIdx idx;   // twice the mode index

  bool fermionic() const { return species_fermionic(sp); }
  // Vacuum axioms: psi+_m (m>=0), psi-_m (m>=1), gamma+-_r (r>=1/2) annihilate.
  bool creation() const;
  int twice_energy() const { return -idx; }
  Mode conjugate() const;

  auto operator<=>(const Mode&) const = default;
};

std::string mode_str(const Mode& m);

// Product of creation modes in canonical order (species, color, index
// ascending) with multiplicities; fermionic multiplicities are always 1.
struct Monomial {
  std::vector<std::pair<Mode, int>> factors;

  int twice_energy() const;
  int fermion_count() const;
  auto operator<=>(const Monomial&) const = default;
};

// Finite linear combination of monomials, truncated at a fixed energy.
struct FockState {
  int colors = 1;
  int twice_cutoff = 6;
  std::map<Monomial, Rat> terms;
  long drops = 0;  // monomials lost to the cutoff across producing operations

  static FockState vacuum(int l, int twice_cutoff);

  bool is_zero() const { return terms.empty(); }
  int max_twice_energy() const;

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rat& s, FockState v);
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.terms == b.terms;
  }
  friend std::ostream& operator<<(std::ostream& os, const FockState& v);
};

// Single mode applied to a state (creation inserts, annihilation contracts).
FockState apply_mode(const Mode& m, const FockState& v);

// Normal-ordered bilinear :AB: (annihilators applied first).
FockState apply_bilinear(const Mode& A, const Mode& B, const FockState& v);

// E_{ab} in the free-field realization, a and b in twice-units.
FockState act_gl_entry(HalfIdx a, HalfIdx b, const FockState& v);

// Entrywise action of a windowed matrix; the central coefficient acts as
// central * l.
FockState act_winmat(const WinMat& W, const FockState& v);

// Action of an algebra element through the s = 0 free-field components;
// the central coefficient acts as central * l.
FockState act_sd(const SdElem& A, const FockState& v);

// Field component selector.
struct FieldOpId {
  enum class Alg { SD, SD0, SDPP, SDPM, SDMP, SDMM } alg;
  char label;  // SD: '0','1','+','-'; SD0: '0','1','x'; P families: '.','+','-'
  int n = 0;
  int k = 0;
};

// The z^{-k-n-1} Fourier component of the selected field.
FockState act_field(const FieldOpId& op, const FockState& v);
// The algebra element realized by act_field.
SdElem field_elem(const FieldOpId& op);

// Horizontal gl(l): zero mode of :psi+p psi-q: - :gamma+p gamma-q:.
FockState act_horiz_gl(int p, int q, const FockState& v);

// so(2l) pieces. e_zero includes the +1/2 delta_{pq} shift; e_plus/e_minus
// are the root vectors for epsilon_p + epsilon_q and its negative
// (antisymmetric in p and q, zero on the diagonal).
FockState act_so_e_zero(int p, int q, const FockState& v);
FockState act_so_e_plus(int p, int q, const FockState& v);
FockState act_so_e_minus(int p, int q, const FockState& v);

struct WeightRecord {
  bool ok = false;      // full gl-diagonal and horizontal probes succeeded
  bool gl_ok = false;   // eigenvector of every E_{aa}
  bool osp_ok = false;  // eigenvector of every E_{aa} - E_{-a,-a}
  std::string detail;                 // offending operator when a probe fails
  std::map<HalfIdx, Rat> gl_diag;     // eigenvalues of E_{aa}, twice-indexed
  std::map<HalfIdx, Rat> osp_diag;    // eigenvalues of E_{aa} - E_{-a,-a}, a > 0
  std::vector<Rat> horiz_gl;          // eigenvalues of horizontal gl(l) diagonal
  std::vector<Rat> so_diag;           // eigenvalues of e^{pp}(0)
  int twice_energy = 0;
};

// Joint eigenvalues of the diagonal probes. Vectors highest only for the
// orthosymplectic side fail the plain gl-diagonal probe but still carry
// osp_diag and so_diag data.
WeightRecord weight_of(const FockState& v, int probe_margin = 4);

// Eigenvalue of act_sd(A) on v, when v is an eigenvector.
std::optional<Rat> sd_eigenvalue(const SdElem& A, const FockState& v);

}  // namespace sdop
