#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "sdop/rat.hpp"
#include "sdop/sdalg.hpp"  // Parity

namespace sdop {

// Indices of gl_{infinity|infinity} live in (1/2)Z and are stored doubled:
// e_i with i integer (twice even) is even, i half-odd (twice odd) is odd.
using HalfIdx = int;  // twice the index

inline bool idx_is_integer(HalfIdx t) { return t % 2 == 0; }
inline int idx_parity(HalfIdx t) { return idx_is_integer(t) ? 0 : 1; }
std::string idx_str(HalfIdx t);
HalfIdx idx_parse(const std::string& s);

// Matrix with finitely many entries, all indices restricted to the symmetric
// window |i| <= N (in half-integer units), plus a central coefficient.
class WinMat {
 public:
  WinMat() : twice_n_(0) {}
  explicit WinMat(int window_n) : twice_n_(2 * window_n) {}

  int window() const { return twice_n_ / 2; }
  int twice_window() const { return twice_n_; }
  bool in_window(HalfIdx t) const { return -twice_n_ <= t && t <= twice_n_; }

  const std::map<std::pair<HalfIdx, HalfIdx>, Rat>& entries() const { return e_; }
  Rat entry(HalfIdx i, HalfIdx j) const;
  // Adds c to entry (i, j); silently discards out-of-window positions and
  // reports them through the optional counter.
  void add(HalfIdx i, HalfIdx j, const Rat& c, long* clipped = nullptr);

  const Rat& central() const { return central_; }
  Rat& central() { return central_; }

  bool is_zero() const { return e_.empty() && central_.is_zero(); }
  bool non_central_zero() const { return e_.empty(); }

  Parity parity() const;  // of the non-central part
  WinMat even_part() const;
  WinMat odd_part() const;

  WinMat operator-() const;
  WinMat& operator+=(const WinMat& o);
  WinMat& operator-=(const WinMat& o);
  friend WinMat operator+(WinMat a, const WinMat& b) { return a += b; }
  friend WinMat operator-(WinMat a, const WinMat& b) { return a -= b; }
  friend WinMat operator*(const Rat& s, const WinMat& m);
  friend bool operator==(const WinMat& a, const WinMat& b);
  friend std::ostream& operator<<(std::ostream& os, const WinMat& m);

  static WinMat unit(int window_n, HalfIdx i, HalfIdx j, Rat c = Rat(1));

 private:
  int twice_n_;  // window bound in half-integer units
  std::map<std::pair<HalfIdx, HalfIdx>, Rat> e_;
  Rat central_;
};

// Plain matrix product (no central term).
WinMat mat_mul(const WinMat& A, const WinMat& B);

// Str(C) = sum_r (-1)^{2r} c_rr over the window.
Rat win_str(const WinMat& C);

// alpha(A,B) = Str([J,A]B) with J = sum_{r<=0} E_rr; exact because [J,A]
// has finite support.
Rat gl_cocycle(const WinMat& A, const WinMat& B);

// Super-commutator plus central coefficient alpha(A,B).
WinMat gl_bracket(const WinMat& A, const WinMat& B);

// Bilinear forms cutting out the OSP and P-type subalgebras.
enum class BilFormKind { OSP, P_PP, P_PM, P_MP, P_MM };

// Mirror index of the form's pairing: -i for OSP, 1/2 - i for the P forms
// (in twice-units: -t and 1 - t).
HalfIdx form_mirror(BilFormKind kind, HalfIdx t);
// Pairing value (e_i | e_{mirror(i)}).
Rat form_pair(BilFormKind kind, HalfIdx t);

struct FormCheck {
  bool member = false;
  long skipped_pairs = 0;  // pairs whose mirror fell outside the window
};

// (Tv|w) = -(-1)^{eps |v|} (v|Tw) over all window basis pairs whose mirrors
// lie inside the window. T must be Z2-homogeneous.
FormCheck form_membership(BilFormKind kind, const WinMat& T);

// Dense subalgebra generators. Shapes: 0 = even-even, 1 = mixed (row
// integer), 2 = mixed (column integer) for P families / odd-odd for OSP.
WinMat subalg_generator(BilFormKind kind, int shape, HalfIdx i, HalfIdx j,
                        int window_n);

}  // namespace sdop
