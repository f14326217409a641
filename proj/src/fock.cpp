#include "sdop/fock.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sdop/involution.hpp"

namespace sdop {

bool Mode::creation() const {
  switch (sp) {
    case Species::PsiPlus: return idx <= -2;   // psi+_m, m <= -1
    case Species::PsiMinus: return idx <= 0;   // psi-_m, m <= 0
    default: return idx <= -1;                 // gamma_r, r <= -1/2
  }
}

Mode Mode::conjugate() const {
  switch (sp) {
    case Species::PsiPlus: return {Species::PsiMinus, color, -idx};
    case Species::PsiMinus: return {Species::PsiPlus, color, -idx};
    case Species::GamPlus: return {Species::GamMinus, color, -idx};
    default: return {Species::GamPlus, color, -idx};
  }
}

std::string mode_str(const Mode& m) {
  static const char* names[4] = {"psi+", "psi-", "gam+", "gam-"};
  std::ostringstream os;
  os << names[static_cast<int>(m.sp)] << "." << m.color << "[" << idx_str(m.idx) << "]";
  return os.str();
}

int Monomial::twice_energy() const {
  int e = 0;
  for (const auto& [m, mult] : factors) e += mult * m.twice_energy();
  return e;
}

int Monomial::fermion_count() const {
  int c = 0;
  for (const auto& [m, mult] : factors)
    if (m.fermionic()) c += mult;
  return c;
}

FockState FockState::vacuum(int l, int twice_cutoff) {
  FockState v;
  v.colors = l;
  v.twice_cutoff = twice_cutoff;
  v.terms[Monomial{}] = Rat(1);
  return v;
}

int FockState::max_twice_energy() const {
  int e = 0;
  for (const auto& [m, c] : terms) e = std::max(e, m.twice_energy());
  return e;
}

FockState& FockState::operator+=(const FockState& o) {
  drops += o.drops;
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  FockState neg = Rat(-1) * o;
  return *this += neg;
}

FockState operator*(const Rat& s, FockState v) {
  if (s.is_zero()) {
    v.terms.clear();
    return v;
  }
  for (auto& [m, c] : v.terms) c *= s;
  return v;
}

std::ostream& operator<<(std::ostream& os, const FockState& v) {
  if (v.terms.empty()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : v.terms) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    if (m.factors.empty()) os << "|0>";
    for (const auto& [mode, mult] : m.factors) {
      os << mode_str(mode);
      if (mult > 1) os << "^" << mult;
    }
  }
  return os;
}

FockState apply_mode(const Mode& m, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  out.drops = v.drops;
  if (m.color < 1 || m.color > v.colors)
    throw std::invalid_argument("apply_mode: color out of range");
  for (const auto& [mono, coeff] : v.terms) {
    if (m.creation()) {
      Monomial nm = mono;
      auto pos = std::lower_bound(
          nm.factors.begin(), nm.factors.end(), m,
          [](const auto& f, const Mode& x) { return f.first < x; });
      int sign = 1;
      if (m.fermionic()) {
        if (pos != nm.factors.end() && pos->first == m) continue;  // psi^2 = 0
        for (auto it = nm.factors.begin(); it != pos; ++it)
          if (it->first.fermionic() && (it->second & 1)) sign = -sign;
        nm.factors.insert(pos, {m, 1});
      } else {
        if (pos != nm.factors.end() && pos->first == m)
          pos->second += 1;
        else
          nm.factors.insert(pos, {m, 1});
      }
      if (nm.twice_energy() > v.twice_cutoff) {
        ++out.drops;
        continue;
      }
      FockState add;
      add.colors = v.colors;
      add.twice_cutoff = v.twice_cutoff;
      add.terms[nm] = Rat(sign) * coeff;
      out += add;
    } else {
      Mode target = m.conjugate();
      // Walk to the conjugate mode; fermionic annihilators pick up a sign
      // per fermionic factor crossed, bosonic ones commute freely.
      int sign = 1;
      bool found = false;
      Monomial nm = mono;
      for (size_t i = 0; i < nm.factors.size(); ++i) {
        if (nm.factors[i].first == target) {
          Rat contr(sign);
          if (!m.fermionic()) {
            long mult = nm.factors[i].second;
            // [gam+_r, gam-_s] = delta_{r+s,0}: gam+ contracts with +mult,
            // gam- with -mult.
            contr = (m.sp == Species::GamPlus) ? Rat(mult) : Rat(-mult);
          }
          if (--nm.factors[i].second == 0) nm.factors.erase(nm.factors.begin() + i);
          FockState add;
          add.colors = v.colors;
          add.twice_cutoff = v.twice_cutoff;
          add.terms[nm] = contr * coeff;
          out += add;
          found = true;
          break;
        }
        if (m.fermionic() && nm.factors[i].first.fermionic() &&
            (nm.factors[i].second & 1))
          sign = -sign;
      }
      (void)found;  // not found: annihilates the monomial
    }
  }
  return out;
}

FockState apply_bilinear(const Mode& A, const Mode& B, const FockState& v) {
  // :AB: with annihilation operators moved right.
  if (!A.creation() && B.creation()) {
    int s = (A.fermionic() && B.fermionic()) ? -1 : 1;
    return Rat(s) * apply_mode(B, apply_mode(A, v));
  }
  return apply_mode(A, apply_mode(B, v));
}

FockState act_gl_entry(HalfIdx a, HalfIdx b, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  bool arow = idx_is_integer(a), bcol = idx_is_integer(b);
  for (int p = 1; p <= v.colors; ++p) {
    if (arow && bcol)
      out += apply_bilinear({Species::PsiPlus, p, -a}, {Species::PsiMinus, p, b}, v);
    else if (!arow && !bcol)
      out -= apply_bilinear({Species::GamPlus, p, -a}, {Species::GamMinus, p, b}, v);
    else if (arow && !bcol)
      out += apply_bilinear({Species::PsiPlus, p, -a}, {Species::GamMinus, p, b}, v);
    else
      out -= apply_bilinear({Species::GamPlus, p, -a}, {Species::PsiMinus, p, b}, v);
  }
  return out;
}

FockState act_winmat(const WinMat& W, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  for (const auto& [ij, c] : W.entries())
    out += c * act_gl_entry(ij.first, ij.second, v);
  if (!W.central().is_zero())
    out += (W.central() * Rat(v.colors)) * v;
  return out;
}

FockState act_sd(const SdElem& A, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  int E = v.twice_cutoff / 2 + 1;
  for (const auto& [k, F] : A.terms()) {
    int J = E + std::abs(k) + 2;
    for (int j = -J; j <= J; ++j) {
      Rat w(-j);
      Rat c0 = F.f0.eval(w), c1 = F.f1.eval(w), cp = F.fp.eval(w), cm = F.fm.eval(w);
      if (!c0.is_zero()) out += c0 * act_gl_entry(2 * (j - k), 2 * j, v);
      if (!c1.is_zero()) out += c1 * act_gl_entry(2 * (j - k) - 1, 2 * j - 1, v);
      if (!cp.is_zero()) out += cp * act_gl_entry(2 * (j - k), 2 * j - 1, v);
      if (!cm.is_zero()) out += cm * act_gl_entry(2 * (j - k) - 1, 2 * j, v);
    }
  }
  if (!A.central().is_zero()) out += (A.central() * Rat(v.colors)) * v;
  return out;
}

SdElem field_elem(const FieldOpId& op) {
  switch (op.alg) {
    case FieldOpId::Alg::SD:
      // J^{a,n}_k = -t^k [D]_n M_a
      return Rat(-1) * SdElem::monomial(op.k, falling_factorial(op.n), op.label);
    case FieldOpId::Alg::SD0:
      return spanning_generator(SubalgId::Zero, op.label, op.n, op.k);
    case FieldOpId::Alg::SDPP:
      return spanning_generator(SubalgId::PP, op.label, op.n, op.k);
    case FieldOpId::Alg::SDPM:
      return spanning_generator(SubalgId::PM, op.label, op.n, op.k);
    case FieldOpId::Alg::SDMP:
      return spanning_generator(SubalgId::MP, op.label, op.n, op.k);
    case FieldOpId::Alg::SDMM:
      return spanning_generator(SubalgId::MM, op.label, op.n, op.k);
  }
  throw std::logic_error("bad field algebra");
}

FockState act_field(const FieldOpId& op, const FockState& v) {
  return act_sd(field_elem(op), v);
}

FockState act_horiz_gl(int p, int q, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  int E = v.twice_cutoff + 2;
  for (int tm = -E; tm <= E; tm += 2)  // psi+_m psi-_{-m}
    out += apply_bilinear({Species::PsiPlus, p, tm}, {Species::PsiMinus, q, -tm}, v);
  for (int tr = -E; tr <= E; tr += 2)  // gamma+_r gamma-_{-r}
    out -= apply_bilinear({Species::GamPlus, p, tr + 1}, {Species::GamMinus, q, -tr - 1}, v);
  return out;
}

FockState act_so_e_zero(int p, int q, const FockState& v) {
  FockState out = act_horiz_gl(p, q, v);
  if (p == q) out += Rat(1, 2) * v;
  return out;
}

// The root vectors pair modes with index sum zero and alternate signs; this
// is the unique bilinear combination commuting with the orthosymplectic
// action (solved for exactly, and antisymmetric in p, q as so(2l) demands).
FockState act_so_e_plus(int p, int q, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  int E = v.twice_cutoff / 2 + 2;
  // sum_m (-1)^m :psi+p_m psi+q_{-m}: - sum_r (-1)^{r+1/2} :gam+p_r gam+q_{-r}:
  for (int m = -E; m <= E; ++m)
    out += Rat(neg_one_pow(m)) *
           apply_bilinear({Species::PsiPlus, p, 2 * m}, {Species::PsiPlus, q, -2 * m}, v);
  for (int t = -2 * E - 1; t <= 2 * E + 1; t += 2)
    out -= Rat(neg_one_pow((t + 1) / 2)) *
           apply_bilinear({Species::GamPlus, p, t}, {Species::GamPlus, q, -t}, v);
  return out;
}

FockState act_so_e_minus(int p, int q, const FockState& v) {
  FockState out;
  out.colors = v.colors;
  out.twice_cutoff = v.twice_cutoff;
  int E = v.twice_cutoff / 2 + 2;
  // sum_m (-1)^m :psi-p_m psi-q_{-m}: + sum_r (-1)^{r+1/2} :gam-p_r gam-q_{-r}:
  for (int m = -E; m <= E; ++m)
    out += Rat(neg_one_pow(m)) *
           apply_bilinear({Species::PsiMinus, p, 2 * m}, {Species::PsiMinus, q, -2 * m}, v);
  for (int t = -2 * E - 1; t <= 2 * E + 1; t += 2)
    out += Rat(neg_one_pow((t + 1) / 2)) *
           apply_bilinear({Species::GamMinus, p, t}, {Species::GamMinus, q, -t}, v);
  return out;
}

namespace {

std::optional<Rat> eigenvalue_of(const FockState& image, const FockState& v) {
  if (image.is_zero()) return Rat(0);
  if (v.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *v.terms.begin();
  auto it = image.terms.find(m0);
  if (it == image.terms.end()) return std::nullopt;
  Rat lambda = it->second / c0;
  FockState diff = image - lambda * v;
  if (!diff.is_zero()) return std::nullopt;
  return lambda;
}

}  // namespace

std::optional<Rat> sd_eigenvalue(const SdElem& A, const FockState& v) {
  return eigenvalue_of(act_sd(A, v), v);
}

WeightRecord weight_of(const FockState& v, int probe_margin) {
  WeightRecord rec;
  int bound = v.max_twice_energy() + probe_margin;
  rec.gl_ok = true;
  for (HalfIdx a = -bound; a <= bound && rec.gl_ok; ++a) {
    auto lam = eigenvalue_of(act_gl_entry(a, a, v), v);
    if (!lam) {
      rec.detail = "not an eigenvector of E[" + idx_str(a) + "," + idx_str(a) + "]";
      rec.gl_ok = false;
      rec.gl_diag.clear();
      break;
    }
    if (!lam->is_zero()) rec.gl_diag[a] = *lam;
  }
  rec.osp_ok = true;
  for (HalfIdx a = 1; a <= bound && rec.osp_ok; ++a) {
    auto lam = eigenvalue_of(act_gl_entry(a, a, v) - act_gl_entry(-a, -a, v), v);
    if (!lam) {
      rec.osp_ok = false;
      rec.osp_diag.clear();
      break;
    }
    if (!lam->is_zero()) rec.osp_diag[a] = *lam;
  }
  for (int p = 1; p <= v.colors; ++p) {
    auto lam = eigenvalue_of(act_horiz_gl(p, p, v), v);
    if (!lam) {
      rec.detail = "not an eigenvector of horizontal gl diagonal " + std::to_string(p);
      return rec;
    }
    rec.horiz_gl.push_back(*lam);
    rec.so_diag.push_back(*lam + Rat(1, 2));
  }
  rec.twice_energy = v.max_twice_energy();
  rec.ok = rec.gl_ok;
  return rec;
}

}  // namespace sdop
