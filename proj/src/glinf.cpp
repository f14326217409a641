#include "sdop/glinf.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdop {

std::string idx_str(HalfIdx t) {
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

HalfIdx idx_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return 2 * std::stoi(s);
  if (s.substr(slash + 1) != "2") throw std::invalid_argument("bad half-integer: " + s);
  return std::stoi(s.substr(0, slash));
}

Rat WinMat::entry(HalfIdx i, HalfIdx j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? Rat(0) : it->second;
}

void WinMat::add(HalfIdx i, HalfIdx j, const Rat& c, long* clipped) {
  if (c.is_zero()) return;
  if (!in_window(i) || !in_window(j)) {
    if (clipped) ++*clipped;
    return;
  }
  auto it = e_.find({i, j});
  if (it == e_.end()) {
    e_.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e_.erase(it);
  }
}

Parity WinMat::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [ij, c] : e_)
    (((ij.first - ij.second) % 2 == 0) ? has_even : has_odd) = true;
  if (has_even && has_odd) return Parity::Mixed;
  return has_odd ? Parity::Odd : Parity::Even;
}

WinMat WinMat::even_part() const {
  WinMat r(window());
  for (const auto& [ij, c] : e_)
    if ((ij.first - ij.second) % 2 == 0) r.e_[ij] = c;
  r.central_ = central_;
  return r;
}

WinMat WinMat::odd_part() const {
  WinMat r(window());
  for (const auto& [ij, c] : e_)
    if ((ij.first - ij.second) % 2 != 0) r.e_[ij] = c;
  return r;
}

WinMat WinMat::operator-() const {
  WinMat r(window());
  for (const auto& [ij, c] : e_) r.e_[ij] = -c;
  r.central_ = -central_;
  return r;
}

WinMat& WinMat::operator+=(const WinMat& o) {
  for (const auto& [ij, c] : o.e_) add(ij.first, ij.second, c);
  central_ += o.central_;
  return *this;
}

WinMat& WinMat::operator-=(const WinMat& o) {
  for (const auto& [ij, c] : o.e_) add(ij.first, ij.second, -c);
  central_ -= o.central_;
  return *this;
}

WinMat operator*(const Rat& s, const WinMat& m) {
  WinMat r(m.window());
  if (s.is_zero()) return r;
  for (const auto& [ij, c] : m.e_) r.e_[ij] = s * c;
  r.central_ = s * m.central_;
  return r;
}

bool operator==(const WinMat& a, const WinMat& b) {
  return a.e_ == b.e_ && a.central_ == b.central_;
}

std::ostream& operator<<(std::ostream& os, const WinMat& m) {
  bool first = true;
  for (const auto& [ij, c] : m.entries()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*E[" << idx_str(ij.first) << "," << idx_str(ij.second) << "]";
  }
  if (!m.central().is_zero()) {
    if (!first) os << " + ";
    first = false;
    os << m.central().str() << "*1";
  }
  if (first) os << "0";
  return os;
}

WinMat WinMat::unit(int window_n, HalfIdx i, HalfIdx j, Rat c) {
  WinMat m(window_n);
  m.add(i, j, c);
  return m;
}

WinMat mat_mul(const WinMat& A, const WinMat& B) {
  WinMat r(A.window());
  // Index B's rows for the contraction.
  std::map<HalfIdx, std::vector<std::pair<HalfIdx, Rat>>> brow;
  for (const auto& [ij, c] : B.entries()) brow[ij.first].push_back({ij.second, c});
  for (const auto& [ij, c] : A.entries()) {
    auto it = brow.find(ij.second);
    if (it == brow.end()) continue;
    for (const auto& [col, bc] : it->second) r.add(ij.first, col, c * bc);
  }
  return r;
}

Rat win_str(const WinMat& C) {
  Rat acc(0);
  for (const auto& [ij, c] : C.entries())
    if (ij.first == ij.second) acc += (ij.first % 2 == 0) ? c : -c;
  return acc;
}

Rat gl_cocycle(const WinMat& A, const WinMat& B) {
  // [J, A]_{ij} = (1[i<=0] - 1[j<=0]) A_{ij}, finitely supported.
  WinMat ja(A.window());
  for (const auto& [ij, c] : A.entries()) {
    int f = (ij.first <= 0 ? 1 : 0) - (ij.second <= 0 ? 1 : 0);
    if (f != 0) ja.add(ij.first, ij.second, Rat(f) * c);
  }
  return win_str(mat_mul(ja, B));
}

WinMat gl_bracket(const WinMat& A, const WinMat& B) {
  if (A.window() != B.window()) throw std::invalid_argument("gl_bracket: window mismatch");
  WinMat Ae = A.even_part(), Ao = A.odd_part();
  WinMat Be = B.even_part(), Bo = B.odd_part();
  Ae.central() = Rat(0);
  Be.central() = Rat(0);
  WinMat r = mat_mul(Ae, Be) - mat_mul(Be, Ae);
  r += mat_mul(Ae, Bo) - mat_mul(Bo, Ae);
  r += mat_mul(Ao, Be) - mat_mul(Be, Ao);
  r += mat_mul(Ao, Bo) + mat_mul(Bo, Ao);
  r.central() += gl_cocycle(A, B);
  return r;
}

HalfIdx form_mirror(BilFormKind kind, HalfIdx t) {
  return kind == BilFormKind::OSP ? -t : 1 - t;
}

Rat form_pair(BilFormKind kind, HalfIdx t) {
  switch (kind) {
    case BilFormKind::OSP:
      // (e_i|e_{-i}) = (-1)^i for integers, (-1)^{r+1/2} for half-odd r.
      if (t % 2 == 0) return Rat(neg_one_pow(t / 2));
      return Rat(neg_one_pow((t + 1) / 2));
    case BilFormKind::P_PP:
      return Rat(1);
    case BilFormKind::P_PM:
      // Odd skew-symmetric: flip sign on the half-odd-first pairs.
      return Rat(t % 2 == 0 ? 1 : -1);
    case BilFormKind::P_MP:
      // (e_i, e_{1/2-i}) = (-1)^i; the half-odd-first completion
      // (e_r, e_{1/2-r}) = (-1)^{r+1/2} is pinned by the generator list.
      if (t % 2 == 0) return Rat(neg_one_pow(t / 2));
      return Rat(neg_one_pow((t + 1) / 2));
    case BilFormKind::P_MM:
      if (t % 2 == 0) return Rat(neg_one_pow(t / 2));
      return Rat(-neg_one_pow((t + 1) / 2));
  }
  throw std::logic_error("bad form kind");
}

FormCheck form_membership(BilFormKind kind, const WinMat& T) {
  Parity par = T.parity();
  if (par == Parity::Mixed) throw std::invalid_argument("form_membership: mixed parity");
  int eps = (par == Parity::Odd) ? 1 : 0;
  FormCheck out;
  // Candidate (p, q) pairs touching a nonzero entry of T.
  std::set<std::pair<HalfIdx, HalfIdx>> cand;
  for (const auto& [rc, c] : T.entries()) {
    cand.insert({rc.second, form_mirror(kind, rc.first)});
    cand.insert({form_mirror(kind, rc.first), rc.second});
  }
  for (const auto& [p, q] : cand) {
    HalfIdx mp = form_mirror(kind, p), mq = form_mirror(kind, q);
    if (!T.in_window(p) || !T.in_window(q)) { ++out.skipped_pairs; continue; }
    if (!T.in_window(mp) || !T.in_window(mq)) { ++out.skipped_pairs; continue; }
    int sign = (eps * idx_parity(p)) % 2 ? -1 : 1;
    Rat lhs = T.entry(mq, p) * form_pair(kind, mq);
    Rat rhs = Rat(sign) * T.entry(mp, q) * form_pair(kind, p);
    if (!(lhs + rhs).is_zero()) return out;  // member stays false
  }
  out.member = true;
  return out;
}

WinMat subalg_generator(BilFormKind kind, int shape, HalfIdx i, HalfIdx j,
                        int window_n) {
  if (i % 2 != 0 || j % 2 != 0)
    throw std::invalid_argument("subalg_generator expects integer parameters");
  int ii = i / 2, jj = j / 2;  // plain integer parameters
  int sij = neg_one_pow(ii + jj);
  WinMat m(window_n);
  long clipped = 0;
  auto put = [&](HalfIdx a, HalfIdx b, int c) { m.add(a, b, Rat(c), &clipped); };
  if (kind == BilFormKind::OSP) {
    switch (shape) {
      case 0:  // E_{i,j} - (-1)^{i+j} E_{-j,-i}
        put(i, j, 1); put(-j, -i, -sij); break;
      case 1:  // E_{i,j-1/2} - (-1)^{i+j-1} E_{1/2-j,-i}
        put(i, j - 1, 1); put(1 - j, -i, sij); break;
      case 2:  // E_{i-1/2,j-1/2} - (-1)^{i+j} E_{1/2-j,1/2-i}
        put(i - 1, j - 1, 1); put(1 - j, 1 - i, -sij); break;
      default: throw std::invalid_argument("bad OSP shape");
    }
  } else {
    int c0, c1, c2;
    switch (kind) {
      case BilFormKind::P_PP: c0 = -1; c1 = 1;    c2 = -1;   break;
      case BilFormKind::P_PM: c0 = -1; c1 = -1;   c2 = 1;    break;
      case BilFormKind::P_MP: c0 = -sij; c1 = sij;  c2 = -sij; break;
      case BilFormKind::P_MM: c0 = -sij; c1 = -sij; c2 = sij;  break;
      default: throw std::logic_error("bad form kind");
    }
    switch (shape) {
      case 0:  // E_{ij} + c0 E_{1/2-j,1/2-i}
        put(i, j, 1); put(1 - j, 1 - i, c0); break;
      case 1:  // E_{i,j-1/2} + c1 E_{1-j,1/2-i}
        put(i, j - 1, 1); put(2 - j, 1 - i, c1); break;
      case 2:  // E_{i-1/2,j} + c2 E_{1/2-j,1-i}
        put(i - 1, j, 1); put(1 - j, 2 - i, c2); break;
      default: throw std::invalid_argument("bad P shape");
    }
  }
  if (clipped) throw std::out_of_range("subalg_generator: mirror outside window");
  return m;
}

}  // namespace sdop
