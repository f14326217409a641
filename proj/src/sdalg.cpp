#include "sdop/sdalg.hpp"

#include <ostream>
#include <stdexcept>

namespace sdop {

bool SuperMat::is_zero() const {
  return f0.is_zero() && f1.is_zero() && fp.is_zero() && fm.is_zero();
}

SuperMat SuperMat::shifted(const Rat& s) const {
  return {f0.shifted(s), f1.shifted(s), fp.shifted(s), fm.shifted(s)};
}

SuperMat operator+(const SuperMat& a, const SuperMat& b) {
  return {a.f0 + b.f0, a.f1 + b.f1, a.fp + b.fp, a.fm + b.fm};
}

SuperMat operator-(const SuperMat& a, const SuperMat& b) {
  return {a.f0 - b.f0, a.f1 - b.f1, a.fp - b.fp, a.fm - b.fm};
}

SuperMat operator*(const SuperMat& a, const SuperMat& b) {
  return {a.f0 * b.f0 + a.fp * b.fm, a.fm * b.fp + a.f1 * b.f1,
          a.f0 * b.fp + a.fp * b.f1, a.fm * b.f0 + a.f1 * b.fm};
}

SuperMat operator*(const Rat& s, const SuperMat& m) {
  return {s * m.f0, s * m.f1, s * m.fp, s * m.fm};
}

bool operator==(const SuperMat& a, const SuperMat& b) {
  return a.f0 == b.f0 && a.f1 == b.f1 && a.fp == b.fp && a.fm == b.fm;
}

Rat supertrace_at(const SuperMat& F, const Rat& w) {
  return F.f0.eval(w) - F.f1.eval(w);
}

SdElem SdElem::monomial(int k, const SuperMat& F) {
  SdElem e;
  e.set_term(k, F);
  return e;
}

SdElem SdElem::monomial(int k, const Poly& f, char slot) {
  SuperMat F;
  switch (slot) {
    case '0': F.f0 = f; break;
    case '1': F.f1 = f; break;
    case '+': F.fp = f; break;
    case '-': F.fm = f; break;
    default: throw std::invalid_argument("bad matrix slot");
  }
  return monomial(k, F);
}

void SdElem::set_term(int k, const SuperMat& F) {
  if (F.is_zero())
    terms_.erase(k);
  else
    terms_[k] = F;
}

SuperMat SdElem::term(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? SuperMat{} : it->second;
}

Parity SdElem::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [k, F] : terms_) {
    if (!F.f0.is_zero() || !F.f1.is_zero()) has_even = true;
    if (!F.fp.is_zero() || !F.fm.is_zero()) has_odd = true;
  }
  if (has_even && has_odd) return Parity::Mixed;
  if (has_odd) return Parity::Odd;
  return Parity::Even;
}

SdElem SdElem::even_part() const {
  SdElem e(central_);
  for (const auto& [k, F] : terms_) e.set_term(k, F.even_part());
  return e;
}

SdElem SdElem::odd_part() const {
  SdElem e;
  for (const auto& [k, F] : terms_) e.set_term(k, F.odd_part());
  return e;
}

std::map<int, SdElem> SdElem::grade_components() const {
  std::map<int, SdElem> out;
  for (const auto& [k, F] : terms_) {
    if (!F.f0.is_zero() || !F.f1.is_zero())
      out[2 * k] += monomial(k, F.even_part());
    if (!F.fp.is_zero())
      out[2 * k - 1] += monomial(k, SuperMat{Poly(), Poly(), F.fp, Poly()});
    if (!F.fm.is_zero())
      out[2 * k + 1] += monomial(k, SuperMat{Poly(), Poly(), Poly(), F.fm});
  }
  if (!central_.is_zero()) out[0] += central_elem(central_);
  return out;
}

SdElem SdElem::grade_project(int twice_degree) const {
  auto comps = grade_components();
  auto it = comps.find(twice_degree);
  return it == comps.end() ? SdElem() : it->second;
}

bool SdElem::homogeneous_degree(int* twice_degree) const {
  auto comps = grade_components();
  if (comps.size() != 1) return comps.empty();
  if (twice_degree) *twice_degree = comps.begin()->first;
  return true;
}

SdElem SdElem::operator-() const {
  SdElem e(-central_);
  for (const auto& [k, F] : terms_) e.terms_[k] = Rat(-1) * F;
  return e;
}

SdElem& SdElem::operator+=(const SdElem& o) {
  central_ += o.central_;
  for (const auto& [k, F] : o.terms_) set_term(k, term(k) + F);
  return *this;
}

SdElem& SdElem::operator-=(const SdElem& o) {
  central_ -= o.central_;
  for (const auto& [k, F] : o.terms_) set_term(k, term(k) - F);
  return *this;
}

SdElem operator*(const Rat& s, const SdElem& e) {
  SdElem r(s * e.central_);
  if (s.is_zero()) return r;
  for (const auto& [k, F] : e.terms_) r.terms_[k] = s * F;
  return r;
}

bool operator==(const SdElem& a, const SdElem& b) {
  return a.central_ == b.central_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const SdElem& e) {
  bool first = true;
  for (const auto& [k, F] : e.terms_) {
    auto emit = [&](const Poly& f, const char* tag) {
      if (f.is_zero()) return;
      if (!first) os << " + ";
      first = false;
      os << "t^" << k << "(" << f << ")" << tag;
    };
    emit(F.f0, "M0");
    emit(F.f1, "M1");
    emit(F.fp, "M+");
    emit(F.fm, "M-");
  }
  if (!e.central().is_zero()) {
    if (!first) os << " + ";
    first = false;
    os << e.central().str() << "*C";
  }
  if (first) os << "0";
  return os;
}

SdElem sd_multiply(const SdElem& A, const SdElem& B) {
  SdElem r;
  for (const auto& [ka, F] : A.terms())
    for (const auto& [kb, G] : B.terms())
      r += SdElem::monomial(ka + kb, F.shifted(Rat(kb)) * G);
  return r;
}

namespace {

// Direct sum of (sdcocycle) for a monomial pair t^r F, t^{-r} G with r >= 0.
Rat psi_direct(int r, const SuperMat& F, const SuperMat& G) {
  Rat acc(0);
  for (int j = -r; j <= -1; ++j) {
    Rat w(j), w2(j + r);
    acc += F.f0.eval(w) * G.f0.eval(w2) + F.fp.eval(w) * G.fm.eval(w2) -
           F.fm.eval(w) * G.fp.eval(w2) - F.f1.eval(w) * G.f1.eval(w2);
  }
  return acc;
}

}  // namespace

Rat cocycle_psi(const SdElem& A, const SdElem& B) {
  Rat acc(0);
  for (const auto& [r, F] : A.terms()) {
    for (const auto& [s, G] : B.terms()) {
      if (r + s != 0) continue;
      if (r >= 0) {
        acc += psi_direct(r, F, G);
      } else {
        // Super-skew extension on homogeneous parts:
        // Psi(A,B) = -(-1)^{|A||B|} Psi(B,A); even-odd cross terms vanish.
        acc -= psi_direct(s, G.even_part(), F.even_part());
        acc += psi_direct(s, G.odd_part(), F.odd_part());
      }
    }
  }
  return acc;
}

SdElem sd_bracket(const SdElem& A, const SdElem& B) {
  SdElem Ae = A.even_part(), Ao = A.odd_part();
  SdElem Be = B.even_part(), Bo = B.odd_part();
  Ae.central() = Rat(0);
  Be.central() = Rat(0);
  // [a,b] = ab - (-1)^{|a||b|} ba on homogeneous parts.
  SdElem r = sd_multiply(Ae, Be) - sd_multiply(Be, Ae);
  r += sd_multiply(Ae, Bo) - sd_multiply(Bo, Ae);
  r += sd_multiply(Ao, Be) - sd_multiply(Be, Ao);
  r += sd_multiply(Ao, Bo) + sd_multiply(Bo, Ao);
  r.central() += cocycle_psi(A, B);
  return r;
}

}  // namespace sdop
