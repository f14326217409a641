#pragma once

#include <optional>
#include <string>

#include "sdop/sdalg.hpp"

namespace sdop {

enum class SigmaFamily { AB, PP, PM, MP, MM };

// One of the five graded anti-involution families. b is used only by AB.
struct AntiInvolution {
  SigmaFamily family = SigmaFamily::AB;
  Rat a;
  Rat b = Rat(1);

  static AntiInvolution ab(Rat a, Rat b) { return {SigmaFamily::AB, std::move(a), std::move(b)}; }
  static AntiInvolution pm_family(SigmaFamily f, Rat a) { return {f, std::move(a), Rat(1)}; }
  std::string name() const;
};

// sigma applied in closed form on monomials t^k f(D) Mـ.
SdElem apply_sigma(const AntiInvolution& sigma, const SdElem& A);

// (A - sigma(A))/2; always satisfies sigma(result) = -result.
SdElem fixed_part(const AntiInvolution& sigma, const SdElem& A);

// Spectral-flow automorphisms.
struct FlowAut {
  enum class Kind { Sharp, Theta } kind;
  Rat param;  // alpha (nonzero) for Sharp, s for Theta

  static FlowAut sharp(Rat alpha) { return {Kind::Sharp, std::move(alpha)}; }
  static FlowAut theta(Rat s) { return {Kind::Theta, std::move(s)}; }
};

SdElem apply_flow(const FlowAut& flow, const SdElem& A);

struct FlowConjugationResult {
  bool ok = false;
  AntiInvolution transformed;  // valid when ok
  std::string detail;          // mismatch report or unsupported note
};

// Verifies sigma . flow = flow' . sigma = sigma' on a generator panel and
// random monomials; returns the matched parameter transformation.
FlowConjugationResult flow_conjugation_check(const AntiInvolution& sigma,
                                             const FlowAut& flow,
                                             unsigned seed = 1);

// Fixed subalgebras at the canonical parameters a = -1, b = 1.
enum class SubalgId { Zero, PP, PM, MP, MM };

AntiInvolution defining_sigma(SubalgId id);

// Canonical spanning elements. For Zero: label in {'0','1','x'} with n >= 1
// for '0','1' and n >= 0 for 'x'. For the four P families: label in
// {'.','+','-'} with n >= 0.
SdElem spanning_generator(SubalgId id, char label, int n, int k);

// Membership of every graded component in the subalgebra's normal form.
bool graded_membership(SubalgId id, const SdElem& A);

// Same predicate through sigma(A) = -A on the non-central part.
bool graded_membership_sigma(SubalgId id, const SdElem& A);

}  // namespace sdop
