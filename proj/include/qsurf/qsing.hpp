#pragma once

// Hirzebruch-Jung continued fraction arithmetic and the calculus of T- and
// Wahl strings: expansion, recognition, recursive generation, discrepancies,
// and the numerical length bounds for stable surfaces close to the Noether
// line.

#include "qsurf/numeric.hpp"

#include <utility>
#include <vector>

namespace qsurf::qsing {

// Reduced fraction p/q with p > q >= 1, the admissible input of hj_expand.
struct Fraction {
  Int num;
  Int den;

  // Normalizes by gcd; rejects num <= den or den < 1.
  Fraction(Int numerator, Int denominator);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Exceptional string [b_1..b_r] of a cyclic quotient resolution; b_i = -C_i^2.
using TString = std::vector<Int>;

TString reversed(const TString& t);

// Sum of (b_i - 2); equals r + 1 exactly on Wahl strings.
Int sum_defect(const TString& t);

enum class SingKind { NotT, T, Wahl };

// T(d, n, a) is the cyclic quotient 1/(d n^2)(1, d n a - 1); Wahl is d = 1.
// Parameters are reported for the lexicographic canonical orientation of the
// string, so (n, a) and the reversed string's (n, a') collapse to one class.
struct SingularityClass {
  SingKind kind = SingKind::NotT;
  Int d = 0;
  Int n = 0;
  Int a = 0;

  friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

struct DiscrepancyVector {
  QVec values;  // a_i with K_X = phi^* K_W + sum a_i C_i; each in (-1, 0]
};

// (K^2, p_g, q, chi) bundle with chi = 1 - q + p_g enforced.
struct NumericalInvariants {
  Int k_squared;
  Int p_g;
  Int q;
  Int chi;

  NumericalInvariants(Int k2, Int pg, Int irr);
  // K^2 = 2 p_g - 4 (the Noether line) and K^2 = 2 p_g - 3 (one above it).
  bool on_noether_line() const;
  bool one_above_noether_line() const;
};

// Continued fraction p/q = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2.
TString hj_expand(const Fraction& f);

// Exact inverse of hj_expand; rejects entries < 2.
Fraction hj_eval(const TString& t);

// Resolution string of the Wahl singularity 1/n^2(1, na-1).
// Requires n >= 2, 1 <= a < n, gcd(n, a) = 1.
TString wahl_string(const Int& n, const Int& a);

// Wahl recognition by reverse-applying the two generation rules down to [4];
// T recognition by trial factorization d n^2 = numerator. Canonicalizes the
// orientation first (lexicographically smaller of t and its reverse).
SingularityClass classify(const TString& t);

// Independent cross-check: does hj_eval(t) have the shape n^2/(na-1)?
// Kept separate from the descent-based recognition on purpose.
bool wahl_fraction_check(const TString& t);

// The two length-(r+1) Wahl strings generated from a length-r Wahl string:
// [2, b_1, ..., b_{r-1}, b_r + 1] and [b_1 + 1, b_2, ..., b_r, 2].
std::pair<TString, TString> generate_children(const TString& t);

// All Wahl strings of length <= r_max, found by iterating generate_children
// from [4]. Sorted by (length, entries), deduplicated.
std::vector<TString> enumerate_wahl(int r_max);

// Unique exact solution a of sum_j a_j (C_j . C_i) = b_i - 2 with the
// tridiagonal string intersection form.
DiscrepancyVector discrepancies(const TString& t);

// Possible lengths {1..max} of the unique Wahl singularity on a stable
// surface W with minimal model S of the resolution:
//   kw2 == ks2 + 1                        -> {1, 2}
//   additionally on the K^2 = 2p_g - 3 line and S of general type -> {1}
//   otherwise                             -> {1 .. 400 ks2^4}
// Requires kw2 > ks2.
struct LengthBound {
  Int max;
  bool contains(const Int& r) const { return r >= 1 && r <= max; }
  friend bool operator==(const LengthBound&, const LengthBound&) = default;
};

LengthBound length_bound(const Int& kw2, const Int& ks2, bool on_line, bool general_type);

}  // namespace qsurf::qsing
