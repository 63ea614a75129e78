#pragma once

// Exact intersection theory on rational surface models: Hirzebruch surfaces,
// the projective plane, iterated blowups, canonical classes, adjunction,
// Riemann-Roch, section counts on F_d, and double-cover pullback rules.

#include "qsurf/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsurf::pic {

// Free lattice with labelled basis, integral intersection form, and a
// distinguished canonical class. A value type: blowing up returns a new
// lattice, nothing is mutated.
struct SurfaceLattice {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Int>> gram;
  std::vector<Int> canonical;
  int chi_structure = 1;  // chi(O); 1 for every rational model built here

  int rank() const { return static_cast<int>(basis.size()); }
  int index_of(const std::string& label) const;  // -1 if absent
  void validate() const;
};

struct DivisorClass {
  std::string lattice;  // owning lattice name
  std::vector<Int> coeffs;
};

// Stamps a coefficient vector with the lattice it lives on.
DivisorClass cls(const SurfaceLattice& l, std::vector<Int> coeffs);
DivisorClass canonical_class(const SurfaceLattice& l);

// F_d with basis (D0, G): D0^2 = -d, D0.G = 1, G^2 = 0, K = -2 D0 - (d+2) G.
SurfaceLattice hirzebruch(int d);
// P^2 with basis (H): H^2 = 1, K = -3H.
SurfaceLattice projective_plane();

// One blowup: rank + 1, new exceptional class E with E^2 = -1 orthogonal to
// pullbacks, K -> pullback(K) + E.
struct Blowup {
  SurfaceLattice lattice;
  DivisorClass exceptional;

  DivisorClass pullback(const DivisorClass& on_base) const;
};
Blowup blow_up(const SurfaceLattice& l, const std::string& label);

// Pullback of `c` (a class on an ancestor of `target`) minus sum m_i E_i for
// the named exceptional labels.
DivisorClass proper_transform(const SurfaceLattice& target, const DivisorClass& c,
                              const std::map<std::string, Int>& multiplicities);

Int intersect(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b);
Int self_int(const SurfaceLattice& l, const DivisorClass& a);

// p_a = D(D+K)/2 + 1, exact.
Rat adjunction_genus(const SurfaceLattice& l, const DivisorClass& d);

// chi(D) = chi(O) + D(D-K)/2.
Int riemann_roch_chi(const SurfaceLattice& l, const DivisorClass& d);

// h^0(F_d, a D0 + b G) = sum_{k=0..a} max(0, b - kd + 1).
Int h0_hirzebruch(int d, const Int& a, const Int& b);

// Rational coordinates of `target` in the given classes (a basis of the
// lattice tensored with Q). Throws if the classes are dependent.
QVec express(const SurfaceLattice& l, const DivisorClass& target, const std::vector<DivisorClass>& in_basis);

// Symbolic double-cover rules for f: Y -> Z branched over B ~ 2L. No
// upstairs lattice is materialized; everything is pushed down to Z.
struct CoverPullback {
  DivisorClass k_downstairs;  // K_Y = f^*(K_Z + L)
  Int k_dot_pullback;         // K_Y . f^*(cls) = 2 (K_Z + L).cls
  Int pullback_self_int;      // (f^* cls)^2 = 2 cls^2
};
CoverPullback double_cover_pullback(const SurfaceLattice& l, const DivisorClass& c, const DivisorClass& branch_half);

// f^*A . f^*B = 2 (A.B).
Int cover_pullback_dot(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b);

// Branch-curve constraint for the double covers of F_d one above the Noether
// line: p_g >= max(d+4, 2d-2) and p_g - d even.
bool horikawa_branch_constraints(int d, const Int& p_g);

// Self-intersection of one component of the split preimage of the diagonal,
// solved symbolically from the two expansions of (C + C')^2; the separation
// numbers cancel, the result is -4 for every admissible multiset.
Rat even_case_c_squared(const std::vector<Int>& separation_numbers);

}  // namespace qsurf::pic
