#pragma once

// ADE root and weight lattices in explicit coordinate models:
//   A_n: e_0..e_n orthonormal, simple roots E_i = e_{i-1} - e_i;
//   D_n: e_1..e_n orthonormal, E_i = e_i - e_{i+1}, E_n = e_{n-1} + e_n;
//   E_n: basis (h, e_1..e_n) with h.h = -1, e_i.e_j = delta_ij (the negative
//        of the del Pezzo intersection pairing), E_i = e_i - e_{i+1},
//        E_n = h - e_1 - e_2 - e_3.
// Node labels follow the dual graphs: the E-branch node is attached at
// position 3, the D-branch sits at the tail (n-1, n both attached to n-2).

#include "qsurf/numeric.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qsurf::ade {

enum class Family { A, D, E };

std::string family_name(Family f);

// Weights and roots are exact rational vectors in the ambient model.
using Weight = QVec;

struct RootSystem {
  std::string name;  // "A3", "E7", "A2+A3"
  std::vector<std::pair<Family, int>> factors;
  int rank = 0;
  int ambient_dim = 0;
  QVec form_diag;                            // diagonal of the ambient form
  std::vector<Weight> simple_roots;          // paper labeling, 1-based outside
  std::vector<std::vector<Int>> cartan;      // <E_i, E_j>
  std::vector<Weight> fweights;              // <w_i, E_j> = delta_ij
  QMatrix fw_gram;                           // <w_i, w_j> = (Cartan^-1)_ij
  std::vector<std::vector<Int>> positive;    // positive roots, simple-root coords
};

// Validates the rank range (A: n >= 1, D: n >= 4, E: n in {6,7,8}), builds
// the coordinate model, enumerates positive roots by norm-2 closure and
// asserts the classical counts.
RootSystem build(Family f, int n);
std::shared_ptr<const RootSystem> build_shared(Family f, int n);

// Orthogonal direct sum; summands keep their order (first factor = first
// block of indices).
RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

// Parses "A3", "D10", "E8", or sums like "A2+A3".
RootSystem parse_system(const std::string& spec);

Rat pair_form(const RootSystem& rs, const Weight& v, const Weight& w);
Rat norm2(const RootSystem& rs, const Weight& w);

const std::vector<Weight>& fundamental_weights(const RootSystem& rs);

// Ambient vector of a positive root given in simple-root coordinates.
Weight root_vector(const RootSystem& rs, const std::vector<Int>& coords);

// Membership in the weight lattice P: all simple-root pairings integral.
bool is_weight(const RootSystem& rs, const Weight& w);

// <w, E_j> for all j; throws if w is not in P.
std::vector<Int> pairing_coords(const RootSystem& rs, const Weight& w);

// Unique weight with the prescribed pairings <w, E_i> = c_i, i.e. sum c_i w_i.
Weight weight_of_divisor(const RootSystem& rs, const std::vector<Int>& intersections);

bool is_dominant(const RootSystem& rs, const Weight& w);

// Fundamental weight w_i (1-based) is minuscule iff every root pairs with it
// in {-1, 0, 1}; in simple-root coordinates that is "the i-th coefficient of
// every positive root is at most 1".
bool is_minuscule(const RootSystem& rs, int i);

// ---- pairing-coordinate machinery (exact integer arithmetic) -------------

// norm^2 of the weight with pairing coordinates m: m^T Cartan^{-1} m.
Rat norm2_of_pairings(const RootSystem& rs, const std::vector<Int>& m);

// Simple-root coordinates of the weight with pairing coordinates m, when
// integral (membership in the root lattice Q).
std::optional<std::vector<Int>> root_lattice_coords(const RootSystem& rs, const std::vector<Int>& m);

// Brute-force weight system of the irreducible representation V_w: closure
// under subtracting E_j along root strings, starting from the highest weight.
// Works in pairing coordinates; requires rank <= 8.
struct WeightSystemStats {
  long long total = 0;     // distinct weights
  long long dominant = 0;  // dominant members
};
WeightSystemStats weight_system(const RootSystem& rs, const std::vector<Int>& highest, long long max_states = 4000000);

// Weyl orbit of the weight with pairing coordinates m (BFS over simple
// reflections). Throws when the orbit exceeds max_size.
std::vector<std::vector<Int>> weyl_orbit(const RootSystem& rs, const std::vector<Int>& m, long long max_size = 2000000);

// All dominant weights (as pairing-coordinate vectors m >= 0) with
// norm^2 <= bound. Exhaustive: the fundamental-weight Gram matrix has
// nonnegative entries, so the norm is monotone in each coordinate.
std::vector<std::vector<Int>> dominant_weights_up_to_norm(const RootSystem& rs, const Rat& bound);

}  // namespace qsurf::ade
