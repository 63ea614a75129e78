#pragma once

// Lattice shadow of the flop-reduction argument: a degenerating curve class
// C + sum a_i E_i is a weight omega_C together with nonnegative coefficients;
// a flop along E_j is the simple reflection s_j, legal exactly when the
// running weight mu = omega - sum a_i E_i pairs negatively with E_j, and it
// strictly decreases a_j. Reduction drives mu into the dominant chamber.

#include "qsurf/ade.hpp"

#include <memory>
#include <vector>

namespace qsurf::flopsim {

// Immutable state. omega and mu are carried as pairing-coordinate vectors
// (<., E_j> for all j); the ambient vectors are recoverable through the
// root system.
struct FiberState {
  std::shared_ptr<const ade::RootSystem> system;
  std::vector<Int> omega;   // pairing coordinates of omega_C, fixed
  std::vector<Int> coeffs;  // a_i >= 0
};

FiberState make_state(std::shared_ptr<const ade::RootSystem> system, std::vector<Int> omega_pairings,
                      std::vector<Int> coeffs);

// Pairing coordinates of mu = omega - sum a_i E_i.
std::vector<Int> mu_pairings(const FiberState& s);
bool mu_dominant(const FiberState& s);
ade::Weight mu_vector(const FiberState& s);
Int coeff_height(const FiberState& s);  // sum a_i

// One flop along E_j (1-based). Requires <mu, E_j> < 0. The new coefficient
// is a_j + <mu, E_j>; if that is negative the state was not a weight of
// V_omega and the call fails rather than clamping.
FiberState flop_step(const FiberState& s, int j);

enum class Policy { SmallestIndex, LargestIndex, MostNegative };

struct FlopTrace {
  FiberState initial;
  FiberState final_state;
  std::vector<int> steps;  // 1-based indices, in order
  bool final_dominant = false;
};

// Flops until mu is dominant. Terminates because sum a_i strictly decreases;
// the final state does not depend on the policy.
FlopTrace reduce(FiberState s, Policy policy = Policy::SmallestIndex);

// All coefficient vectors a >= 0 with sum a_i <= height_bound such that
// omega - sum a_i E_i is dominant, by exhaustive enumeration. Requires omega
// dominant. Ordered lexicographically.
std::vector<std::vector<Int>> dominant_decompositions(const ade::RootSystem& rs,
                                                      const std::vector<Int>& omega_pairings,
                                                      Int height_bound = 12);

}  // namespace qsurf::flopsim
