#include "qsurf/flopsim.hpp"

namespace qsurf::flopsim {

FiberState make_state(std::shared_ptr<const ade::RootSystem> system, std::vector<Int> omega_pairings,
                      std::vector<Int> coeffs) {
  if (!system) throw domain_error("null root system");
  const size_t r = system->rank;
  if (omega_pairings.size() != r || coeffs.size() != r)
    throw domain_error("state vectors must have length equal to the rank");
  for (const Int& a : coeffs)
    if (a < 0) throw domain_error("coefficients a_i must be nonnegative");
  return FiberState{std::move(system), std::move(omega_pairings), std::move(coeffs)};
}

std::vector<Int> mu_pairings(const FiberState& s) {
  const auto& rs = *s.system;
  std::vector<Int> m(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    m[j] = s.omega[j];
    for (int i = 0; i < rs.rank; ++i) m[j] -= s.coeffs[i] * rs.cartan[i][j];
  }
  return m;
}

bool mu_dominant(const FiberState& s) {
  for (const Int& v : mu_pairings(s))
    if (v < 0) return false;
  return true;
}

ade::Weight mu_vector(const FiberState& s) {
  const auto& rs = *s.system;
  ade::Weight out(rs.ambient_dim, Rat(0));
  for (int i = 0; i < rs.rank; ++i) {
    for (int k = 0; k < rs.ambient_dim; ++k) {
      out[k] += Rat(s.omega[i]) * rs.fweights[i][k];
      out[k] -= Rat(s.coeffs[i]) * rs.simple_roots[i][k];
    }
  }
  return out;
}

Int coeff_height(const FiberState& s) {
  Int h = 0;
  for (const Int& a : s.coeffs) h += a;
  return h;
}

FiberState flop_step(const FiberState& s, int j) {
  const auto& rs = *s.system;
  if (j < 1 || j > rs.rank) throw domain_error("flop index out of range");
  const std::vector<Int> m = mu_pairings(s);
  const Int pairing = m[j - 1];
  if (pairing >= 0)
    throw domain_error("flop along E_" + std::to_string(j) + " requires <mu, E_j> < 0, got " +
                       int_to_string(pairing));
  FiberState next = s;
  next.coeffs[j - 1] += pairing;
  if (next.coeffs[j - 1] < 0)
    throw domain_error("coefficient a_" + std::to_string(j) +
                       " would become negative: the state is not a weight of V_omega");
  return next;
}

FlopTrace reduce(FiberState s, Policy policy) {
  FlopTrace trace;
  trace.initial = s;
  // Each step lowers sum a_i by at least one.
  Int guard = coeff_height(s) + 1;
  while (true) {
    const std::vector<Int> m = mu_pairings(s);
    int chosen = 0;
    Int chosen_pairing = 0;
    for (int j = 1; j <= s.system->rank; ++j) {
      const Int p = m[j - 1];
      if (p >= 0) continue;
      bool take = false;
      switch (policy) {
        case Policy::SmallestIndex:
          take = chosen == 0;
          break;
        case Policy::LargestIndex:
          take = true;
          break;
        case Policy::MostNegative:
          take = chosen == 0 || p < chosen_pairing;
          break;
      }
      if (take) {
        chosen = j;
        chosen_pairing = p;
      }
    }
    if (chosen == 0) break;
    s = flop_step(s, chosen);
    trace.steps.push_back(chosen);
    if (--guard < 0) throw domain_error("internal: reduction failed to terminate");
  }
  trace.final_dominant = true;
  trace.final_state = std::move(s);
  return trace;
}

namespace {

void decompose_dfs(const ade::RootSystem& rs, const std::vector<Int>& omega, std::vector<Int>& b, int pos,
                   const Int& budget, std::vector<std::vector<Int>>& out) {
  if (pos == rs.rank) {
    for (int j = 0; j < rs.rank; ++j) {
      Int m = omega[j];
      for (int i = 0; i < rs.rank; ++i) m -= b[i] * rs.cartan[i][j];
      if (m < 0) return;
    }
    out.push_back(b);
    return;
  }
  for (Int v = 0; v <= budget; ++v) {
    b[pos] = v;
    decompose_dfs(rs, omega, b, pos + 1, budget - v, out);
  }
  b[pos] = 0;
}

}  // namespace

std::vector<std::vector<Int>> dominant_decompositions(const ade::RootSystem& rs,
                                                      const std::vector<Int>& omega_pairings,
                                                      Int height_bound) {
  if (omega_pairings.size() != static_cast<size_t>(rs.rank))
    throw domain_error("pairing vector length mismatch");
  for (const Int& v : omega_pairings)
    if (v < 0) throw domain_error("dominant_decompositions requires a dominant omega");
  if (height_bound < 0) throw domain_error("height bound must be nonnegative");
  std::vector<std::vector<Int>> out;
  std::vector<Int> b(rs.rank, Int(0));
  decompose_dfs(rs, omega_pairings, b, 0, height_bound, out);
  return out;
}

}  // namespace qsurf::flopsim
