#include "qsurf/oracles.hpp"

namespace qsurf::oracles {

namespace {

using localint::LocalCurve;

// Monomials x^i y^j with i + j < n, grouped by total degree.
int monomial_index(int i, int j) {
  const int d = i + j;
  return d * (d + 1) / 2 + j;
}

// dim Q[[x,y]]/(I + m^n) with I = (gens): count of monomials below degree n
// minus the rank of the span of all monomial multiples of the generators,
// truncated below degree n.
long long quotient_dim_truncated(const std::vector<LocalCurve>& gens, int n) {
  const int monomials = n * (n + 1) / 2;
  QMatrix rows;
  for (const LocalCurve& g : gens) {
    for (int a = 0; a < n; ++a) {
      for (int c = 0; a + c < n; ++c) {
        QVec row(monomials, Rat(0));
        bool nonzero = false;
        for (const auto& [key, coeff] : g.terms) {
          const int i = key.first + a, j = key.second + c;
          if (i + j >= n) continue;
          row[monomial_index(i, j)] += coeff;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  return monomials - rank_of(std::move(rows));
}

}  // namespace

long long quotient_ring_mult(const localint::LocalCurve& b, const localint::GraphCurve& d, int n_cap) {
  const LocalCurve dcurve = localint::graph_as_curve(d, std::max(b.degree_cap, n_cap + 1));
  if (b.truncated) throw cap_exhausted("quotient-ring oracle needs an exact branch polynomial");
  const std::vector<LocalCurve> gens{b, dcurve};
  long long prev = -1;
  for (int n = 2; n <= n_cap; ++n) {
    const long long q = quotient_dim_truncated(gens, n);
    if (q == prev) return q;
    prev = q;
  }
  throw cap_exhausted("quotient-ring dimension did not stabilize (infinite intersection?)");
}

}  // namespace qsurf::oracles
