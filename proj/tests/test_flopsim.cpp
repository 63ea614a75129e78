#include "qsurf/flopsim.hpp"

#include "qsurf/tables.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qsurf;
using namespace qsurf::flopsim;

namespace {

// Random state: a dominant omega pushed around by a random Weyl word; the
// difference omega - w(omega) always has nonnegative integral root
// coordinates, which are the coefficients a_i.
FiberState random_state(std::shared_ptr<const ade::RootSystem> rs, std::mt19937_64& rng) {
  std::vector<Int> omega(rs->rank);
  for (auto& v : omega) v = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<Int> mu = omega;
  const int word = std::uniform_int_distribution<int>(0, 10)(rng);
  for (int s = 0; s < word; ++s) {
    const int j = std::uniform_int_distribution<int>(0, rs->rank - 1)(rng);
    std::vector<Int> next(rs->rank);
    for (int i = 0; i < rs->rank; ++i) next[i] = mu[i] - mu[j] * rs->cartan[j][i];
    mu = std::move(next);
  }
  std::vector<Int> diff(rs->rank);
  for (int i = 0; i < rs->rank; ++i) diff[i] = omega[i] - mu[i];
  const auto coords = ade::root_lattice_coords(*rs, diff);
  REQUIRE(coords.has_value());
  return make_state(std::move(rs), std::move(omega), *coords);
}

}  // namespace

TEST_CASE("single flop steps") {
  const auto a1 = ade::build_shared(ade::Family::A, 1);
  const auto s = make_state(a1, {1}, {1});
  CHECK(mu_pairings(s) == std::vector<Int>{-1});
  const auto t = flop_step(s, 1);
  CHECK(t.coeffs == std::vector<Int>{0});
  CHECK(mu_pairings(t) == std::vector<Int>{1});

  // Flopping where the pairing is nonnegative is rejected.
  CHECK_THROWS_AS(flop_step(t, 1), domain_error);
  CHECK_THROWS_AS(flop_step(s, 2), domain_error);
}

TEST_CASE("states outside the weight system are a hard error") {
  const auto a1 = ade::build_shared(ade::Family::A, 1);
  // omega = 0 with a = (1): mu = -alpha, pairing -2, and a would drop to -1.
  const auto s = make_state(a1, {0}, {1});
  CHECK(mu_pairings(s)[0] == -2);
  CHECK_THROWS_AS(flop_step(s, 1), domain_error);
  CHECK_THROWS_AS(make_state(a1, {1}, {-1}), domain_error);
}

TEST_CASE("golden traces") {
  {
    // A2, omega the highest root, a = (1, 0): one flop restores a = 0.
    const auto a2 = ade::build_shared(ade::Family::A, 2);
    const auto trace = reduce(make_state(a2, {1, 1}, {1, 0}));
    CHECK(trace.steps == std::vector<int>{1});
    CHECK(trace.final_state.coeffs == std::vector<Int>{0, 0});
    CHECK(mu_pairings(trace.final_state) == std::vector<Int>{1, 1});
    CHECK(trace.final_dominant);
  }
  {
    // A3, omega = w_2 (minuscule), a = (0,1,0).
    const auto a3 = ade::build_shared(ade::Family::A, 3);
    const auto trace = reduce(make_state(a3, {0, 1, 0}, {0, 1, 0}));
    CHECK(trace.steps == std::vector<int>{2});
    CHECK(trace.final_state.coeffs == std::vector<Int>{0, 0, 0});
  }
  {
    // Already dominant: empty trace.
    const auto d4 = ade::build_shared(ade::Family::D, 4);
    const auto trace = reduce(make_state(d4, {1, 0, 0, 0}, {0, 0, 0, 0}));
    CHECK(trace.steps.empty());
  }
}

TEST_CASE("reduction terminates with strictly decreasing coefficient height") {
  std::mt19937_64 rng(37);
  const auto e6 = ade::build_shared(ade::Family::E, 6);
  for (int trial = 0; trial < 50; ++trial) {
    FiberState s = random_state(e6, rng);
    Int height = coeff_height(s);
    const auto trace = reduce(s);
    // Replay the recorded steps and confirm monotonicity.
    FiberState cur = trace.initial;
    for (int j : trace.steps) {
      cur = flop_step(cur, j);
      CHECK(coeff_height(cur) < height);
      height = coeff_height(cur);
    }
    CHECK(cur.coeffs == trace.final_state.coeffs);
    CHECK(mu_dominant(trace.final_state));
  }
}

TEST_CASE("final weight lies in the Weyl orbit of the initial weight") {
  std::mt19937_64 rng(41);
  const auto d5 = ade::build_shared(ade::Family::D, 5);
  for (int trial = 0; trial < 25; ++trial) {
    const FiberState s = random_state(d5, rng);
    const auto trace = reduce(s);
    CHECK(ade::norm2_of_pairings(*d5, mu_pairings(s)) ==
          ade::norm2_of_pairings(*d5, mu_pairings(trace.final_state)));
    const auto orbit = ade::weyl_orbit(*d5, mu_pairings(s));
    const auto mf = mu_pairings(trace.final_state);
    CHECK(std::find(orbit.begin(), orbit.end(), mf) != orbit.end());
  }
}

TEST_CASE("tie-break policies agree on the final state") {
  std::mt19937_64 rng(43);
  const auto sum = std::make_shared<const ade::RootSystem>(
      ade::direct_sum(ade::build(ade::Family::A, 2), ade::build(ade::Family::A, 3)));
  for (int trial = 0; trial < 50; ++trial) {
    const FiberState s = random_state(sum, rng);
    const auto t1 = reduce(s, Policy::SmallestIndex);
    const auto t2 = reduce(s, Policy::LargestIndex);
    const auto t3 = reduce(s, Policy::MostNegative);
    CHECK(t1.final_state.coeffs == t2.final_state.coeffs);
    CHECK(t1.final_state.coeffs == t3.final_state.coeffs);
    CHECK(mu_pairings(t1.final_state) == mu_pairings(t3.final_state));
  }
}

TEST_CASE("direct sums reduce componentwise") {
  const auto sum = std::make_shared<const ade::RootSystem>(
      ade::direct_sum(ade::build(ade::Family::A, 1), ade::build(ade::Family::A, 1)));
  // Two nodes on the marked fiber: omega pairs 2 with each block. The state
  // is the lowest weight of each orbit factor.
  const auto trace = reduce(make_state(sum, {2, 2}, {2, 2}));
  CHECK(trace.final_state.coeffs == std::vector<Int>{0, 0});
  CHECK(trace.steps == std::vector<int>{1, 2});

  // A state that is a weight of V_omega but not in the Weyl orbit of omega
  // legitimately stalls at a nonzero dominant decomposition.
  const auto stalled = reduce(make_state(sum, {2, 2}, {1, 2}));
  CHECK(mu_dominant(stalled.final_state));
  CHECK(stalled.final_state.coeffs == std::vector<Int>{1, 0});
}

TEST_CASE("dominant decompositions") {
  {
    // omega = 0: subtracting any nonzero nonnegative root combination leaves
    // the dominant chamber.
    const auto a3 = ade::build(ade::Family::A, 3);
    const auto all = dominant_decompositions(a3, {0, 0, 0}, 10);
    CHECK(all == std::vector<std::vector<Int>>{{0, 0, 0}});
  }
  {
    // Minuscule omega: only a = 0 at any height.
    const auto a3 = ade::build(ade::Family::A, 3);
    const auto all = dominant_decompositions(a3, {0, 1, 0}, 8);
    CHECK(all == std::vector<std::vector<Int>>{{0, 0, 0}});
  }
  {
    // Norm-4 table weight 2e_1 on D_5: interior dominant decompositions
    // exist, but the side condition mu^2 = 4 singles out a = 0.
    const auto d5 = ade::build(ade::Family::D, 5);
    const std::vector<Int> omega{2, 0, 0, 0, 0};
    const auto all = dominant_decompositions(d5, omega, 10);
    CHECK(all.size() > 1);
    int with_norm4 = 0;
    for (const auto& b : all) {
      std::vector<Int> m(5);
      for (int j = 0; j < 5; ++j) {
        m[j] = omega[j];
        for (int i = 0; i < 5; ++i) m[j] -= b[i] * d5.cartan[i][j];
      }
      if (ade::norm2_of_pairings(d5, m) == 4) {
        ++with_norm4;
        CHECK(b == std::vector<Int>(5, Int(0)));
      }
    }
    CHECK(with_norm4 == 1);
  }
  {
    const auto a2 = ade::build(ade::Family::A, 2);
    CHECK_THROWS_AS(dominant_decompositions(a2, {-1, 0}, 5), domain_error);
  }
}

TEST_CASE("every orbit state of a table weight reduces to a = 0") {
  // Small spot check here; the full sweep runs in the acceptance suite.
  for (const auto& row : tables::odd_case_rows(5)) {
    const auto rs = ade::build_shared(row.family, row.n);
    const std::vector<Int> omega = tables::row_intersections(row);
    for (const auto& member : ade::weyl_orbit(*rs, omega)) {
      std::vector<Int> diff(rs->rank);
      for (int i = 0; i < rs->rank; ++i) diff[i] = omega[i] - member[i];
      const auto coords = ade::root_lattice_coords(*rs, diff);
      REQUIRE(coords.has_value());
      Int height = 0;
      for (const Int& b : *coords) height += b;
      if (height > 6) continue;
      const auto trace = reduce(make_state(rs, omega, *coords));
      CHECK(trace.final_state.coeffs == std::vector<Int>(rs->rank, Int(0)));
    }
  }
}
