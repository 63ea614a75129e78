#include "qsurf/ade.hpp"
#include "qsurf/tables.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace qsurf;
using namespace qsurf::ade;

namespace {

Weight evec(int dim, int i, int sign = 1) {
  Weight v(dim, Rat(0));
  v[i] = sign;
  return v;
}

}  // namespace

TEST_CASE("coordinate models") {
  const RootSystem a3 = build(Family::A, 3);
  CHECK(a3.simple_roots[0] == QVec{1, -1, 0, 0});
  CHECK(a3.simple_roots[1] == QVec{0, 1, -1, 0});
  CHECK(a3.simple_roots[2] == QVec{0, 0, 1, -1});
  CHECK(a3.cartan == std::vector<std::vector<Int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});

  const RootSystem d4 = build(Family::D, 4);
  CHECK(d4.simple_roots[3] == QVec{0, 0, 1, 1});

  const RootSystem e6 = build(Family::E, 6);
  CHECK(e6.simple_roots[5] == QVec{1, -1, -1, -1, 0, 0, 0});
  CHECK(e6.form_diag[0] == -1);

  CHECK_THROWS_AS(build(Family::D, 3), domain_error);
  CHECK_THROWS_AS(build(Family::E, 5), domain_error);
  CHECK_THROWS_AS(build(Family::A, 0), domain_error);
}

TEST_CASE("cartan matrices follow the dual graphs") {
  std::vector<std::pair<Family, int>> systems{{Family::A, 5}, {Family::D, 6}, {Family::E, 6},
                                              {Family::E, 7}, {Family::E, 8}};
  for (auto [f, n] : systems) {
    const RootSystem rs = build(f, n);
    for (int i = 0; i < n; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      CHECK(norm2(rs, rs.simple_roots[i]) == 2);
      for (int j = i + 1; j < n; ++j) {
        bool edge = false;
        if (f == Family::A) edge = j == i + 1;
        if (f == Family::D) edge = (j == i + 1 && j <= n - 2) || (i == n - 3 && j == n - 1);
        if (f == Family::E) edge = (j == i + 1 && j <= n - 2) || (i == 2 && j == n - 1);
        CHECK(rs.cartan[i][j] == (edge ? -1 : 0));
      }
    }
  }
}

TEST_CASE("positive root counts") {
  CHECK(build(Family::A, 3).positive.size() == 6);
  CHECK(build(Family::D, 4).positive.size() == 12);
  CHECK(build(Family::D, 5).positive.size() == 20);
  CHECK(build(Family::E, 6).positive.size() == 36);
  CHECK(build(Family::E, 7).positive.size() == 63);
  CHECK(build(Family::E, 8).positive.size() == 120);
}

TEST_CASE("fundamental weights pair as a dual basis") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}}) {
    const RootSystem rs = build(f, n);
    const auto& fw = fundamental_weights(rs);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(pair_form(rs, fw[i], rs.simple_roots[j]) == (i == j ? 1 : 0));
  }

  // A_n: w_1 = e_0 - (1/(n+1)) sum e_k.
  for (int n : {2, 5}) {
    const RootSystem an = build(Family::A, n);
    Weight expected(n + 1, Rat(-1, n + 1));
    expected[0] += 1;
    CHECK(fundamental_weights(an)[0] == expected);
  }
}

TEST_CASE("weights of divisor classes") {
  for (int n : {2, 4, 7}) {
    const RootSystem an = build(Family::A, n);
    std::vector<Int> data(n, Int(0));
    data[0] = data[n - 1] = 1;
    if (n == 1) data[0] = 2;
    Weight expected = evec(n + 1, 0);
    expected[n] = -1;
    CHECK(weight_of_divisor(an, data) == expected);
    CHECK(norm2(an, expected) == 2);
  }
  {
    const RootSystem e8 = build(Family::E, 8);
    std::vector<Int> data(8, Int(0));
    data[6] = 1;  // C.E_7 = 1
    Weight expected(9, Rat(-1));
    expected[0] = 3;
    expected[8] = -2;
    CHECK(weight_of_divisor(e8, data) == expected);
  }
  {
    const RootSystem a2 = build(Family::A, 2);
    CHECK(weight_of_divisor(a2, {0, 0}) == Weight(3, Rat(0)));
    CHECK_THROWS_AS(weight_of_divisor(a2, {1}), domain_error);
  }
}

TEST_CASE("weight_of_divisor is linear") {
  const RootSystem d5 = build(Family::D, 5);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> u(5), v(5), sum(5);
    for (int i = 0; i < 5; ++i) {
      u[i] = std::uniform_int_distribution<int>(-3, 3)(rng);
      v[i] = std::uniform_int_distribution<int>(-3, 3)(rng);
      sum[i] = u[i] + v[i];
    }
    const Weight wu = weight_of_divisor(d5, u), wv = weight_of_divisor(d5, v);
    Weight ws(wu.size());
    for (size_t i = 0; i < wu.size(); ++i) ws[i] = wu[i] + wv[i];
    CHECK(weight_of_divisor(d5, sum) == ws);
  }
}

TEST_CASE("norms") {
  const RootSystem d6 = build(Family::D, 6);
  Weight two_e1 = evec(6, 0);
  two_e1[0] = 2;
  CHECK(norm2(d6, two_e1) == 4);
  CHECK(norm2(d6, Weight(6, Rat(0))) == 0);
}

TEST_CASE("dominance") {
  const RootSystem a2 = build(Family::A, 2);
  for (const Weight& w : fundamental_weights(a2)) CHECK(is_dominant(a2, w));
  Weight neg = fundamental_weights(a2)[0];
  for (Rat& v : neg) v = -v;
  CHECK_FALSE(is_dominant(a2, neg));

  const RootSystem a4 = build(Family::A, 4);
  Weight w = evec(5, 0);
  w[4] = -1;
  CHECK(is_dominant(a4, w));
}

TEST_CASE("minuscule detection") {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem an = build(Family::A, n);
    for (int i = 1; i <= n; ++i) CHECK(is_minuscule(an, i));
  }
  const RootSystem d5 = build(Family::D, 5);
  for (int i = 1; i <= 5; ++i) CHECK(is_minuscule(d5, i) == (i == 1 || i == 4 || i == 5));
  const RootSystem e7 = build(Family::E, 7);
  for (int i = 1; i <= 7; ++i) CHECK(is_minuscule(e7, i) == (i == 6));
  const RootSystem e8 = build(Family::E, 8);
  for (int i = 1; i <= 8; ++i) CHECK_FALSE(is_minuscule(e8, i));
}

TEST_CASE("weight systems by string closure") {
  const RootSystem a2 = build(Family::A, 2);
  // Adjoint representation: six roots and zero; two dominant members.
  const auto adjoint = weight_system(a2, {1, 1});
  CHECK(adjoint.total == 7);
  CHECK(adjoint.dominant == 2);

  const RootSystem a3 = build(Family::A, 3);
  const auto minuscule = weight_system(a3, {0, 1, 0});
  CHECK(minuscule.total == 6);
  CHECK(minuscule.dominant == 1);

  const RootSystem e6 = build(Family::E, 6);
  const auto fundamental27 = weight_system(e6, {1, 0, 0, 0, 0, 0});
  CHECK(fundamental27.total == 27);
  CHECK(fundamental27.dominant == 1);
}

TEST_CASE("weyl orbits") {
  const RootSystem a2 = build(Family::A, 2);
  CHECK(weyl_orbit(a2, {1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, {1, 1}).size() == 6);
  const RootSystem d4 = build(Family::D, 4);
  const auto theta = pairing_coords(d4, Weight{1, 1, 0, 0});
  CHECK(weyl_orbit(d4, theta).size() == 24);
}

TEST_CASE("root lattice membership") {
  const RootSystem a2 = build(Family::A, 2);
  CHECK(root_lattice_coords(a2, {1, 1}).has_value());   // the highest root
  CHECK_FALSE(root_lattice_coords(a2, {1, 0}).has_value());  // w_1 is not in Q
}

TEST_CASE("direct sums model two singularities on the marked curve") {
  const RootSystem sum = direct_sum(build(Family::A, 1), build(Family::A, 1));
  CHECK(sum.rank == 2);
  CHECK(sum.cartan == std::vector<std::vector<Int>>{{2, 0}, {0, 2}});

  // omega_C = (e_0 - e_1) + (e_0 - e_1)': the two nodal contributions are
  // orthogonal norm-2 root vectors summing to a norm-4 dominant weight.
  const Weight omega = weight_of_divisor(sum, {2, 2});
  CHECK(norm2(sum, omega) == 4);
  const Weight b = root_vector(sum, {1, 0});
  const Weight c = root_vector(sum, {0, 1});
  CHECK(norm2(sum, b) == 2);
  CHECK(norm2(sum, c) == 2);
  CHECK(pair_form(sum, b, c) == 0);
  Weight recombined(b.size());
  for (size_t i = 0; i < b.size(); ++i) recombined[i] = b[i] + c[i];
  CHECK(omega == recombined);
}

TEST_CASE("system spec parsing") {
  CHECK(parse_system("E7").name == "E7");
  CHECK(parse_system("A2+D4").rank == 6);
  CHECK_THROWS_AS(parse_system("Q3"), domain_error);
  CHECK_THROWS_AS(parse_system(""), domain_error);
}

// Up to the Weyl group, the dominant weights of norm 2 or 4 in the root
// lattice are exactly the ones the intersection table realizes. For D_4 the
// triality symmetry identifies the three norm-4 candidates with 2e_1.
TEST_CASE("norm 2 and 4 dominant weights in the root lattice match the table") {
  auto realized = [](Family f, int n) {
    std::set<std::vector<Int>> out;
    for (const auto& row : tables::odd_case_rows(12)) {
      if (row.family != f || row.n != n) continue;
      const RootSystem rs = build(f, n);
      out.insert(pairing_coords(rs, row.expected));
    }
    return out;
  };
  auto computed = [](Family f, int n) {
    const RootSystem rs = build(f, n);
    std::set<std::vector<Int>> out;
    for (const auto& m : dominant_weights_up_to_norm(rs, 4)) {
      const Rat nn = norm2_of_pairings(rs, m);
      if (nn != 2 && nn != 4) continue;
      if (!root_lattice_coords(rs, m)) continue;  // stay in omega_C's coset
      out.insert(m);
    }
    return out;
  };

  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::A, 6},
           {Family::D, 5}, {Family::D, 6}, {Family::E, 6}}) {
    CHECK(computed(f, n) == realized(f, n));
  }

  // D_4: quotient by the diagram symmetry permuting the three outer nodes.
  {
    const auto canon = [](std::vector<Int> m) {
      std::vector<std::vector<Int>> images;
      std::vector<int> legs{0, 2, 3};
      std::sort(legs.begin(), legs.end());
      do {
        std::vector<Int> img(4);
        img[1] = m[1];
        img[legs[0]] = m[0];
        img[legs[1]] = m[2];
        img[legs[2]] = m[3];
        images.push_back(img);
      } while (std::next_permutation(legs.begin(), legs.end()));
      return *std::min_element(images.begin(), images.end());
    };
    std::set<std::vector<Int>> got, want;
    for (const auto& m : computed(Family::D, 4)) got.insert(canon(m));
    for (const auto& m : realized(Family::D, 4)) want.insert(canon(m));
    CHECK(got == want);
  }
}

TEST_CASE("table rows are dominant with the stated norms") {
  for (const auto& row : tables::odd_case_rows(9)) {
    const RootSystem rs = build(row.family, row.n);
    const Weight w = weight_of_divisor(rs, tables::row_intersections(row));
    CHECK(w == row.expected);
    CHECK(is_dominant(rs, w));
    CHECK(norm2(rs, w) == (row.mult <= 3 ? 2 : 4));
  }
}
