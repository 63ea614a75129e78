#include "qsurf/pic.hpp"

#include <doctest.h>

#include <random>

using namespace qsurf;
using namespace qsurf::pic;

TEST_CASE("hirzebruch surface lattices") {
  const SurfaceLattice f2 = hirzebruch(2);
  CHECK(f2.canonical == std::vector<Int>{-2, -4});
  // K = -2 Delta with Delta = D0 + 2G.
  const DivisorClass delta2 = cls(f2, {1, 2});
  CHECK(canonical_class(f2).coeffs == std::vector<Int>{-2, -4});
  CHECK(self_int(f2, delta2) == 2);

  const SurfaceLattice f0 = hirzebruch(0);
  CHECK(self_int(f0, cls(f0, {1, 1})) == 2);
  CHECK_THROWS_AS(hirzebruch(-1), domain_error);
}

TEST_CASE("blowup bookkeeping") {
  // F2 blown up at two fiber points: K = -2 D0 - 4 D~ - 3 E1 - 3 E2.
  const SurfaceLattice f2 = hirzebruch(2);
  const Blowup b1 = blow_up(f2, "E1");
  const Blowup b2 = blow_up(b1.lattice, "E2");
  const SurfaceLattice& zt = b2.lattice;
  const auto k = canonical_class(zt);
  const auto dt = proper_transform(zt, cls(f2, {0, 1}), {{"E1", 1}, {"E2", 1}});
  const QVec coords = express(zt, k, {cls(zt, {1, 0, 0, 0}), dt, cls(zt, {0, 0, 1, 0}), cls(zt, {0, 0, 0, 1})});
  CHECK(coords == QVec{Rat(-2), Rat(-4), Rat(-3), Rat(-3)});

  // F0 blown up twice: K = -2 G1 - 2 G2 + E1 + E2.
  const SurfaceLattice f0 = hirzebruch(0);
  const SurfaceLattice z2 = blow_up(blow_up(f0, "E1").lattice, "E2").lattice;
  CHECK(z2.canonical == std::vector<Int>{-2, -2, 1, 1});

  // One blowup of P^2 drops K^2 from 9 to 8.
  const SurfaceLattice p2 = projective_plane();
  CHECK(self_int(p2, canonical_class(p2)) == 9);
  const SurfaceLattice p2b = blow_up(p2, "E1").lattice;
  CHECK(self_int(p2b, canonical_class(p2b)) == 8);

  CHECK_THROWS_AS(blow_up(f2, "D0"), domain_error);
}

TEST_CASE("blowup preserves pulled-back intersections and separates E") {
  std::mt19937_64 rng(23);
  const SurfaceLattice f1 = hirzebruch(1);
  const Blowup b = blow_up(f1, "E");
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> u(2), v(2);
    for (auto& x : u) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    for (auto& x : v) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    const auto cu = cls(f1, u), cv = cls(f1, v);
    CHECK(intersect(b.lattice, b.pullback(cu), b.pullback(cv)) == intersect(f1, cu, cv));
    CHECK(intersect(b.lattice, b.pullback(cu), b.exceptional) == 0);
  }
  CHECK(self_int(b.lattice, b.exceptional) == -1);
}

TEST_CASE("proper transforms") {
  const SurfaceLattice f2 = hirzebruch(2);
  SurfaceLattice top = blow_up(blow_up(f2, "E1").lattice, "E2").lattice;

  const auto bt = proper_transform(top, cls(f2, {6, 12}), {{"E1", 2}, {"E2", 2}});
  CHECK(self_int(top, bt) == 64);  // 72 - 8

  const auto dt = proper_transform(top, cls(f2, {0, 1}), {{"E1", 1}, {"E2", 1}});
  CHECK(self_int(top, dt) == -2);

  const auto pullback_only = proper_transform(top, cls(f2, {6, 12}), {});
  CHECK(self_int(top, pullback_only) == self_int(f2, cls(f2, {6, 12})));

  CHECK_THROWS_AS(proper_transform(top, cls(f2, {0, 1}), {{"E9", 1}}), domain_error);
  CHECK_THROWS_AS(proper_transform(top, cls(f2, {0, 1}), {{"D0", 1}}), domain_error);
}

TEST_CASE("intersection numbers") {
  const SurfaceLattice f2 = hirzebruch(2);
  const auto delta = cls(f2, {1, 2});
  const auto six_delta = cls(f2, {6, 12});
  CHECK(intersect(f2, six_delta, delta) == 12);
  CHECK(intersect(f2, six_delta, cls(f2, {0, 1})) == 6);
  CHECK(intersect(f2, canonical_class(f2), cls(f2, {1, 0})) == 0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> u(2), v(2);
    for (auto& x : u) x = std::uniform_int_distribution<int>(-9, 9)(rng);
    for (auto& x : v) x = std::uniform_int_distribution<int>(-9, 9)(rng);
    CHECK(intersect(f2, cls(f2, u), cls(f2, v)) == intersect(f2, cls(f2, v), cls(f2, u)));
  }

  const SurfaceLattice f0 = hirzebruch(0);
  CHECK_THROWS_AS(intersect(f0, cls(f0, {1, 1}), delta), domain_error);
}

TEST_CASE("adjunction genus") {
  const SurfaceLattice f0 = hirzebruch(0);
  CHECK(adjunction_genus(f0, cls(f0, {1, 1})) == 0);
  for (int d = 0; d <= 3; ++d) {
    const SurfaceLattice fd = hirzebruch(d);
    CHECK(adjunction_genus(fd, cls(fd, {0, 1})) == 0);
    CHECK(adjunction_genus(fd, cls(fd, {1, 0})) == 0);
  }

  // A (-5)-curve with K.C = 3 is rational; self-intersection 1 with K.C = -1
  // has arithmetic genus 1.
  SurfaceLattice ad;
  ad.name = "adhoc";
  ad.basis = {"C", "F"};
  ad.gram = {{Int(-5), Int(1)}, {Int(1), Int(0)}};
  ad.canonical = {Int(0), Int(3)};
  ad.validate();
  CHECK(adjunction_genus(ad, cls(ad, {1, 0})) == 0);

  SurfaceLattice el;
  el.name = "adhoc2";
  el.basis = {"C", "F"};
  el.gram = {{Int(1), Int(0)}, {Int(0), Int(-1)}};
  el.canonical = {Int(-1), Int(0)};
  el.validate();
  CHECK(adjunction_genus(el, cls(el, {1, 0})) == 1);
}

TEST_CASE("riemann-roch") {
  const SurfaceLattice f0 = hirzebruch(0);
  CHECK(riemann_roch_chi(f0, cls(f0, {0, 0})) == 1);
  CHECK(riemann_roch_chi(f0, cls(f0, {6, 6})) == 49);
  const SurfaceLattice f2 = hirzebruch(2);
  CHECK(riemann_roch_chi(f2, cls(f2, {5, 10})) == 36);

  // A lattice whose canonical vector is not characteristic is rejected.
  SurfaceLattice bad;
  bad.name = "bad";
  bad.basis = {"H"};
  bad.gram = {{Int(1)}};
  bad.canonical = {Int(0)};
  bad.validate();
  CHECK_THROWS_AS(riemann_roch_chi(bad, cls(bad, {1})), domain_error);
}

TEST_CASE("section counts on F_d") {
  CHECK(h0_hirzebruch(0, 1, 1) == 4);
  CHECK(h0_hirzebruch(2, 1, 2) == 4);
  CHECK(h0_hirzebruch(0, 0, 1) == 2);
  CHECK(h0_hirzebruch(2, 1, 0) == 1);
  CHECK(h0_hirzebruch(0, -1, 3) == 0);

  // Vanishing regime: the section count is the Euler characteristic.
  for (int d = 0; d <= 3; ++d) {
    const SurfaceLattice fd = hirzebruch(d);
    for (Int a = 0; a <= 8; ++a)
      for (Int b = a * d; b <= a * d + 8; ++b)
        CHECK(h0_hirzebruch(d, a, b) == riemann_roch_chi(fd, cls(fd, {a, b})));
  }
}

TEST_CASE("double cover rules") {
  const SurfaceLattice f0 = hirzebruch(0);
  {
    const auto rules = double_cover_pullback(f0, cls(f0, {0, 1}), cls(f0, {3, 3}));
    CHECK(rules.k_downstairs.coeffs == std::vector<Int>{1, 1});  // K + L = Delta
    CHECK(rules.k_dot_pullback == 2);
    CHECK(rules.pullback_self_int == 0);
  }
  {
    // F_d with L = 3 D0 + ((p_g + 3d + 2)/2) G: K_Y = f*(D0 + ((p_g+d-2)/2) G).
    const SurfaceLattice f2 = hirzebruch(2);
    const auto rules = double_cover_pullback(f2, cls(f2, {0, 1}), cls(f2, {3, 6}));
    CHECK(rules.k_downstairs.coeffs == std::vector<Int>{1, 2});
  }
  {
    const SurfaceLattice p2 = projective_plane();
    const auto rules = double_cover_pullback(p2, cls(p2, {1}), cls(p2, {4}));
    CHECK(rules.k_downstairs.coeffs == std::vector<Int>{1});  // K_Y = f*(H)
  }
  CHECK(cover_pullback_dot(f0, cls(f0, {1, 1}), cls(f0, {0, 1})) == 2);
}

TEST_CASE("branch constraints one above the Noether line") {
  CHECK(horikawa_branch_constraints(0, 4));
  CHECK_FALSE(horikawa_branch_constraints(2, 4));  // needs p_g >= 6
  CHECK(horikawa_branch_constraints(2, 6));
  CHECK_FALSE(horikawa_branch_constraints(0, 5));  // parity
  CHECK(horikawa_branch_constraints(4, 8));
}

TEST_CASE("even-case self-intersection is -4 regardless of separation numbers") {
  CHECK(even_case_c_squared({}) == Rat(-4));
  CHECK(even_case_c_squared({1, 1, 1, 1, 1, 1}) == Rat(-4));
  CHECK(even_case_c_squared({2, 2, 2}) == Rat(-4));
  CHECK(even_case_c_squared({6}) == Rat(-4));
  CHECK_THROWS_AS(even_case_c_squared({7}), domain_error);
  CHECK_THROWS_AS(even_case_c_squared({0}), domain_error);
}

TEST_CASE("express rejects dependent classes") {
  const SurfaceLattice f0 = hirzebruch(0);
  CHECK_THROWS_AS(express(f0, cls(f0, {1, 1}), {cls(f0, {1, 0}), cls(f0, {2, 0})}), domain_error);
}
