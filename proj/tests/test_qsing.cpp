#include "qsurf/qsing.hpp"

#include <doctest.h>

#include <random>

using namespace qsurf;
using namespace qsurf::qsing;

namespace {

TString random_string(std::mt19937_64& rng, int max_len = 8) {
  const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  TString t;
  for (int i = 0; i < len; ++i) t.push_back(std::uniform_int_distribution<int>(2, 7)(rng));
  return t;
}

}  // namespace

TEST_CASE("fraction normalization") {
  const Fraction f(6, 4);
  CHECK(f.num == 3);
  CHECK(f.den == 2);
  CHECK_THROWS_AS(Fraction(3, 3), domain_error);
  CHECK_THROWS_AS(Fraction(2, 5), domain_error);
  CHECK_THROWS_AS(Fraction(4, 0), domain_error);
}

TEST_CASE("continued fraction expansion") {
  CHECK(hj_expand(Fraction(4, 1)) == TString{4});
  CHECK(hj_expand(Fraction(9, 5)) == TString{2, 5});
  CHECK(hj_expand(Fraction(9, 2)) == TString{5, 2});
  CHECK(hj_expand(Fraction(2, 1)) == TString{2});
}

TEST_CASE("continued fraction evaluation") {
  CHECK(hj_eval({4}) == Fraction(4, 1));
  CHECK(hj_eval({2, 5}) == Fraction(9, 5));
  CHECK(hj_eval({5, 2}) == Fraction(9, 2));
  CHECK_THROWS_AS(hj_eval({3, 1}), domain_error);
  CHECK_THROWS_AS(hj_eval({}), domain_error);
}

TEST_CASE("expansion and evaluation are mutually inverse") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const TString t = random_string(rng);
    CHECK(hj_expand(hj_eval(t)) == t);
  }
  for (int i = 0; i < 300; ++i) {
    const long long p = std::uniform_int_distribution<long long>(2, 100000)(rng);
    const long long q = std::uniform_int_distribution<long long>(1, p - 1)(rng);
    const Int g = boost::multiprecision::gcd(Int(p), Int(q));
    const Fraction f(Int(p) / g, Int(q) / g);
    CHECK(hj_eval(hj_expand(f)) == f);
  }
}

TEST_CASE("wahl strings from (n, a)") {
  CHECK(wahl_string(2, 1) == TString{4});
  CHECK(wahl_string(3, 2) == TString{2, 5});
  CHECK(wahl_string(3, 1) == TString{5, 2});
  CHECK_THROWS_AS(wahl_string(4, 2), domain_error);
  CHECK_THROWS_AS(wahl_string(3, 3), domain_error);
}

TEST_CASE("classification") {
  auto c = classify({4});
  CHECK(c.kind == SingKind::Wahl);
  CHECK(c.n == 2);
  CHECK(c.a == 1);

  c = classify({2, 5});
  CHECK(c.kind == SingKind::Wahl);
  CHECK(c.n == 3);
  CHECK(c.a == 2);

  // The reversed string names the same singularity; parameters canonicalize.
  CHECK(classify({5, 2}) == classify({2, 5}));

  CHECK(classify({3}).kind == SingKind::NotT);

  // 1/8(1,3): the classical length-2 T-string that is not Wahl.
  c = classify({3, 3});
  CHECK(c.kind == SingKind::T);
  CHECK(c.d == 2);
  CHECK(c.n == 2);
  CHECK(c.a == 1);

  // Du Val chains are the n = 1 T-strings.
  c = classify({2, 2});
  CHECK(c.kind == SingKind::T);
  CHECK(c.d == 3);
  CHECK(c.n == 1);
}

TEST_CASE("classification is reversal invariant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const TString t = random_string(rng);
    CHECK(classify(t).kind == classify(reversed(t)).kind);
    CHECK(classify(t) == classify(reversed(t)));
  }
}

TEST_CASE("descent recognition agrees with the fraction-shape oracle") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const TString t = random_string(rng);
    CHECK((classify(t).kind == SingKind::Wahl) == wahl_fraction_check(t));
  }
}

TEST_CASE("generation rules") {
  CHECK(generate_children({4}) == std::pair<TString, TString>({2, 5}, {5, 2}));
  CHECK(generate_children({2, 5}) == std::pair<TString, TString>({2, 2, 6}, {3, 5, 2}));
  CHECK(generate_children({5, 2}) == std::pair<TString, TString>({2, 5, 3}, {6, 2, 2}));
  CHECK_THROWS_AS(generate_children({3, 3}), domain_error);
}

TEST_CASE("enumeration of wahl strings") {
  CHECK(enumerate_wahl(1) == std::vector<TString>{{4}});
  CHECK(enumerate_wahl(2) == std::vector<TString>{{4}, {2, 5}, {5, 2}});

  const auto upto3 = enumerate_wahl(3);
  int len3 = 0;
  for (const auto& t : upto3) len3 += t.size() == 3;
  CHECK(len3 == 4);

  for (const auto& t : enumerate_wahl(6)) CHECK(sum_defect(t) == Int(t.size()) + 1);

  // Restricting a deeper enumeration reproduces the shallower one.
  auto upto5 = enumerate_wahl(5);
  std::erase_if(upto5, [](const TString& t) { return t.size() > 4; });
  CHECK(upto5 == enumerate_wahl(4));
}

TEST_CASE("discrepancies") {
  const auto d25 = discrepancies({2, 5}).values;
  CHECK(d25 == QVec{Rat(-1, 3), Rat(-2, 3)});

  CHECK(discrepancies({4}).values == QVec{Rat(-1, 2)});

  const auto d226 = discrepancies({2, 2, 6}).values;
  CHECK(d226.front() + d226.back() == -1);

  // Du Val strings are the discrepancy-zero case.
  for (const Rat& a : discrepancies({2, 2, 2}).values) CHECK(a == 0);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const TString t = random_string(rng, 6);
    for (const Rat& a : discrepancies(t).values) {
      CHECK(a > -1);
      CHECK(a <= 0);
    }
  }
}

TEST_CASE("length bounds") {
  CHECK(length_bound(5, 4, true, true) == LengthBound{1});
  CHECK(length_bound(5, 4, false, true) == LengthBound{2});
  CHECK(length_bound(5, 4, true, false) == LengthBound{2});
  CHECK(length_bound(10, 2, false, true) == LengthBound{6400});
  CHECK(length_bound(10, 2, false, true).contains(6400));
  CHECK_FALSE(length_bound(10, 2, false, true).contains(6401));
  CHECK_THROWS_AS(length_bound(4, 4, false, false), domain_error);
  CHECK_THROWS_AS(length_bound(3, 4, false, false), domain_error);
}

TEST_CASE("numerical invariants") {
  const NumericalInvariants quintic(5, 4, 0);
  CHECK(quintic.chi == 5);
  CHECK(quintic.one_above_noether_line());
  CHECK_FALSE(quintic.on_noether_line());

  const NumericalInvariants horikawa(4, 4, 0);
  CHECK(horikawa.on_noether_line());
  CHECK_THROWS_AS(NumericalInvariants(1, -1, 0), domain_error);
}
