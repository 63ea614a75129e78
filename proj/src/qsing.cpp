#include "qsurf/qsing.hpp"

#include <algorithm>
#include <set>

namespace qsurf::qsing {

namespace {

void require_entries(const TString& t) {
  if (t.empty()) throw domain_error("empty string");
  for (const Int& b : t)
    if (b < 2) throw domain_error("string entry " + int_to_string(b) + " < 2");
}

// Reverse-applies the generation rules until [4] or a dead end. A Wahl string
// of length >= 2 has exactly one applicable rule per step, so the descent is
// deterministic and doubles as a certificate.
bool wahl_descent(TString t) {
  while (t.size() > 1) {
    if (t.front() == 2 && t.back() >= 3) {
      t.erase(t.begin());
      t.back() -= 1;
    } else if (t.back() == 2 && t.front() >= 3) {
      t.pop_back();
      t.front() -= 1;
    } else {
      return false;
    }
  }
  return t == TString{4};
}

}  // namespace

Fraction::Fraction(Int numerator, Int denominator) : num(std::move(numerator)), den(std::move(denominator)) {
  if (den < 1) throw domain_error("fraction denominator must be >= 1");
  const Int g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num <= den) throw domain_error("fraction must satisfy numerator > denominator");
}

TString reversed(const TString& t) { return TString(t.rbegin(), t.rend()); }

Int sum_defect(const TString& t) {
  Int s = 0;
  for (const Int& b : t) s += b - 2;
  return s;
}

NumericalInvariants::NumericalInvariants(Int k2, Int pg, Int irr)
    : k_squared(std::move(k2)), p_g(std::move(pg)), q(std::move(irr)), chi(1 - q + p_g) {
  if (p_g < 0 || q < 0) throw domain_error("p_g and q must be nonnegative");
}

bool NumericalInvariants::on_noether_line() const { return k_squared == 2 * p_g - 4; }
bool NumericalInvariants::one_above_noether_line() const { return k_squared == 2 * p_g - 3; }

TString hj_expand(const Fraction& f) {
  TString out;
  Int p = f.num, q = f.den;
  while (q > 0) {
    const Int b = (p + q - 1) / q;  // ceil(p/q)
    out.push_back(b);
    const Int r = b * q - p;
    p = q;
    q = r;
  }
  return out;
}

Fraction hj_eval(const TString& t) {
  require_entries(t);
  // Fold from the right: x -> b - 1/x.
  Int p = t.back(), q = 1;
  for (auto it = t.rbegin() + 1; it != t.rend(); ++it) {
    const Int np = *it * p - q;
    q = p;
    p = np;
  }
  return Fraction(p, q);
}

TString wahl_string(const Int& n, const Int& a) {
  if (n < 2 || a < 1 || a >= n) throw domain_error("wahl_string requires n >= 2 and 1 <= a < n");
  if (boost::multiprecision::gcd(n, a) != 1) throw domain_error("wahl_string requires gcd(n, a) = 1");
  return hj_expand(Fraction(n * n, n * a - 1));
}

SingularityClass classify(const TString& t) {
  require_entries(t);
  const TString rev = reversed(t);
  const TString& canon = std::min(t, rev);
  const Fraction f = hj_eval(canon);

  SingularityClass out;
  // Trial over n <= sqrt(numerator): d = num/n^2, then a from dna - 1 = den.
  for (Int n = boost::multiprecision::sqrt(f.num); n >= 1; --n) {
    if (f.num % (n * n) != 0) continue;
    const Int d = f.num / (n * n);
    if ((f.den + 1) % (d * n) != 0) continue;
    const Int a = (f.den + 1) / (d * n);
    if (a < 1 || (n >= 2 && a >= n) || (n == 1 && a != 1)) continue;
    if (boost::multiprecision::gcd(n, a) != 1) continue;
    if (hj_expand(Fraction(d * n * n, d * n * a - 1)) != canon) continue;
    out.kind = SingKind::T;
    out.d = d;
    out.n = n;
    out.a = a;
    break;
  }
  if (wahl_descent(canon)) {
    if (out.kind != SingKind::T || out.d != 1)
      throw domain_error("internal: descent and fraction recognition disagree");
    out.kind = SingKind::Wahl;
  }
  return out;
}

bool wahl_fraction_check(const TString& t) {
  require_entries(t);
  const Fraction f = hj_eval(t);
  const Int n = boost::multiprecision::sqrt(f.num);
  if (n < 2 || n * n != f.num) return false;
  if ((f.den + 1) % n != 0) return false;
  const Int a = (f.den + 1) / n;
  return a >= 1 && a < n && boost::multiprecision::gcd(n, a) == 1;
}

std::pair<TString, TString> generate_children(const TString& t) {
  if (classify(t).kind != SingKind::Wahl) throw domain_error("generate_children requires a Wahl string");
  TString left = t;
  left.back() += 1;
  left.insert(left.begin(), 2);
  TString right = t;
  right.front() += 1;
  right.push_back(2);
  return {left, right};
}

std::vector<TString> enumerate_wahl(int r_max) {
  if (r_max < 1) throw domain_error("enumerate_wahl requires r_max >= 1");
  std::set<TString> found;
  std::vector<TString> frontier{TString{4}};
  found.insert(TString{4});
  for (int r = 2; r <= r_max; ++r) {
    std::vector<TString> next;
    for (const TString& s : frontier) {
      auto [l, rgt] = generate_children(s);
      next.push_back(l);
      next.push_back(rgt);
    }
    found.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<TString> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const TString& a, const TString& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

DiscrepancyVector discrepancies(const TString& t) {
  require_entries(t);
  const size_t r = t.size();
  QMatrix gram(r, QVec(r, Rat(0)));
  QVec rhs(r);
  for (size_t i = 0; i < r; ++i) {
    gram[i][i] = Rat(-t[i]);
    if (i + 1 < r) gram[i][i + 1] = gram[i + 1][i] = Rat(1);
    rhs[i] = Rat(t[i] - 2);
  }
  auto sol = solve_linear(std::move(gram), std::move(rhs));
  if (!sol) throw domain_error("internal: singular string intersection form");
  for (const Rat& a : *sol)
    if (a <= -1 || a > 0)
      throw domain_error("discrepancy " + rat_to_string(a) + " outside (-1, 0]: not log terminal");
  return DiscrepancyVector{std::move(*sol)};
}

LengthBound length_bound(const Int& kw2, const Int& ks2, bool on_line, bool general_type) {
  if (kw2 <= ks2)
    throw domain_error("K_W^2 = " + int_to_string(kw2) + " must exceed K_S^2 = " + int_to_string(ks2) +
                       " when both canonical classes are big and nef");
  if (kw2 == ks2 + 1) {
    if (on_line && general_type) return LengthBound{1};
    return LengthBound{2};
  }
  return LengthBound{400 * ks2 * ks2 * ks2 * ks2};
}

}  // namespace qsurf::qsing
