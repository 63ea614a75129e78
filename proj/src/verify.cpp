#include "qsurf/verify.hpp"

#include "qsurf/ade.hpp"
#include "qsurf/flopsim.hpp"
#include "qsurf/localint.hpp"
#include "qsurf/modulidim.hpp"
#include "qsurf/oracles.hpp"
#include "qsurf/pic.hpp"
#include "qsurf/qsing.hpp"
#include "qsurf/tables.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace qsurf::verify {

namespace {

class Checker {
 public:
  Checker(std::string id, std::string name) {
    check_.id = std::move(id);
    check_.name = std::move(name);
  }

  void expect(bool cond, const std::string& what) {
    ++check_.assertions;
    if (cond) return;
    check_.passed = false;
    if (check_.failures.size() < 8) check_.failures.push_back(what);
  }

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }

  Check finish() && { return std::move(check_); }

 private:
  Check check_;
};

std::string show(const qsing::TString& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + int_to_string(t[i]);
  return s + "]";
}

// --- criterion 1: Wahl calculus -------------------------------------------

Check criterion_wahl() {
  Checker c("1", "Wahl string calculus: recursion, classification, round trips");
  using namespace qsing;

  const auto all = enumerate_wahl(6);
  c.expect_eq(all.size(), size_t(63), "number of Wahl strings of length <= 6");
  for (const TString& s : all) {
    c.expect(sum_defect(s) == Int(s.size()) + 1, "sum(b_i - 2) = r + 1 for " + show(s));
    const auto cl = classify(s);
    c.expect(cl.kind == SingKind::Wahl, "classify finds Wahl for " + show(s));
    const TString rebuilt = wahl_string(cl.n, cl.a);
    c.expect(rebuilt == s || rebuilt == reversed(s), "(n,a) round trip for " + show(s));
    c.expect(wahl_fraction_check(s), "fraction-shape cross-check for " + show(s));
  }

  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 1000; ++trial) {
    const long long p0 = std::uniform_int_distribution<long long>(2, 1000000)(rng);
    const long long q0 = std::uniform_int_distribution<long long>(1, p0 - 1)(rng);
    const Int g = boost::multiprecision::gcd(Int(p0), Int(q0));
    const Fraction f(Int(p0) / g, Int(q0) / g);
    const TString t = hj_expand(f);
    for (const Int& b : t) c.expect(b >= 2, "expansion entries >= 2");
    c.expect(hj_eval(t) == f, "hj_eval(hj_expand(" + int_to_string(f.num) + "/" + int_to_string(f.den) + "))");
  }
  return std::move(c).finish();
}

// --- criterion 2: discrepancies -------------------------------------------

Check criterion_discrepancies() {
  Checker c("2", "Discrepancies: [2,5] -> (-1/3,-2/3); a_1 + a_r = -1 on Wahl strings");
  using namespace qsing;

  const auto d25 = discrepancies({2, 5}).values;
  c.expect_eq(rat_to_string(d25[0]), std::string("-1/3"), "a_1 of [2,5]");
  c.expect_eq(rat_to_string(d25[1]), std::string("-2/3"), "a_2 of [2,5]");

  for (const TString& s : enumerate_wahl(6)) {
    const auto d = discrepancies(s).values;
    c.expect(d.front() + d.back() == -1, "a_1 + a_r = -1 for " + show(s));
    for (const Rat& a : d) c.expect(a > -1 && a < 0, "a_i in (-1,0) for " + show(s));
  }
  return std::move(c).finish();
}

// --- criterion 3: Picard numbers ------------------------------------------

Check criterion_pic() {
  Checker c("3", "Section counts, blown-up canonical class, D~ squared, even-case C^2");
  using namespace pic;

  for (int d : {0, 2}) {
    const Int delta_b = d == 0 ? 1 : 2;
    c.expect_eq(h0_hirzebruch(d, 1, delta_b), Int(4), "h0(Delta) on F" + std::to_string(d));
    c.expect_eq(h0_hirzebruch(d, 0, 1), Int(2), "h0(Gamma) on F" + std::to_string(d));
    c.expect_eq(h0_hirzebruch(d, 6, 6 * delta_b), Int(49), "h0(6 Delta) on F" + std::to_string(d));
    c.expect_eq(h0_hirzebruch(d, 5, 5 * delta_b), Int(36), "h0(5 Delta) on F" + std::to_string(d));

    // Vanishing regime: chi agrees with the section count.
    const SurfaceLattice f = hirzebruch(d);
    c.expect_eq(riemann_roch_chi(f, cls(f, {6, 6 * delta_b})), Int(49), "chi(6 Delta) on F" + std::to_string(d));
    c.expect_eq(riemann_roch_chi(f, cls(f, {5, 5 * delta_b})), Int(36), "chi(5 Delta) on F" + std::to_string(d));
    c.expect_eq(riemann_roch_chi(f, cls(f, {1, delta_b})), Int(4), "chi(Delta) on F" + std::to_string(d));
  }

  // K of F_2 blown up at two fiber points, in the basis (D0, D~, E1, E2)
  // with D~ = G - E1 - E2.
  {
    const SurfaceLattice f2 = hirzebruch(2);
    const Blowup b1 = blow_up(f2, "E1");
    const Blowup b2 = blow_up(b1.lattice, "E2");
    const SurfaceLattice& zt = b2.lattice;
    const DivisorClass k = canonical_class(zt);
    const DivisorClass d0 = cls(zt, {1, 0, 0, 0});
    const DivisorClass dt = proper_transform(zt, cls(f2, {0, 1}), {{"E1", 1}, {"E2", 1}});
    const DivisorClass e1 = cls(zt, {0, 0, 1, 0});
    const DivisorClass e2 = cls(zt, {0, 0, 0, 1});
    const QVec coords = express(zt, k, {d0, dt, e1, e2});
    const QVec want{Rat(-2), Rat(-4), Rat(-3), Rat(-3)};
    c.expect(coords == want, "K of blown-up F2 = -2 D0 - 4 D~ - 3 E1 - 3 E2");
    c.expect_eq(intersect(zt, k, d0), Int(0), "K . D0 = 0 on blown-up F2");
    c.expect_eq(intersect(zt, k, dt), Int(0), "K . D~ = 0 on blown-up F2");
  }

  // D~^2 = -8 when D is a component of the branch divisor: ten transversal
  // residual intersections blown up along D, on either quadric model.
  for (int d : {0, 2}) {
    const SurfaceLattice l = hirzebruch(d);
    const DivisorClass delta = cls(l, {1, Int(d == 0 ? 1 : 2)});
    std::map<std::string, Int> mults;
    SurfaceLattice top = l;
    for (int i = 1; i <= 10; ++i) {
      const std::string label = "E" + std::to_string(i);
      top = blow_up(top, label).lattice;
      mults[label] = 1;
    }
    const DivisorClass dt = proper_transform(top, delta, mults);
    c.expect_eq(self_int(top, dt), Int(-8),
                "D~^2 = D^2 - (Bbar.D) = 2 - 10 on F" + std::to_string(d));
  }

  // C^2 = -4 for every multiset of separation numbers with sum <= 6.
  {
    std::vector<std::vector<Int>> multisets{{}};
    for (int first = 1; first <= 6; ++first) {
      std::vector<std::vector<Int>> stack{{Int(first)}};
      while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        multisets.push_back(cur);
        Int sum = 0;
        for (const Int& v : cur) sum += v;
        for (Int next = cur.back(); sum + next <= 6; ++next) {
          auto ext = cur;
          ext.push_back(next);
          stack.push_back(ext);
        }
      }
    }
    for (const auto& ls : multisets)
      c.expect(even_case_c_squared(ls) == Rat(-4), "C^2 = -4 for a separation multiset");
  }
  return std::move(c).finish();
}

// --- criterion 4: weight table norms --------------------------------------

Check criterion_weight_table() {
  Checker c("4", "Weight table: norms 2 (mult 2,3) and 4 (mult 4,5), rows swept to n = 12");
  for (const auto& row : tables::odd_case_rows(12)) {
    const auto rs = ade::build(row.family, row.n);
    const ade::Weight w = ade::weight_of_divisor(rs, tables::row_intersections(row));
    c.expect(w == row.expected, "ambient vector of row " + row.id);
    c.expect(ade::is_dominant(rs, w), "row " + row.id + " weight is dominant");
    const Rat want = row.mult <= 3 ? 2 : 4;
    c.expect_eq(rat_to_string(ade::norm2(rs, w)), rat_to_string(want), "norm^2 of row " + row.id);
  }
  return std::move(c).finish();
}

// --- criterion 5: minuscule table -----------------------------------------

Check criterion_minuscule() {
  Checker c("5", "Minuscule weights: exact sets, cross-checked by the weight-system oracle");
  std::vector<std::pair<ade::Family, int>> systems;
  for (int n = 1; n <= 8; ++n) systems.push_back({ade::Family::A, n});
  for (int n = 4; n <= 10; ++n) systems.push_back({ade::Family::D, n});
  for (int n = 6; n <= 8; ++n) systems.push_back({ade::Family::E, n});

  for (auto [f, n] : systems) {
    const auto rs = ade::build(f, n);
    const auto expected = tables::minuscule_indices(f, n);
    for (int i = 1; i <= n; ++i) {
      const bool want = expected.count(i) > 0;
      c.expect_eq(ade::is_minuscule(rs, i), want,
                  "is_minuscule(" + rs.name + ", " + std::to_string(i) + ")");
      if (n <= 7) {
        std::vector<Int> omega(n, Int(0));
        omega[i - 1] = 1;
        const auto stats = ade::weight_system(rs, omega);
        c.expect_eq(stats.dominant == 1, want,
                    "weight-system oracle for " + rs.name + ", w_" + std::to_string(i));
      }
    }
  }
  return std::move(c).finish();
}

// --- criterion 6: flop reduction ------------------------------------------

Check criterion_flops() {
  Checker c("6", "Flop reduction: orbit states of table weights reach a = 0; policy independence");
  using namespace flopsim;

  for (const auto& row : tables::odd_case_rows(12)) {
    const auto rs = ade::build_shared(row.family, row.n);
    const std::vector<Int> omega = tables::row_intersections(row);
    long long states = 0;
    for (const auto& member : ade::weyl_orbit(*rs, omega)) {
      std::vector<Int> diff(rs->rank);
      for (int i = 0; i < rs->rank; ++i) diff[i] = omega[i] - member[i];
      const auto coords = ade::root_lattice_coords(*rs, diff);
      c.expect(coords.has_value(), "orbit member differs from omega by a root-lattice vector");
      if (!coords) continue;
      Int height = 0;
      bool nonneg = true;
      for (const Int& b : *coords) {
        height += b;
        if (b < 0) nonneg = false;
      }
      c.expect(nonneg, "omega - w(omega) has nonnegative root coordinates");
      if (!nonneg || height > 8) continue;
      ++states;
      const FlopTrace t = reduce(make_state(rs, omega, *coords));
      bool zero = true;
      for (const Int& a : t.final_state.coeffs) zero &= a == 0;
      c.expect(zero, "reduction of an orbit state of row " + row.id + " ends with a = 0");
    }
    c.expect(states > 0, "row " + row.id + " produced at least one bounded-height orbit state");
  }

  // Policy independence on random states over rank <= 6 systems.
  std::vector<std::shared_ptr<const ade::RootSystem>> pool;
  for (int n = 1; n <= 6; ++n) pool.push_back(ade::build_shared(ade::Family::A, n));
  for (int n = 4; n <= 6; ++n) pool.push_back(ade::build_shared(ade::Family::D, n));
  pool.push_back(ade::build_shared(ade::Family::E, 6));
  pool.push_back(std::make_shared<const ade::RootSystem>(
      ade::direct_sum(ade::build(ade::Family::A, 2), ade::build(ade::Family::A, 3))));
  pool.push_back(std::make_shared<const ade::RootSystem>(
      ade::direct_sum(ade::build(ade::Family::A, 1), ade::build(ade::Family::D, 4))));

  std::mt19937_64 rng(424243);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& rs = pool[trial % pool.size()];
    std::vector<Int> omega(rs->rank);
    for (auto& v : omega) v = std::uniform_int_distribution<int>(0, 2)(rng);
    // Random Weyl-group element applied to omega, tracked in pairing coords.
    std::vector<Int> mu = omega;
    const int word = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int s = 0; s < word; ++s) {
      const int j = std::uniform_int_distribution<int>(0, rs->rank - 1)(rng);
      std::vector<Int> next(rs->rank);
      for (int i = 0; i < rs->rank; ++i) next[i] = mu[i] - mu[j] * rs->cartan[j][i];
      mu = std::move(next);
    }
    std::vector<Int> diff(rs->rank);
    for (int i = 0; i < rs->rank; ++i) diff[i] = omega[i] - mu[i];
    const auto coords = ade::root_lattice_coords(*rs, diff);
    if (!coords) {
      c.expect(false, "random orbit state not in omega + root lattice");
      continue;
    }
    const auto base = make_state(rs, omega, *coords);
    const FlopTrace t1 = reduce(base, Policy::SmallestIndex);
    const FlopTrace t2 = reduce(base, Policy::LargestIndex);
    const FlopTrace t3 = reduce(base, Policy::MostNegative);
    c.expect(t1.final_state.coeffs == t2.final_state.coeffs && t1.final_state.coeffs == t3.final_state.coeffs,
             "final coefficients are policy independent");
    c.expect(mu_pairings(t1.final_state) == mu_pairings(t2.final_state) &&
                 mu_pairings(t1.final_state) == mu_pairings(t3.final_state),
             "final mu is policy independent");
  }
  return std::move(c).finish();
}

// --- criterion 7: local intersections --------------------------------------

Check criterion_local() {
  Checker c("7", "Local multiplicities: drop law, E8 dichotomy, quotient-ring oracle, case tables");
  using namespace localint;
  using ade::Family;

  std::vector<std::pair<Family, int>> forms;
  for (int n = 1; n <= 8; ++n) forms.push_back({Family::A, n});
  for (int n = 4; n <= 8; ++n) forms.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) forms.push_back({Family::E, n});

  for (auto [f, n] : forms) {
    const LocalCurve b = normal_form(f, n);
    for (const Tangency& t : tangency_presets(f, n, 5)) {
      const GraphCurve d = tangency_curve(f, n, t);
      const MultResult m = mult(b, d);
      if (!m.finite) continue;
      const std::string where = ade::family_name(f) + std::to_string(n) + ", " + tangency_description(t);
      // Multiplicity drop under one blowup following D.
      if (m.value >= 2) {
        const auto up = blowup_following(b, d);
        const MultResult m1 = mult(up.branch, up.curve);
        c.expect(m1.finite && m1.value == m.value - 2, "multiplicity drops by 2 at " + where);
      }
      // Independent quotient-ring oracle.
      c.expect_eq(oracles::quotient_ring_mult(b, d), m.value, "quotient-ring oracle at " + where);
      // Separation consistency: (B'.D~) = (B.D) - 2l.
      const int l = separation(b, d);
      const LocalCurve* cur = &b;
      LocalCurve owned = b;
      GraphCurve g = d;
      for (int step = 0; step < l; ++step) {
        auto next = blowup_following(owned, g);
        owned = std::move(next.branch);
        g = std::move(next.curve);
        cur = &owned;
      }
      const MultResult residual = mult(*cur, g);
      c.expect(residual.finite && residual.value == m.value - 2 * l,
               "(B'.D~) = (B.D) - 2l at " + where);
    }
  }

  // E8 dichotomy including deeper tangency and the axis itself.
  {
    const LocalCurve e8 = normal_form(Family::E, 8);
    for (int k = 1; k <= 6; ++k) {
      const GraphCurve d = k == 1 ? tangency_curve(Family::E, 8, {TangencyKind::Transversal, 1})
                                  : tangency_curve(Family::E, 8, {TangencyKind::TangentCone, k});
      const MultResult m = mult(e8, d);
      c.expect(m.finite && (m.value == 3 || m.value == 5), "E8 multiplicity in {3,5} at k=" + std::to_string(k));
    }
    const MultResult axis = mult(e8, graph_x_of_y({Rat(0)}));
    c.expect(axis.finite && axis.value == 5, "E8 against the coordinate axis");
  }

  // The odd-case classification figures, regenerated exactly.
  {
    const auto configs = odd_case_configs(10, 5);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& rec : configs) {
      c.expect(!rec.figure.empty(),
               "odd-case config " + rec.singularity + " (" + rec.tangency + ") is classified");
      if (!rec.figure.empty()) got.insert({rec.figure, rec.singularity});
    }
    std::set<std::pair<std::string, std::string>> want;
    auto add = [&](const std::string& fig, const std::string& sing) { want.insert({fig, sing}); };
    for (int n = 1; n <= 10; ++n) add(n % 2 ? "distinct_points(a)" : "distinct_points(b)", "A" + std::to_string(n));
    add("distinct_points(c)", "A1");
    add("distinct_points(d)", "A2");
    for (int n = 5; n <= 10; n += 2) add("distinct_points(e)", "D" + std::to_string(n));
    for (int n = 4; n <= 10; n += 2) add("distinct_points(f)", "D" + std::to_string(n));
    add("distinct_points(g)", "E6");
    add("distinct_points(h)", "E7");
    add("distinct_points(i)", "E8");
    add("same_points_4(a)", "A3");
    add("same_points_4(b)", "A3");
    for (int n = 5; n <= 10; n += 2) add("same_points_4(c)", "A" + std::to_string(n));
    for (int n = 4; n <= 10; n += 2) add("same_points_4(d)", "A" + std::to_string(n));
    add("same_points_4(e)", "D5");
    for (int n = 5; n <= 10; n += 2) add("same_points_4(f)", "D" + std::to_string(n));
    for (int n = 4; n <= 10; n += 2) add("same_points_4(g)", "D" + std::to_string(n));
    add("same_points_4(h)", "E6");
    add("same_points_5(a)", "A3");
    add("same_points_5(b)", "A4");
    for (int n = 7; n <= 10; n += 2) add("same_points_5(c)", "D" + std::to_string(n));
    for (int n = 5; n <= 10; n += 2) add("same_points_5(d)", "D" + std::to_string(n));
    for (int n = 6; n <= 10; n += 2) add("same_points_5(e)", "D" + std::to_string(n));
    for (int n = 4; n <= 10; n += 2) add("same_points_5(f)", "D" + std::to_string(n));
    add("same_points_5(g)", "E7");
    add("same_points_5(h)", "E8");
    for (const auto& pair : want)
      c.expect(got.count(pair) > 0, "expected row " + pair.first + " / " + pair.second + " was produced");
    for (const auto& pair : got)
      c.expect(want.count(pair) > 0, "produced row " + pair.first + " / " + pair.second + " was expected");
  }

  // E7 cannot meet the marked curve with multiplicity 4.
  {
    const auto rec = classify_config_by_mult(Family::E, 7, 4);
    c.expect(!rec.possible, "E7 at multiplicity 4 is impossible");
  }
  return std::move(c).finish();
}

// --- criterion 8: dimension counts ----------------------------------------

Check criterion_dims() {
  Checker c("8", "Moduli locus dimensions: the eight named types and the D-in-B locus");
  using namespace modulidim;
  const std::vector<std::pair<std::string, int>> expected{
      {"1", 39},   {"1'", 38},  {"1''", 38}, {"1'''", 38}, {"2a", 39},
      {"2a'", 38}, {"2a''", 38}, {"2b", 38},  {"D-in-B", 32}};
  for (const auto& [label, want] : expected) {
    const DimReport rep = locus_dimension(named_type(label));
    c.expect_eq(rep.total, Int(want), "dimension of type " + label);
  }
  const std::vector<std::pair<std::string, std::string>> sums{
      {"1", "3+6+48-12-6=39"},
      {"1'", "3+6+48-12-1-6=38"},
      {"2a", "1+4+48-6-1-1-6=39"},
      {"2b", "1+4+48-6-1-1-7=38"},
      {"D-in-B", "3+10+35-10-6=32"},
  };
  for (const auto& [label, want] : sums)
    c.expect_eq(locus_dimension(named_type(label)).sum_string, want, "itemized sum for type " + label);
  return std::move(c).finish();
}

}  // namespace

std::vector<Check> run_acceptance() {
  std::vector<Check> out;
  out.push_back(criterion_wahl());
  out.push_back(criterion_discrepancies());
  out.push_back(criterion_pic());
  out.push_back(criterion_weight_table());
  out.push_back(criterion_minuscule());
  out.push_back(criterion_flops());
  out.push_back(criterion_local());
  out.push_back(criterion_dims());
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace qsurf::verify
