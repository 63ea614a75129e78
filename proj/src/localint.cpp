#include "qsurf/localint.hpp"

#include <algorithm>

namespace qsurf::localint {

namespace {

using Poly = std::vector<Rat>;  // univariate, index = degree

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// (d, k) -> d choose k, exact.
Int binomial(int d, int k) {
  Int out = 1;
  for (int t = 1; t <= k; ++t) out = out * (d - t + 1) / t;
  return out;
}

GraphCurve normalized_graph(const GraphCurve& d) {
  GraphCurve out = d;
  out.form = GraphCurve::Form::XofY;
  if (out.coeffs.empty()) out.coeffs.assign(1, Rat(0));
  if (out.coeffs[0] != 0) throw domain_error("graph curve must pass through the origin");
  return out;
}

// Puts (B, D) into the x = f(y) orientation, transposing B if needed.
std::pair<LocalCurve, GraphCurve> orient(const LocalCurve& b, const GraphCurve& d) {
  if (d.form == GraphCurve::Form::XofY) return {b, normalized_graph(d)};
  return {transpose(b), normalized_graph(d)};
}

}  // namespace

Rat LocalCurve::at(int i, int j) const {
  auto it = terms.find({i, j});
  return it == terms.end() ? Rat(0) : it->second;
}

int LocalCurve::order() const {
  int best = kUnbounded;
  for (const auto& [key, coeff] : terms) best = std::min(best, key.first + key.second);
  return best;
}

bool LocalCurve::contains_origin() const {
  if (zero() && truncated) throw cap_exhausted("curve is zero up to the cap; containment undecidable");
  return order() >= 1;
}

bool LocalCurve::singular_at_origin() const {
  if (zero() && truncated) throw cap_exhausted("curve is zero up to the cap; smoothness undecidable");
  const int o = order();
  return o >= 2 && o != kUnbounded;
}

LocalCurve curve_from_terms(const std::vector<std::tuple<int, int, Rat>>& entries, int degree_cap) {
  LocalCurve c;
  c.degree_cap = degree_cap;
  for (const auto& [i, j, coeff] : entries) {
    if (i < 0 || j < 0) throw domain_error("negative exponent");
    if (i + j > degree_cap) throw domain_error("term above the degree cap");
    if (coeff == 0) continue;
    c.terms[{i, j}] += coeff;
    if (c.terms[{i, j}] == 0) c.terms.erase({i, j});
  }
  return c;
}

LocalCurve mul(const LocalCurve& a, const LocalCurve& b) {
  LocalCurve out;
  out.degree_cap = std::min(a.degree_cap, b.degree_cap);
  out.truncated = a.truncated || b.truncated;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i + j > out.degree_cap) {
        out.truncated = true;
        continue;
      }
      auto& slot = out.terms[{i, j}];
      slot += ca * cb;
      if (slot == 0) out.terms.erase({i, j});
    }
  return out;
}

LocalCurve transpose(const LocalCurve& a) {
  LocalCurve out;
  out.degree_cap = a.degree_cap;
  out.truncated = a.truncated;
  for (const auto& [key, coeff] : a.terms) out.terms[{key.second, key.first}] = coeff;
  return out;
}

int GraphCurve::min_degree() const {
  for (size_t d = 1; d < coeffs.size(); ++d)
    if (coeffs[d] != 0) return static_cast<int>(d);
  return kUnbounded;
}

GraphCurve graph_x_of_y(std::vector<Rat> coeffs) {
  GraphCurve g{GraphCurve::Form::XofY, std::move(coeffs)};
  return normalized_graph(g);
}

GraphCurve graph_y_of_x(std::vector<Rat> coeffs) {
  GraphCurve g{GraphCurve::Form::YofX, std::move(coeffs)};
  GraphCurve checked = normalized_graph(g);
  checked.form = GraphCurve::Form::YofX;
  return checked;
}

LocalCurve graph_as_curve(const GraphCurve& d, int degree_cap) {
  std::vector<std::tuple<int, int, Rat>> entries;
  const bool xofy = d.form == GraphCurve::Form::XofY;
  entries.emplace_back(xofy ? 1 : 0, xofy ? 0 : 1, Rat(1));
  for (size_t k = 1; k < d.coeffs.size(); ++k) {
    if (d.coeffs[k] == 0) continue;
    entries.emplace_back(xofy ? 0 : static_cast<int>(k), xofy ? static_cast<int>(k) : 0, -d.coeffs[k]);
  }
  return curve_from_terms(entries, degree_cap);
}

Substitution substitute(const LocalCurve& b, const GraphCurve& d) {
  auto [curve, graph] = orient(b, d);
  int max_x = 0;
  for (const auto& [key, coeff] : curve.terms) max_x = std::max(max_x, key.first);
  std::vector<Poly> fpow(max_x + 1);
  fpow[0] = {Rat(1)};
  Poly f = graph.coeffs;
  trim(f);
  for (int i = 1; i <= max_x; ++i) fpow[i] = poly_mul(fpow[i - 1], f);

  Poly out;
  for (const auto& [key, coeff] : curve.terms) {
    const auto& p = fpow[key.first];
    if (p.empty()) continue;
    if (out.size() < p.size() + key.second) out.resize(p.size() + key.second, Rat(0));
    for (size_t t = 0; t < p.size(); ++t) out[t + key.second] += coeff * p[t];
  }
  trim(out);
  int valid = graph.valid_up_to;
  if (curve.truncated) valid = std::min(valid, curve.degree_cap);
  return Substitution{std::move(out), valid};
}

MultResult mult(const LocalCurve& b, const GraphCurve& d) {
  const Substitution s = substitute(b, d);
  for (size_t deg = 0; deg < s.poly.size(); ++deg) {
    if (s.poly[deg] == 0) continue;
    if (static_cast<int>(deg) > s.valid_up_to)
      throw cap_exhausted("intersection multiplicity exceeds the trustworthy degree range");
    return MultResult{true, static_cast<long long>(deg)};
  }
  if (s.valid_up_to != kUnbounded)
    throw cap_exhausted("substitution vanishes up to the cap; containment undecidable");
  return MultResult{false, 0};  // D is a component of B
}

BlownUpPair blowup_following(const LocalCurve& b, const GraphCurve& d, int exceptional_mult) {
  auto [curve, graph] = orient(b, d);
  if (curve.zero()) throw domain_error("cannot blow up the zero curve");
  if (exceptional_mult < 1) throw domain_error("exceptional multiplicity must be >= 1");
  if (curve.order() < exceptional_mult)
    throw domain_error("branch transform sigma*B - " + std::to_string(exceptional_mult) +
                       "E needs multiplicity >= " + std::to_string(exceptional_mult) + " at the center");
  if (graph.valid_up_to < 1) throw cap_exhausted("graph curve linear term is unknown");
  const Rat slope = graph.coeffs.size() > 1 ? graph.coeffs[1] : Rat(0);

  // B((u + slope) v, v) / v^e in the chart centered at q_1.
  LocalCurve out;
  out.degree_cap = curve.degree_cap;
  out.truncated = curve.truncated;
  std::vector<Rat> slope_pow{Rat(1)};
  for (const auto& [key, coeff] : curve.terms) {
    const int i = key.first, j = key.second;
    while (static_cast<int>(slope_pow.size()) <= i) slope_pow.push_back(slope_pow.back() * slope);
    for (int t = 0; t <= i; ++t) {
      if (slope == 0 && t != i) continue;
      const Rat c = coeff * Rat(binomial(i, t)) * slope_pow[i - t];
      if (c == 0) continue;
      const int u_deg = t, v_deg = i + j - exceptional_mult;
      if (u_deg + v_deg > out.degree_cap) {
        out.truncated = true;
        continue;
      }
      auto& slot = out.terms[{u_deg, v_deg}];
      slot += c;
      if (slot == 0) out.terms.erase({u_deg, v_deg});
    }
  }

  GraphCurve next;
  next.form = GraphCurve::Form::XofY;
  next.coeffs.assign(std::max<size_t>(graph.coeffs.size(), 2) - 1, Rat(0));
  for (size_t k = 2; k < graph.coeffs.size(); ++k) next.coeffs[k - 1] = graph.coeffs[k];
  if (graph.valid_up_to != kUnbounded) next.valid_up_to = graph.valid_up_to - 1;
  return BlownUpPair{std::move(out), std::move(next)};
}

LocalCurve blowup_branch(const LocalCurve& b, int chart) {
  if (chart != 0 && chart != 1) throw domain_error("chart must be 0 or 1");
  if (b.zero()) throw domain_error("cannot blow up the zero curve");
  if (b.order() < 2) throw domain_error("branch transform sigma*B - 2E needs multiplicity >= 2 at the center");
  LocalCurve out;
  out.degree_cap = b.degree_cap;
  out.truncated = b.truncated;
  for (const auto& [key, coeff] : b.terms) {
    const int i = key.first, j = key.second;
    // chart 0: (x, y) -> (x, xy); chart 1: (x, y) -> (xy, y).
    const int u = chart == 0 ? i + j - 2 : i;
    const int v = chart == 0 ? j : i + j - 2;
    if (u + v > out.degree_cap) {
      out.truncated = true;
      continue;
    }
    auto& slot = out.terms[{u, v}];
    slot += coeff;
    if (slot == 0) out.terms.erase({u, v});
  }
  return out;
}

int separation(const LocalCurve& b, const GraphCurve& d, int max_steps) {
  auto [curve, graph] = orient(b, d);
  int l = 0;
  while (true) {
    if (curve.zero()) {
      if (curve.truncated) throw cap_exhausted("separation: branch curve vanished up to the cap");
      throw domain_error("separation of the zero curve is undefined");
    }
    const int ord = curve.order();
    if (ord <= 1) return l;  // misses the followed point, or smooth there
    if (l >= max_steps) throw cap_exhausted("separation did not stabilize within the step bound");
    auto next = blowup_following(curve, graph);
    curve = std::move(next.branch);
    graph = std::move(next.curve);
    ++l;
  }
}

// ---- classification-table machinery --------------------------------------

std::string tangency_description(const Tangency& t) {
  switch (t.kind) {
    case TangencyKind::Transversal:
      return "transversal";
    case TangencyKind::TangentCone:
      return "tangent order " + std::to_string(t.k);
    case TangencyKind::TangentConeUnit:
      return "tangent order " + std::to_string(t.k) + ", leading coefficient 1";
    case TangencyKind::BranchContact:
      return "contact " + std::to_string(t.k) + " with one branch";
    case TangencyKind::SmoothBranch:
      return "contact " + std::to_string(t.k) + " with the smooth branch";
  }
  return "?";
}

LocalCurve normal_form(Family f, int n, int degree_cap, bool minus_variant) {
  switch (f) {
    case Family::A:
      if (n < 1) throw domain_error("A_n requires n >= 1");
      return curve_from_terms({{2, 0, Rat(1)}, {0, n + 1, Rat(-1)}}, degree_cap);
    case Family::D:
      if (n < 4) throw domain_error("D_n requires n >= 4");
      return curve_from_terms({{2, 1, Rat(1)}, {0, n - 1, Rat(minus_variant ? -1 : 1)}}, degree_cap);
    case Family::E:
      if (n == 6) return curve_from_terms({{3, 0, Rat(1)}, {0, 4, Rat(-1)}}, degree_cap);
      if (n == 7) return curve_from_terms({{3, 0, Rat(1)}, {1, 3, Rat(-1)}}, degree_cap);
      if (n == 8) return curve_from_terms({{3, 0, Rat(1)}, {0, 5, Rat(1)}}, degree_cap);
      throw domain_error("E_n requires n in {6, 7, 8}");
  }
  throw domain_error("unknown family");
}

GraphCurve tangency_curve(Family f, int n, const Tangency& t) {
  switch (t.kind) {
    case TangencyKind::Transversal:
      return graph_x_of_y({Rat(0), Rat(2)});
    case TangencyKind::TangentCone: {
      if (t.k < 2) throw domain_error("tangent order must be >= 2");
      std::vector<Rat> c(t.k + 1, Rat(0));
      c[t.k] = 2;
      return graph_x_of_y(std::move(c));
    }
    case TangencyKind::TangentConeUnit: {
      if (t.k < 2) throw domain_error("tangent order must be >= 2");
      std::vector<Rat> c(t.k + 2, Rat(0));
      c[t.k] = 1;
      c[t.k + 1] = 1;
      return graph_x_of_y(std::move(c));
    }
    case TangencyKind::BranchContact: {
      if (f != Family::A || n % 2 == 0) throw domain_error("branch contact presets exist for A_n, n odd");
      const int m = (n + 1) / 2;
      if (t.k <= m) throw domain_error("branch contact must exceed the branch's own order");
      std::vector<Rat> c(t.k + 1, Rat(0));
      c[m] = 1;
      c[t.k] = 1;
      return graph_x_of_y(std::move(c));
    }
    case TangencyKind::SmoothBranch: {
      if (f != Family::D) throw domain_error("smooth-branch presets exist for D_n");
      if (t.k < 2) throw domain_error("contact must be >= 2");
      std::vector<Rat> c(t.k + 1, Rat(0));
      c[t.k] = 2;
      return graph_y_of_x(std::move(c));
    }
  }
  throw domain_error("unknown tangency kind");
}

std::vector<Tangency> tangency_presets(Family f, int n, int k_max) {
  std::vector<Tangency> out{{TangencyKind::Transversal, 1}};
  for (int k = 2; k <= k_max; ++k) out.push_back({TangencyKind::TangentCone, k});
  if (f == Family::A && n % 2 == 1)
    for (int k = (n + 1) / 2 + 1; k <= k_max; ++k) out.push_back({TangencyKind::BranchContact, k});
  if (f == Family::D)
    for (int k = 2; k <= k_max; ++k) out.push_back({TangencyKind::SmoothBranch, k});
  return out;
}

namespace {

std::string assign_figure(Family f, int n, const Tangency& t, long long m, int sep) {
  using K = TangencyKind;
  if (m == 2 && sep == 1 && f == Family::A) return n % 2 ? "distinct_points(a)" : "distinct_points(b)";
  if (m == 3 && sep == 1) {
    if (f == Family::A && n == 1) return "distinct_points(c)";
    if (f == Family::A && n == 2) return "distinct_points(d)";
    if (f == Family::D) return n % 2 ? "distinct_points(e)" : "distinct_points(f)";
    if (f == Family::E && n == 6) return "distinct_points(g)";
    if (f == Family::E && n == 7) return "distinct_points(h)";
    if (f == Family::E && n == 8) return "distinct_points(i)";
  }
  if (m == 4 && sep == 2) {
    if (f == Family::A && n == 3) return t.kind == K::TangentCone && t.k >= 3 ? "same_points_4(a)" : "same_points_4(b)";
    if (f == Family::A && n >= 5 && n % 2 == 1) return "same_points_4(c)";
    if (f == Family::A && n % 2 == 0) return "same_points_4(d)";
    if (f == Family::D && n == 5 && t.kind != K::SmoothBranch) return "same_points_4(e)";
    if (f == Family::D && t.kind == K::SmoothBranch) return n % 2 ? "same_points_4(f)" : "same_points_4(g)";
    if (f == Family::E && n == 6) return "same_points_4(h)";
  }
  if (m == 5 && sep == 2) {
    if (f == Family::A && n == 3) return "same_points_5(a)";
    if (f == Family::A && n == 4) return "same_points_5(b)";
    if (f == Family::D && t.kind != K::SmoothBranch) return n % 2 ? "same_points_5(c)" : "same_points_5(e)";
    if (f == Family::D && t.kind == K::SmoothBranch) return n % 2 ? "same_points_5(d)" : "same_points_5(f)";
    if (f == Family::E && n == 7) return "same_points_5(g)";
    if (f == Family::E && n == 8) return "same_points_5(h)";
  }
  return "";
}

}  // namespace

ConfigRecord classify_config(Family f, int n, const Tangency& t, int degree_cap) {
  ConfigRecord rec;
  rec.singularity = ade::family_name(f) + std::to_string(n);
  rec.tangency = tangency_description(t);
  rec.tangency_k = t.k;
  const LocalCurve b = normal_form(f, n, degree_cap);
  const GraphCurve d = tangency_curve(f, n, t);
  const MultResult m = mult(b, d);
  rec.mult_finite = m.finite;
  rec.mult = m.value;
  if (!m.finite) {
    rec.separation = 0;
    return rec;
  }
  rec.separation = separation(b, d);
  rec.post_blowup_singular = blowup_following(b, d).branch.singular_at_origin();
  rec.figure = assign_figure(f, n, t, rec.mult, rec.separation);
  return rec;
}

ConfigRecord classify_config_by_mult(Family f, int n, long long target_mult, int degree_cap) {
  std::vector<long long> attained;
  for (const Tangency& t : tangency_presets(f, n, 6)) {
    ConfigRecord rec = classify_config(f, n, t, degree_cap);
    if (rec.mult_finite && rec.mult == target_mult) return rec;
    if (rec.mult_finite) attained.push_back(rec.mult);
  }
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  ConfigRecord rec;
  rec.singularity = ade::family_name(f) + std::to_string(n);
  rec.tangency = "(B.D) = " + std::to_string(target_mult) + " requested";
  rec.possible = false;
  rec.reason = "no local configuration attains this multiplicity; attainable:";
  for (long long v : attained) rec.reason += " " + std::to_string(v);
  return rec;
}

std::vector<ConfigRecord> enumerate_configs(int n_max, int k_max) {
  std::vector<ConfigRecord> out;
  auto sweep = [&](Family f, int lo, int hi) {
    for (int n = lo; n <= hi; ++n)
      for (const Tangency& t : tangency_presets(f, n, k_max)) out.push_back(classify_config(f, n, t));
  };
  sweep(Family::A, 1, n_max);
  if (n_max >= 4) sweep(Family::D, 4, n_max);
  sweep(Family::E, 6, std::min(8, n_max));
  return out;
}

std::vector<ConfigRecord> odd_case_configs(int n_max, int k_max) {
  std::vector<ConfigRecord> out;
  for (ConfigRecord& rec : enumerate_configs(n_max, k_max)) {
    if (!rec.mult_finite) continue;
    const bool distinct = (rec.mult == 2 || rec.mult == 3) && rec.separation == 1;
    const bool infinitely_near = (rec.mult == 4 || rec.mult == 5) && rec.separation == 2;
    if (distinct || infinitely_near) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ConfigRecord> even_case_configs(int n_max, int k_max) {
  std::vector<ConfigRecord> out;
  for (ConfigRecord& rec : enumerate_configs(n_max, k_max))
    if (rec.mult_finite && rec.mult >= 2 && rec.mult % 2 == 0) out.push_back(std::move(rec));
  return out;
}

}  // namespace qsurf::localint
