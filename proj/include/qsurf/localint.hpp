#pragma once

// Local intersection engine for curve germs over Q: ADE normal forms,
// intersection multiplicity against a smooth graph curve, the branch-curve
// blowup B -> sigma*B - 2E following the marked curve's point, separation
// numbers, and regeneration of the local classification case tables.

#include "qsurf/ade.hpp"  // Family
#include "qsurf/numeric.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace qsurf::localint {

using ade::Family;

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Bivariate polynomial truncated at a total-degree cap. `truncated` records
// whether terms above the cap were dropped or unknown, which is what keeps
// an exactly-zero polynomial distinguishable from an exhausted truncation.
struct LocalCurve {
  std::map<std::pair<int, int>, Rat> terms;  // (x-degree, y-degree) -> coefficient
  int degree_cap = 24;
  bool truncated = false;

  Rat at(int i, int j) const;
  bool zero() const { return terms.empty(); }
  // Minimal total degree; kUnbounded for the (exact) zero polynomial.
  int order() const;
  bool contains_origin() const;
  bool singular_at_origin() const;  // order >= 2
};

LocalCurve curve_from_terms(const std::vector<std::tuple<int, int, Rat>>& entries, int degree_cap = 24);
LocalCurve mul(const LocalCurve& a, const LocalCurve& b);
LocalCurve transpose(const LocalCurve& a);  // swap the roles of x and y

// Smooth curve through the origin in graph form x = f(y) or y = g(x).
struct GraphCurve {
  enum class Form { XofY, YofX };
  Form form = Form::XofY;
  std::vector<Rat> coeffs;  // coeffs[d] multiplies the d-th power; coeffs[0] = 0
  int valid_up_to = kUnbounded;  // degrees above this are unknown

  // Minimal degree k of f; kUnbounded when f = 0 (the coordinate axis).
  int min_degree() const;
};

GraphCurve graph_x_of_y(std::vector<Rat> coeffs);
GraphCurve graph_y_of_x(std::vector<Rat> coeffs);
// x - f(y) (resp. y - g(x)) as a LocalCurve, for assembling reducible branch
// divisors that contain the marked curve.
LocalCurve graph_as_curve(const GraphCurve& d, int degree_cap = 24);

// B(f(y), y) resp. B(x, g(x)); `valid_up_to` bounds the trustworthy degrees.
struct Substitution {
  std::vector<Rat> poly;
  int valid_up_to = kUnbounded;
};
Substitution substitute(const LocalCurve& b, const GraphCurve& d);

// Local intersection multiplicity (B.D)_0: the minimal degree of the
// substitution. Infinite when the substitution vanishes identically and the
// inputs are exact (containment); throws cap_exhausted when the truncation
// cannot decide.
struct MultResult {
  bool finite = true;
  long long value = 0;
};
MultResult mult(const LocalCurve& b, const GraphCurve& d);

// One blowup following D's point: in the chart centered at q_1 (the point of
// the proper transform of D on the exceptional curve), the branch divisor
// becomes sigma*B - 2E, i.e. B((u + f'(0))v, v)/v^2, and D becomes the graph
// of (f(y) - f'(0)y)/y. Requires the multiplicity of B at the origin >= 2.
// `exceptional_mult` overrides the subtracted multiple of E (1 for the
// residual curve B-bar when D is a component of B).
struct BlownUpPair {
  LocalCurve branch;
  GraphCurve curve;
};
BlownUpPair blowup_following(const LocalCurve& b, const GraphCurve& d, int exceptional_mult = 2);

// Raw chart form of the same transform with no recentering: substitute
// (x, xy) [chart 0] or (xy, y) [chart 1] and divide by the square of the
// exceptional coordinate.
LocalCurve blowup_branch(const LocalCurve& b, int chart);

// Number of blowups, following D's point, until the transformed branch curve
// is smooth at or misses the followed point.
int separation(const LocalCurve& b, const GraphCurve& d, int max_steps = 24);

// ---- classification-table machinery --------------------------------------

enum class TangencyKind {
  Transversal,      // x = 2y: transversal to every tangent cone
  TangentCone,      // x = 2 y^k: contact k with the tangent cone, generic coefficient
  TangentConeUnit,  // x = y^k + y^{k+1}: leading coefficient 1 (the cancellation case)
  BranchContact,    // A_n, n odd: x = y^{(n+1)/2} + y^k, contact k with one branch
  SmoothBranch,     // D_n: y = 2 x^k, contact k with the smooth branch y = 0
};

struct Tangency {
  TangencyKind kind = TangencyKind::Transversal;
  int k = 1;
};

std::string tangency_description(const Tangency& t);

// The D_n normal form y(x^2 + y^{n-2}); `minus_variant` selects the
// coordinate-changed alias y(x^2 - y^{n-2}).
LocalCurve normal_form(Family f, int n, int degree_cap = 24, bool minus_variant = false);

GraphCurve tangency_curve(Family f, int n, const Tangency& t);
std::vector<Tangency> tangency_presets(Family f, int n, int k_max);

struct ConfigRecord {
  std::string singularity;  // "D5"
  std::string tangency;
  int tangency_k = 1;  // contact order of the preset; 1 = transversal
  bool possible = true;
  std::string reason;  // set when impossible
  bool mult_finite = true;
  long long mult = 0;
  int separation = 0;
  bool post_blowup_singular = false;
  std::string figure;  // classification row id, empty when outside the tables
};

ConfigRecord classify_config(Family f, int n, const Tangency& t, int degree_cap = 24);

// Searches the tangency presets for the requested multiplicity; an explicit
// impossibility result when nothing attains it.
ConfigRecord classify_config_by_mult(Family f, int n, long long target_mult, int degree_cap = 24);

// Every preset configuration over families, indices n <= n_max, and contact
// orders k <= k_max.
std::vector<ConfigRecord> enumerate_configs(int n_max, int k_max);

// Rows of the odd-case classification figures realized in a sweep:
// multiplicity 2 or 3 with separation 1, or 4 or 5 with separation 2.
std::vector<ConfigRecord> odd_case_configs(int n_max, int k_max);

// Rows with every local contact even (the split-preimage case).
std::vector<ConfigRecord> even_case_configs(int n_max, int k_max);

}  // namespace qsurf::localint
