#pragma once

// Dimension bookkeeping for loci of triples (Z, B, D): linear-system
// dimensions, point conditions along D, singularity codimensions, and
// automorphism-group dimensions, assembled into itemized dimension reports.

#include "qsurf/numeric.hpp"

#include <string>
#include <vector>

namespace qsurf::modulidim {

enum class Base { F0, F2Cone };
enum class DClass { Delta, Gamma };
enum class LinSys { Delta, Gamma, FiveDelta, SixDelta };

// One marked point of B on D: the local intersection multiplicity imposed
// there, and the codimension of the singularity condition requested for B.
// The built-in conditions carry the Taylor degree their derivation uses;
// user-supplied codimensions are accepted but flagged unverified.
struct PointSpec {
  int mult = 1;
  std::string sing = "smooth";
  int sing_codim = 0;
  int taylor_degree = 1;
  bool verified = true;
};

// Built-in table: "smooth" (codim 0); "node" at mult 2 (codim 1); "A2" at
// mult 2 (codim 2); "node" at mult 3 (codim 2).
PointSpec point(int mult, const std::string& sing = "smooth");
PointSpec custom_point(int mult, std::string label, int codim, int taylor_degree);

struct LocusSpec {
  Base base = Base::F0;
  DClass d_class = DClass::Delta;
  std::vector<PointSpec> points;
  bool d_in_b = false;
  std::string label;
};

struct DimReport {
  Int dim_d, k, dim_b, mult_total, sing_total, aut;
  Int total;
  std::string sum_string;  // e.g. "3+6+48-12-1-6=38"
  std::string type_label;
};

// Projectivized dimension h^0 - 1 of the named system, sourced from the
// Hirzebruch section count (identical on F_0 and F_2).
Int linear_system_dim(Base base, LinSys cls);

// 6 for the smooth quadric, 7 for the cone.
Int aut_dim(Base base);

// dim|D| + k + dim|B| - sum mult - sum codim - dim Aut. With d_in_b the
// residual system |5 Delta| is used and the 10 point conditions are the
// B-bar intersections.
DimReport locus_dimension(const LocusSpec& spec);

// The named locus specifications: "1", "1'", "1''", "1'''", "2a", "2a'",
// "2a''", "2b", "D-in-B".
LocusSpec named_type(const std::string& label);
std::vector<std::string> named_type_labels();

}  // namespace qsurf::modulidim
