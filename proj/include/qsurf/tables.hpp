#pragma once

// Reference data for the weight-lattice checks: the table of weights
// attached to a degenerating (-4)-curve meeting one exceptional configuration
// (rows keyed by the local intersection number (B.D)_p and the singularity),
// and the sets of minuscule fundamental weights per family. These are the
// fixed expectations the computational routines are verified against.

#include "qsurf/ade.hpp"

#include <set>
#include <string>
#include <vector>

namespace qsurf::tables {

struct OddCaseRow {
  std::string id;       // stable row identifier, e.g. "m4-D5"
  int mult;             // (B.D)_p at the singular point
  ade::Family family;
  int n;                // concrete index of the singularity
  std::vector<std::pair<int, Int>> pairings;  // sparse C.E_i data, 1-based
  ade::Weight expected;                       // ambient model vector
};

// All rows, with every free index parameter swept up to n_max.
std::vector<OddCaseRow> odd_case_rows(int n_max);

// Dense intersection vector of a row (length = rank).
std::vector<Int> row_intersections(const OddCaseRow& row);

// {indices i with w_i minuscule} in the dual-graph labeling.
std::set<int> minuscule_indices(ade::Family f, int n);

}  // namespace qsurf::tables
