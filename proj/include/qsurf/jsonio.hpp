#pragma once

// JSON wire formats. Rationals are "p/q" strings (bare "p" when integral);
// integers are JSON numbers.

#include "qsurf/ade.hpp"
#include "qsurf/flopsim.hpp"
#include "qsurf/localint.hpp"
#include "qsurf/modulidim.hpp"
#include "qsurf/pic.hpp"
#include "qsurf/qsing.hpp"

#include <json.hpp>

namespace qsurf::jsonio {

using nlohmann::json;

json to_json(const Int& v);
json to_json(const Rat& v);
json to_json(const std::vector<Int>& v);
json to_json(const QVec& v);

// {"entries":[2,5], "class":{"kind":"Wahl","n":3,"a":2},
//  "discrepancies":["-1/3","-2/3"]}
json wahl_record(const qsing::TString& t);
json singularity_class(const qsing::SingularityClass& c);

// {"name":"F2","basis":["D0","G"],"gram":[[...]],"K":[...]}
json lattice(const pic::SurfaceLattice& l);
json divisor(const pic::DivisorClass& c);

// {"system":"E7","family":"E","rank":7,"weight":["3","-2",...]}
json weight(const ade::RootSystem& rs, const ade::Weight& w);

// {"omega":[...],"steps":[2,1,3],"initial_a":[...],"final_a":[...],
//  "final_dominant":true}
json flop_trace(const flopsim::FlopTrace& trace);

// {"sing":"D5","k":2,"mult":4,"separation":2,"post_blowup_singular":true,
//  "figure":"same_points_4(e)"}
json config_record(const localint::ConfigRecord& rec);

// Array of {row_id, expected_norm, computed_norm, pass} over the
// intersection-weight table with free indices swept to n_max.
json weight_table_report(int n_max);

// Enumeration report keyed by figure labels.
json config_figures(const std::vector<localint::ConfigRecord>& records);

// {"terms":{"dim_D":3,...},"total":39,"type_label":"1","sum":"3+6+48-12-6=39"}
json dim_report(const modulidim::DimReport& rep);

// Round-trip helpers used by the schema tests.
qsing::TString tstring_from_json(const json& j);
pic::DivisorClass divisor_from_json(const json& j);

}  // namespace qsurf::jsonio
