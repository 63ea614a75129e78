#include "qsurf/jsonio.hpp"

#include "qsurf/tables.hpp"

namespace qsurf::jsonio {

json to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return int_to_string(v);
}

json to_json(const Rat& v) { return rat_to_string(v); }

json to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

json singularity_class(const qsing::SingularityClass& c) {
  switch (c.kind) {
    case qsing::SingKind::NotT:
      return {{"kind", "NotT"}};
    case qsing::SingKind::T:
      return {{"kind", "T"}, {"d", to_json(c.d)}, {"n", to_json(c.n)}, {"a", to_json(c.a)}};
    case qsing::SingKind::Wahl:
      return {{"kind", "Wahl"}, {"n", to_json(c.n)}, {"a", to_json(c.a)}};
  }
  return {};
}

json wahl_record(const qsing::TString& t) {
  json j;
  j["entries"] = to_json(t);
  j["class"] = singularity_class(qsing::classify(t));
  json d = json::array();
  for (const Rat& a : qsing::discrepancies(t).values) d.push_back(rat_to_string(a));
  j["discrepancies"] = d;
  return j;
}

json lattice(const pic::SurfaceLattice& l) {
  json j;
  j["name"] = l.name;
  j["basis"] = l.basis;
  json gram = json::array();
  for (const auto& row : l.gram) gram.push_back(to_json(row));
  j["gram"] = gram;
  j["K"] = to_json(l.canonical);
  return j;
}

json divisor(const pic::DivisorClass& c) {
  return {{"lattice", c.lattice}, {"coeffs", to_json(c.coeffs)}};
}

json weight(const ade::RootSystem& rs, const ade::Weight& w) {
  json j;
  j["system"] = rs.name;
  if (rs.factors.size() == 1) {
    j["family"] = ade::family_name(rs.factors[0].first);
    j["rank"] = rs.factors[0].second;
  }
  j["weight"] = to_json(w);
  j["norm2"] = rat_to_string(ade::norm2(rs, w));
  j["dominant"] = ade::is_dominant(rs, w);
  return j;
}

json flop_trace(const flopsim::FlopTrace& trace) {
  json j;
  j["system"] = trace.initial.system->name;
  j["omega"] = to_json(trace.initial.omega);
  j["steps"] = trace.steps;
  j["initial_a"] = to_json(trace.initial.coeffs);
  j["final_a"] = to_json(trace.final_state.coeffs);
  j["final_mu"] = to_json(flopsim::mu_pairings(trace.final_state));
  j["final_dominant"] = trace.final_dominant;
  return j;
}

json config_record(const localint::ConfigRecord& rec) {
  json j;
  j["sing"] = rec.singularity;
  j["tangency"] = rec.tangency;
  j["k"] = rec.tangency_k;
  if (!rec.possible) {
    j["possible"] = false;
    j["reason"] = rec.reason;
    return j;
  }
  if (rec.mult_finite)
    j["mult"] = rec.mult;
  else
    j["mult"] = "infinite";
  j["separation"] = rec.separation;
  j["post_blowup_singular"] = rec.post_blowup_singular;
  if (!rec.figure.empty()) j["figure"] = rec.figure;
  return j;
}

json weight_table_report(int n_max) {
  json rows = json::array();
  for (const auto& row : tables::odd_case_rows(n_max)) {
    const auto rs = ade::build(row.family, row.n);
    const ade::Weight w = ade::weight_of_divisor(rs, tables::row_intersections(row));
    const Rat expected = row.mult <= 3 ? 2 : 4;
    const Rat computed = ade::norm2(rs, w);
    rows.push_back(json{{"row_id", row.id},
                        {"expected_norm", rat_to_string(expected)},
                        {"computed_norm", rat_to_string(computed)},
                        {"pass", computed == expected && w == row.expected}});
  }
  return rows;
}

json config_figures(const std::vector<localint::ConfigRecord>& records) {
  json by_figure = json::object();
  for (const auto& rec : records) {
    const std::string key = rec.figure.empty() ? "unclassified" : rec.figure;
    if (!by_figure.contains(key)) by_figure[key] = json::array();
    by_figure[key].push_back(config_record(rec));
  }
  return by_figure;
}

json dim_report(const modulidim::DimReport& rep) {
  json terms;
  terms["dim_D"] = to_json(rep.dim_d);
  terms["k"] = to_json(rep.k);
  terms["dim_B"] = to_json(rep.dim_b);
  terms["mult"] = to_json(Int(-rep.mult_total));
  terms["sing"] = to_json(Int(-rep.sing_total));
  terms["aut"] = to_json(Int(-rep.aut));
  json j;
  j["terms"] = terms;
  j["total"] = to_json(rep.total);
  j["sum"] = rep.sum_string;
  j["type_label"] = rep.type_label;
  return j;
}

qsing::TString tstring_from_json(const json& j) {
  qsing::TString t;
  for (const auto& v : j) t.push_back(v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>()));
  return t;
}

pic::DivisorClass divisor_from_json(const json& j) {
  pic::DivisorClass c;
  c.lattice = j.at("lattice").get<std::string>();
  for (const auto& v : j.at("coeffs"))
    c.coeffs.push_back(v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>()));
  return c;
}

}  // namespace qsurf::jsonio
