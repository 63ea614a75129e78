#include "qsurf/cli.hpp"

#include "qsurf/jsonio.hpp"
#include "qsurf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace qsurf::cli {

namespace {

using jsonio::json;

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw domain_error("empty entry in list '" + s + "'");
    try {
      out.push_back(Int(item));
    } catch (const std::runtime_error&) {
      throw domain_error("malformed integer '" + item + "'");
    }
  }
  if (out.empty()) throw domain_error("empty list");
  return out;
}

qsing::TString to_tstring(const std::vector<Int>& v) { return v; }

struct Output {
  bool json_mode = false;
  std::ostream& out;

  void emit(const json& j, const std::string& text) {
    if (json_mode)
      out << j.dump(2) << "\n";
    else
      out << text;
  }
};

std::string render_wahl_text(const qsing::TString& t) {
  std::ostringstream os;
  os << "entries: [";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << "]\n";
  const auto c = qsing::classify(t);
  switch (c.kind) {
    case qsing::SingKind::Wahl:
      os << "class: Wahl(n=" << c.n << ", a=" << c.a << ")\n";
      break;
    case qsing::SingKind::T:
      os << "class: T(d=" << c.d << ", n=" << c.n << ", a=" << c.a << ")\n";
      break;
    case qsing::SingKind::NotT:
      os << "class: not a T-string\n";
      break;
  }
  os << "discrepancies:";
  for (const Rat& a : qsing::discrepancies(t).values) os << " " << rat_to_string(a);
  os << "\n";
  return os.str();
}

int cmd_wahl(Output& o, const Int& n, const Int& a, int enumerate_r, bool bound_mode, const Int& kw2,
             const Int& ks2, bool on_line, bool general_type) {
  if (bound_mode) {
    const auto b = qsing::length_bound(kw2, ks2, on_line, general_type);
    json j{{"min", 1}, {"max", jsonio::to_json(b.max)}};
    std::ostringstream os;
    os << "possible lengths: 1.." << b.max << "\n";
    o.emit(j, os.str());
    return 0;
  }
  if (enumerate_r > 0) {
    const auto all = qsing::enumerate_wahl(enumerate_r);
    json arr = json::array();
    std::ostringstream os;
    for (const auto& s : all) {
      arr.push_back(jsonio::to_json(s));
      os << render_wahl_text(s) << "\n";
    }
    o.emit(json{{"strings", arr}, {"count", all.size()}}, os.str());
    return 0;
  }
  const auto t = qsing::wahl_string(n, a);
  o.emit(jsonio::wahl_record(t), render_wahl_text(t));
  return 0;
}

int cmd_hj(Output& o, const std::string& expand, const std::string& eval, const std::string& classify) {
  if (!expand.empty()) {
    const auto slash = expand.find('/');
    if (slash == std::string::npos) throw domain_error("--expand expects p/q");
    const qsing::Fraction f(Int(expand.substr(0, slash)), Int(expand.substr(slash + 1)));
    const auto t = qsing::hj_expand(f);
    o.emit(jsonio::wahl_record(t), render_wahl_text(t));
    return 0;
  }
  if (!eval.empty()) {
    const auto f = qsing::hj_eval(to_tstring(parse_int_list(eval)));
    std::ostringstream os;
    os << f.num << "/" << f.den << "\n";
    o.emit(json{{"num", jsonio::to_json(f.num)}, {"den", jsonio::to_json(f.den)}}, os.str());
    return 0;
  }
  if (!classify.empty()) {
    const auto t = to_tstring(parse_int_list(classify));
    o.emit(jsonio::wahl_record(t), render_wahl_text(t));
    return 0;
  }
  throw domain_error("hj needs one of --expand, --eval, --classify");
}

pic::SurfaceLattice parse_surface(const std::string& name) {
  if (name == "P2") return pic::projective_plane();
  if (name.size() >= 2 && name[0] == 'F') return pic::hirzebruch(std::stoi(name.substr(1)));
  throw domain_error("unknown surface '" + name + "' (use F<d> or P2)");
}

int cmd_pic(Output& o, const std::string& h0_spec, const std::string& surface, const std::string& cls_spec,
            const std::string& cover_spec, bool chi, bool genus, bool selfint) {
  if (!h0_spec.empty()) {
    const auto v = parse_int_list(h0_spec);
    if (v.size() != 3) throw domain_error("--h0 expects d,a,b");
    const Int h0 = pic::h0_hirzebruch(static_cast<int>(v[0].convert_to<long long>()), v[1], v[2]);
    std::ostringstream os;
    os << "h0 = " << h0 << "\n";
    o.emit(json{{"h0", jsonio::to_json(h0)}}, os.str());
    return 0;
  }
  if (surface.empty()) throw domain_error("pic needs --h0 or --surface");
  const pic::SurfaceLattice l = parse_surface(surface);
  if (cls_spec.empty()) {
    std::ostringstream os;
    os << "lattice " << l.name << ", rank " << l.rank() << "\n";
    o.emit(jsonio::lattice(l), os.str());
    return 0;
  }
  const pic::DivisorClass d = pic::cls(l, parse_int_list(cls_spec));
  json j = jsonio::divisor(d);
  std::ostringstream os;
  if (!cover_spec.empty()) {
    const pic::DivisorClass half = pic::cls(l, parse_int_list(cover_spec));
    const auto rules = pic::double_cover_pullback(l, d, half);
    j["K_Y_pushdown"] = jsonio::divisor(rules.k_downstairs);
    j["K_Y_dot_pullback"] = jsonio::to_json(rules.k_dot_pullback);
    j["pullback_self_int"] = jsonio::to_json(rules.pullback_self_int);
    os << "K_Y = f*(";
    for (int i = 0; i < l.rank(); ++i)
      os << (i ? " + " : "") << rules.k_downstairs.coeffs[i] << " " << l.basis[i];
    os << ")\nK_Y . f*(class) = " << rules.k_dot_pullback << "\n(f* class)^2 = " << rules.pullback_self_int
       << "\n";
    o.emit(j, os.str());
    return 0;
  }
  if (selfint || (!chi && !genus)) {
    j["self_int"] = jsonio::to_json(pic::self_int(l, d));
    os << "self-intersection: " << pic::self_int(l, d) << "\n";
  }
  if (chi) {
    j["chi"] = jsonio::to_json(pic::riemann_roch_chi(l, d));
    os << "chi: " << pic::riemann_roch_chi(l, d) << "\n";
  }
  if (genus) {
    j["genus"] = rat_to_string(pic::adjunction_genus(l, d));
    os << "arithmetic genus: " << rat_to_string(pic::adjunction_genus(l, d)) << "\n";
  }
  o.emit(j, os.str());
  return 0;
}

int cmd_lattice(Output& o, const std::string& system, bool minuscule, const std::string& weight_spec,
                int fundamental, int table_sweep) {
  if (table_sweep > 0) {
    const json rows = jsonio::weight_table_report(table_sweep);
    std::ostringstream os;
    for (const auto& row : rows)
      os << (row["pass"].get<bool>() ? "[ok]  " : "[BAD] ") << row["row_id"].get<std::string>()
         << ": norm " << row["computed_norm"].get<std::string>() << " (expected "
         << row["expected_norm"].get<std::string>() << ")\n";
    o.emit(json{{"rows", rows}}, os.str());
    return 0;
  }
  const ade::RootSystem rs = ade::parse_system(system);
  if (minuscule) {
    json arr = json::array();
    std::ostringstream os;
    os << "minuscule fundamental weights of " << rs.name << ":";
    for (int i = 1; i <= rs.rank; ++i)
      if (ade::is_minuscule(rs, i)) {
        arr.push_back(i);
        os << " w_" << i;
      }
    os << "\n";
    o.emit(json{{"system", rs.name}, {"minuscule", arr}}, os.str());
    return 0;
  }
  if (fundamental > 0) {
    if (fundamental > rs.rank) throw domain_error("fundamental index out of range");
    const ade::Weight w = ade::fundamental_weights(rs)[fundamental - 1];
    std::ostringstream os;
    os << "w_" << fundamental << " =";
    for (const Rat& v : w) os << " " << rat_to_string(v);
    os << "  (norm^2 " << rat_to_string(ade::norm2(rs, w)) << ")\n";
    o.emit(jsonio::weight(rs, w), os.str());
    return 0;
  }
  if (!weight_spec.empty()) {
    const ade::Weight w = ade::weight_of_divisor(rs, parse_int_list(weight_spec));
    std::ostringstream os;
    os << "weight =";
    for (const Rat& v : w) os << " " << rat_to_string(v);
    os << "\nnorm^2 = " << rat_to_string(ade::norm2(rs, w)) << "\ndominant = " << (ade::is_dominant(rs, w) ? "yes" : "no")
       << "\n";
    o.emit(jsonio::weight(rs, w), os.str());
    return 0;
  }
  std::ostringstream os;
  os << rs.name << ": rank " << rs.rank << ", positive roots " << rs.positive.size() << "\n";
  o.emit(json{{"system", rs.name}, {"rank", rs.rank}, {"positive_roots", rs.positive.size()}}, os.str());
  return 0;
}

int cmd_flop(Output& o, const std::string& system, const std::string& omega_spec, const std::string& a_spec,
             const std::string& policy_name, const Int& decompose_height) {
  const auto rs = std::make_shared<const ade::RootSystem>(ade::parse_system(system));
  const std::vector<Int> omega = parse_int_list(omega_spec);
  if (decompose_height >= 0) {
    const auto all = flopsim::dominant_decompositions(*rs, omega, decompose_height);
    json arr = json::array();
    std::ostringstream os;
    for (const auto& b : all) {
      arr.push_back(jsonio::to_json(b));
      os << "a = (";
      for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << ")\n";
    }
    o.emit(json{{"system", rs->name}, {"omega", jsonio::to_json(omega)}, {"decompositions", arr}}, os.str());
    return 0;
  }
  if (a_spec.empty()) throw domain_error("flop needs --a (or --decompositions)");
  flopsim::Policy policy = flopsim::Policy::SmallestIndex;
  if (policy_name == "largest")
    policy = flopsim::Policy::LargestIndex;
  else if (policy_name == "most-negative")
    policy = flopsim::Policy::MostNegative;
  else if (!policy_name.empty() && policy_name != "smallest")
    throw domain_error("unknown policy '" + policy_name + "'");
  const auto state = flopsim::make_state(rs, omega, parse_int_list(a_spec));
  const auto trace = flopsim::reduce(state, policy);
  std::ostringstream os;
  os << "steps:";
  for (int s : trace.steps) os << " " << s;
  os << "\nfinal a: (";
  for (size_t i = 0; i < trace.final_state.coeffs.size(); ++i)
    os << (i ? "," : "") << trace.final_state.coeffs[i];
  os << ")\nfinal mu dominant: yes\n";
  o.emit(jsonio::flop_trace(trace), os.str());
  return 0;
}

std::string render_config_text(const localint::ConfigRecord& rec) {
  std::ostringstream os;
  os << rec.singularity << ", " << rec.tangency << "\n";
  if (!rec.possible) {
    os << "impossible: " << rec.reason << "\n";
    return os.str();
  }
  if (rec.mult_finite)
    os << "(B.D) = " << rec.mult << ", separation = " << rec.separation << ", branch singular after one blowup: "
       << (rec.post_blowup_singular ? "yes" : "no") << "\n";
  else
    os << "(B.D) infinite: D is a component of B\n";
  if (!rec.figure.empty()) os << "figure: " << rec.figure << "\n";
  return os.str();
}

int cmd_local(Output& o, const std::string& family, int n, bool transversal, int tangent, int unit,
              int branch_contact, int smooth_branch, long long target_mult, const std::string& sweep) {
  using localint::Tangency;
  using localint::TangencyKind;
  if (!sweep.empty()) {
    const auto v = parse_int_list(sweep);
    if (v.size() != 2) throw domain_error("--sweep expects n_max,k_max");
    const auto rows =
        localint::odd_case_configs(static_cast<int>(v[0].convert_to<long long>()),
                                   static_cast<int>(v[1].convert_to<long long>()));
    std::ostringstream os;
    for (const auto& rec : rows) os << render_config_text(rec);
    o.emit(json{{"figures", jsonio::config_figures(rows)}}, os.str());
    return 0;
  }
  if (family.empty()) throw domain_error("local needs --family and --n");
  ade::Family f;
  if (family == "A")
    f = ade::Family::A;
  else if (family == "D")
    f = ade::Family::D;
  else if (family == "E")
    f = ade::Family::E;
  else
    throw domain_error("family must be A, D, or E");

  localint::ConfigRecord rec;
  if (target_mult > 0) {
    rec = localint::classify_config_by_mult(f, n, target_mult);
  } else {
    Tangency t{TangencyKind::Transversal, 1};
    if (tangent > 0) t = {TangencyKind::TangentCone, tangent};
    if (unit > 0) t = {TangencyKind::TangentConeUnit, unit};
    if (branch_contact > 0) t = {TangencyKind::BranchContact, branch_contact};
    if (smooth_branch > 0) t = {TangencyKind::SmoothBranch, smooth_branch};
    (void)transversal;
    rec = localint::classify_config(f, n, t);
  }
  o.emit(jsonio::config_record(rec), render_config_text(rec));
  return rec.possible ? 0 : 1;
}

int cmd_dims(Output& o, const std::string& type, bool list) {
  if (list) {
    json arr = json::array();
    std::ostringstream os;
    for (const auto& label : modulidim::named_type_labels()) {
      const auto rep = modulidim::locus_dimension(modulidim::named_type(label));
      arr.push_back(jsonio::dim_report(rep));
      os << "type " << label << ": " << rep.sum_string << "\n";
    }
    o.emit(json{{"types", arr}}, os.str());
    return 0;
  }
  const auto rep = modulidim::locus_dimension(modulidim::named_type(type));
  std::ostringstream os;
  os << "type " << type << ": " << rep.sum_string << "\n";
  o.emit(jsonio::dim_report(rep), os.str());
  return 0;
}

int cmd_verify(Output& o) {
  const auto checks = verify::run_acceptance();
  json arr = json::array();
  std::ostringstream os;
  for (const auto& c : checks) {
    json j{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"assertions", c.assertions}};
    j["failures"] = c.failures;
    arr.push_back(j);
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.name << " (" << c.assertions
       << " assertions)\n";
    for (const auto& f : c.failures) os << "       " << f << "\n";
  }
  const bool ok = verify::all_passed(checks);
  os << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  o.emit(json{{"checks", arr}, {"all_passed", ok}}, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for Wahl strings, surface lattices, ADE weights, "
               "flop reduction, local intersections, and moduli dimension counts"};
  app.name("qsurf");

  std::string format = "text";
  if (const char* env = std::getenv("QSURF_FORMAT")) format = env;
  app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));

  // wahl
  auto* wahl = app.add_subcommand("wahl", "Wahl strings: construction, enumeration, length bounds");
  std::string wahl_n, wahl_a, wahl_kw2, wahl_ks2;
  int wahl_enum = 0;
  bool wahl_bound = false, wahl_online = false, wahl_gt = false;
  wahl->add_option("--n", wahl_n, "index n of 1/n^2(1, na-1)");
  wahl->add_option("--a", wahl_a, "weight a of 1/n^2(1, na-1)");
  wahl->add_option("--enumerate", wahl_enum, "list all Wahl strings of length <= R");
  wahl->add_flag("--bound", wahl_bound, "length bound mode");
  wahl->add_option("--kw2", wahl_kw2, "K_W^2");
  wahl->add_option("--ks2", wahl_ks2, "K_S^2");
  wahl->add_flag("--on-line", wahl_online, "K_W^2 = 2 p_g - 3 holds");
  wahl->add_flag("--general-type", wahl_gt, "the minimal model is of general type");

  // hj
  auto* hj = app.add_subcommand("hj", "continued fraction expansion and evaluation");
  std::string hj_expand, hj_eval, hj_classify;
  hj->add_option("--expand", hj_expand, "fraction p/q to expand");
  hj->add_option("--eval", hj_eval, "comma-separated entries to evaluate");
  hj->add_option("--classify", hj_classify, "comma-separated entries to classify");

  // pic
  auto* picc = app.add_subcommand("pic", "surface lattice computations");
  std::string pic_h0, pic_surface, pic_class, pic_cover;
  bool pic_chi = false, pic_genus = false, pic_self = false;
  picc->add_option("--h0", pic_h0, "d,a,b: sections of a D0 + b G on F_d");
  picc->add_option("--surface", pic_surface, "F<d> or P2");
  picc->add_option("--class", pic_class, "divisor class coefficients");
  picc->add_option("--cover", pic_cover, "half branch class L (B ~ 2L): report K_Y rules");
  picc->add_flag("--chi", pic_chi, "Riemann-Roch chi");
  picc->add_flag("--genus", pic_genus, "arithmetic genus");
  picc->add_flag("--self-int", pic_self, "self-intersection");

  // lattice
  auto* lat = app.add_subcommand("lattice", "ADE root systems and weights");
  std::string lat_system = "A1", lat_weight;
  bool lat_minuscule = false;
  int lat_fund = 0, lat_table = 0;
  lat->add_option("--system", lat_system, "A<n>, D<n>, E<n>, or sums like A2+A3");
  lat->add_flag("--minuscule", lat_minuscule, "list minuscule fundamental weights");
  lat->add_option("--weight", lat_weight, "intersection numbers C.E_i, comma separated");
  lat->add_option("--fundamental", lat_fund, "print the i-th fundamental weight");
  lat->add_option("--table", lat_table, "verify the intersection-weight table swept to this index");

  // flop
  auto* flop = app.add_subcommand("flop", "flop reduction of a degenerating curve class");
  std::string flop_system, flop_omega, flop_a, flop_policy;
  Int flop_decomp = -1;
  std::string flop_decomp_str;
  flop->add_option("--system", flop_system, "root system spec")->required();
  flop->add_option("--omega", flop_omega, "pairing coordinates of omega_C")->required();
  flop->add_option("--a", flop_a, "initial coefficients a_i");
  flop->add_option("--policy", flop_policy, "smallest | largest | most-negative");
  flop->add_option("--decompositions", flop_decomp_str, "enumerate dominant decompositions up to this height");

  // local
  auto* local = app.add_subcommand("local", "local branch-curve intersection analysis");
  std::string local_family, local_sweep;
  int local_n = 0, local_tangent = 0, local_unit = 0, local_branch = 0, local_smooth = 0;
  bool local_trans = false;
  long long local_mult = 0;
  local->add_option("--family", local_family, "A, D, or E");
  local->add_option("--n", local_n, "singularity index");
  local->add_flag("--transversal", local_trans, "D transversal to every tangent cone (default)");
  local->add_option("--tangent", local_tangent, "D tangent to the tangent cone with this order");
  local->add_option("--unit", local_unit, "tangent with leading coefficient 1 (cancellation case)");
  local->add_option("--branch-contact", local_branch, "contact with one branch (A_n, n odd)");
  local->add_option("--smooth-branch", local_smooth, "contact with the smooth branch (D_n)");
  local->add_option("--mult", local_mult, "search presets for this intersection multiplicity");
  local->add_option("--sweep", local_sweep, "n_max,k_max: enumerate the odd-case rows");

  // dims
  auto* dims = app.add_subcommand("dims", "moduli locus dimension reports");
  std::string dims_type;
  bool dims_list = false;
  dims->add_option("--type", dims_type, "named type: 1, 1', 1'', 1''', 2a, 2a', 2a'', 2b, D-in-B");
  dims->add_flag("--list", dims_list, "all named types");

  auto* vp = app.add_subcommand("verify-paper", "run every reference check and report pass/fail");

  app.require_subcommand(1);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Output o{format == "json", out};
  try {
    if (wahl->parsed())
      return cmd_wahl(o, wahl_n.empty() ? Int(0) : Int(wahl_n), wahl_a.empty() ? Int(0) : Int(wahl_a),
                      wahl_enum, wahl_bound, wahl_kw2.empty() ? Int(0) : Int(wahl_kw2),
                      wahl_ks2.empty() ? Int(0) : Int(wahl_ks2), wahl_online, wahl_gt);
    if (hj->parsed()) return cmd_hj(o, hj_expand, hj_eval, hj_classify);
    if (picc->parsed()) return cmd_pic(o, pic_h0, pic_surface, pic_class, pic_cover, pic_chi, pic_genus, pic_self);
    if (lat->parsed()) return cmd_lattice(o, lat_system, lat_minuscule, lat_weight, lat_fund, lat_table);
    if (flop->parsed()) {
      if (!flop_decomp_str.empty()) flop_decomp = Int(flop_decomp_str);
      return cmd_flop(o, flop_system, flop_omega, flop_a, flop_policy, flop_decomp);
    }
    if (local->parsed())
      return cmd_local(o, local_family, local_n, local_trans, local_tangent, local_unit, local_branch,
                       local_smooth, local_mult, local_sweep);
    if (dims->parsed()) return cmd_dims(o, dims_type, dims_list);
    if (vp->parsed()) return cmd_verify(o);
  } catch (const std::exception& e) {
    if (o.json_mode)
      out << json{{"error", e.what()}}.dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace qsurf::cli
