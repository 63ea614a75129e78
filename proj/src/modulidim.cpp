#include "qsurf/modulidim.hpp"

#include "qsurf/pic.hpp"

namespace qsurf::modulidim {

PointSpec point(int mult, const std::string& sing) {
  if (mult < 1) throw domain_error("point multiplicity must be >= 1");
  if (sing == "smooth") return PointSpec{mult, sing, 0, 1, true};
  if (sing == "node" && mult == 2) return PointSpec{mult, sing, 1, 3, true};
  if (sing == "A2" && mult == 2) return PointSpec{mult, sing, 2, 4, true};
  if (sing == "node" && mult == 3) return PointSpec{mult, sing, 2, 3, true};
  throw domain_error("no built-in codimension for '" + sing + "' at multiplicity " + std::to_string(mult) +
                     "; supply one with custom_point");
}

PointSpec custom_point(int mult, std::string label, int codim, int taylor_degree) {
  if (mult < 1 || codim < 0 || taylor_degree < 1) throw domain_error("malformed point condition");
  return PointSpec{mult, std::move(label), codim, taylor_degree, false};
}

Int linear_system_dim(Base base, LinSys cls) {
  const int d = base == Base::F0 ? 0 : 2;
  Int a, b;
  switch (cls) {
    case LinSys::Delta:
      a = 1;
      b = d == 0 ? 1 : 2;
      break;
    case LinSys::Gamma:
      a = 0;
      b = 1;
      break;
    case LinSys::FiveDelta:
      a = 5;
      b = d == 0 ? 5 : 10;
      break;
    case LinSys::SixDelta:
      a = 6;
      b = d == 0 ? 6 : 12;
      break;
  }
  return pic::h0_hirzebruch(d, a, b) - 1;
}

Int aut_dim(Base base) { return base == Base::F0 ? 6 : 7; }

DimReport locus_dimension(const LocusSpec& spec) {
  if (spec.d_in_b && spec.d_class != DClass::Delta)
    throw domain_error("D inside B occurs only for D ~ Delta");
  const Int budget = spec.d_class == DClass::Gamma ? 6 : (spec.d_in_b ? 10 : 12);
  Int mult_sum = 0;
  Int sing_sum = 0;
  for (const PointSpec& p : spec.points) {
    if (p.taylor_degree > 5)
      throw domain_error("point condition on '" + p.sing +
                         "' references Taylor degrees above 5, outside the regime where the "
                         "conditions are known to be independent");
    mult_sum += p.mult;
    sing_sum += p.sing_codim;
  }
  if (mult_sum > budget)
    throw domain_error("imposed multiplicities " + int_to_string(mult_sum) + " exceed B.D = " +
                       int_to_string(budget));

  DimReport rep;
  rep.type_label = spec.label;
  rep.dim_d = linear_system_dim(spec.base, spec.d_class == DClass::Delta ? LinSys::Delta : LinSys::Gamma);
  rep.k = Int(spec.points.size());
  rep.dim_b = linear_system_dim(spec.base, spec.d_in_b ? LinSys::FiveDelta : LinSys::SixDelta);
  rep.mult_total = mult_sum;
  rep.sing_total = sing_sum;
  rep.aut = aut_dim(spec.base);
  rep.total = rep.dim_d + rep.k + rep.dim_b - rep.mult_total - rep.sing_total - rep.aut;

  rep.sum_string = int_to_string(rep.dim_d) + "+" + int_to_string(rep.k) + "+" + int_to_string(rep.dim_b) +
                   "-" + int_to_string(rep.mult_total);
  for (const PointSpec& p : spec.points)
    if (p.sing_codim > 0) rep.sum_string += "-" + std::to_string(p.sing_codim);
  rep.sum_string += "-" + int_to_string(rep.aut) + "=" + int_to_string(rep.total);
  return rep;
}

LocusSpec named_type(const std::string& label) {
  LocusSpec s;
  s.label = label;
  auto pts = [&](std::vector<PointSpec> v) { s.points = std::move(v); };
  if (label == "1") {
    s.base = Base::F0;
    s.d_class = DClass::Delta;
    pts(std::vector<PointSpec>(6, point(2)));
  } else if (label == "1'") {
    s.base = Base::F0;
    s.d_class = DClass::Delta;
    pts(std::vector<PointSpec>(5, point(2)));
    s.points.push_back(point(2, "node"));
  } else if (label == "1''") {
    s.base = Base::F2Cone;
    s.d_class = DClass::Delta;
    pts(std::vector<PointSpec>(6, point(2)));
  } else if (label == "1'''") {
    s.base = Base::F0;
    s.d_class = DClass::Delta;
    pts(std::vector<PointSpec>(4, point(2)));
    s.points.push_back(point(4));
  } else if (label == "2a") {
    s.base = Base::F0;
    s.d_class = DClass::Gamma;
    pts({point(2, "node"), point(2, "node"), point(1), point(1)});
  } else if (label == "2a'") {
    s.base = Base::F0;
    s.d_class = DClass::Gamma;
    pts({custom_point(4, "tacnode contact", 2, 4), point(1), point(1)});
  } else if (label == "2a''") {
    s.base = Base::F0;
    s.d_class = DClass::Gamma;
    pts({point(2, "A2"), point(2, "node"), point(1), point(1)});
  } else if (label == "2b") {
    s.base = Base::F2Cone;
    s.d_class = DClass::Gamma;
    pts({point(2, "node"), point(2, "node"), point(1), point(1)});
  } else if (label == "D-in-B") {
    s.base = Base::F0;
    s.d_class = DClass::Delta;
    s.d_in_b = true;
    pts(std::vector<PointSpec>(10, point(1)));
  } else {
    throw domain_error("unknown locus type '" + label + "'");
  }
  return s;
}

std::vector<std::string> named_type_labels() {
  return {"1", "1'", "1''", "1'''", "2a", "2a'", "2a''", "2b", "D-in-B"};
}

}  // namespace qsurf::modulidim
