#include "qsurf/pic.hpp"

#include <algorithm>

namespace qsurf::pic {

namespace {

void require_same_lattice(const SurfaceLattice& l, const DivisorClass& a) {
  if (a.lattice != l.name)
    throw domain_error("class on '" + a.lattice + "' used with lattice '" + l.name + "'");
  if (a.coeffs.size() != static_cast<size_t>(l.rank()))
    throw domain_error("class rank mismatch on lattice '" + l.name + "'");
}

}  // namespace

int SurfaceLattice::index_of(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

void SurfaceLattice::validate() const {
  const size_t r = basis.size();
  if (gram.size() != r || canonical.size() != r) throw domain_error("lattice shape mismatch");
  for (size_t i = 0; i < r; ++i) {
    if (gram[i].size() != r) throw domain_error("lattice gram is not square");
    for (size_t j = 0; j < r; ++j)
      if (gram[i][j] != gram[j][i]) throw domain_error("lattice gram is not symmetric");
  }
}

DivisorClass cls(const SurfaceLattice& l, std::vector<Int> coeffs) {
  if (coeffs.size() != static_cast<size_t>(l.rank())) throw domain_error("class rank mismatch");
  return DivisorClass{l.name, std::move(coeffs)};
}

DivisorClass canonical_class(const SurfaceLattice& l) { return DivisorClass{l.name, l.canonical}; }

SurfaceLattice hirzebruch(int d) {
  if (d < 0) throw domain_error("hirzebruch requires d >= 0");
  SurfaceLattice l;
  l.name = "F" + std::to_string(d);
  l.basis = {"D0", "G"};
  l.gram = {{Int(-d), Int(1)}, {Int(1), Int(0)}};
  l.canonical = {Int(-2), Int(-(d + 2))};
  l.validate();
  return l;
}

SurfaceLattice projective_plane() {
  SurfaceLattice l;
  l.name = "P2";
  l.basis = {"H"};
  l.gram = {{Int(1)}};
  l.canonical = {Int(-3)};
  l.validate();
  return l;
}

DivisorClass Blowup::pullback(const DivisorClass& on_base) const {
  if (on_base.coeffs.size() + 1 != lattice.basis.size())
    throw domain_error("pullback expects a class on the lattice that was blown up");
  std::vector<Int> c = on_base.coeffs;
  c.push_back(0);
  return DivisorClass{lattice.name, std::move(c)};
}

Blowup blow_up(const SurfaceLattice& l, const std::string& label) {
  if (l.index_of(label) != -1) throw domain_error("duplicate basis label '" + label + "'");
  const int r = l.rank();
  SurfaceLattice up;
  up.name = l.name + "+" + label;
  up.basis = l.basis;
  up.basis.push_back(label);
  up.gram.assign(r + 1, std::vector<Int>(r + 1, Int(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) up.gram[i][j] = l.gram[i][j];
  up.gram[r][r] = -1;
  up.canonical = l.canonical;
  up.canonical.push_back(1);
  up.chi_structure = l.chi_structure;
  up.validate();

  std::vector<Int> e(r + 1, Int(0));
  e[r] = 1;
  return Blowup{up, DivisorClass{up.name, std::move(e)}};
}

DivisorClass proper_transform(const SurfaceLattice& target, const DivisorClass& c,
                              const std::map<std::string, Int>& multiplicities) {
  if (c.coeffs.size() > static_cast<size_t>(target.rank()))
    throw domain_error("proper_transform: class does not come from an ancestor of the target lattice");
  std::vector<Int> out = c.coeffs;
  out.resize(target.rank(), Int(0));
  for (const auto& [label, m] : multiplicities) {
    const int idx = target.index_of(label);
    if (idx < 0) throw domain_error("unknown exceptional label '" + label + "'");
    if (idx < static_cast<int>(c.coeffs.size()))
      throw domain_error("label '" + label + "' is not exceptional over the class's lattice");
    out[idx] -= m;
  }
  return DivisorClass{target.name, std::move(out)};
}

Int intersect(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(l, a);
  require_same_lattice(l, b);
  Int s = 0;
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) s += a.coeffs[i] * l.gram[i][j] * b.coeffs[j];
  return s;
}

Int self_int(const SurfaceLattice& l, const DivisorClass& a) { return intersect(l, a, a); }

Rat adjunction_genus(const SurfaceLattice& l, const DivisorClass& d) {
  const Int dd = self_int(l, d);
  const Int dk = intersect(l, d, canonical_class(l));
  return Rat(dd + dk, 2) + 1;
}

Int riemann_roch_chi(const SurfaceLattice& l, const DivisorClass& d) {
  const Int dd = self_int(l, d);
  const Int dk = intersect(l, d, canonical_class(l));
  const Int twice = dd - dk;
  if (twice % 2 != 0) throw domain_error("D(D-K) is odd: K is not characteristic for this lattice");
  return Int(l.chi_structure) + twice / 2;
}

Int h0_hirzebruch(int d, const Int& a, const Int& b) {
  if (d < 0) throw domain_error("h0_hirzebruch requires d >= 0");
  if (a < 0) return 0;
  Int total = 0;
  for (Int k = 0; k <= a; ++k) {
    const Int fiber_deg = b - k * d;
    if (fiber_deg >= 0) total += fiber_deg + 1;
  }
  return total;
}

QVec express(const SurfaceLattice& l, const DivisorClass& target, const std::vector<DivisorClass>& in_basis) {
  require_same_lattice(l, target);
  const size_t r = l.rank();
  if (in_basis.size() != r) throw domain_error("express needs exactly rank-many classes");
  QMatrix m(r, QVec(r));
  QVec rhs(r);
  for (size_t i = 0; i < r; ++i) {
    require_same_lattice(l, in_basis[i]);
    for (size_t j = 0; j < r; ++j) m[j][i] = Rat(in_basis[i].coeffs[j]);
    rhs[i] = Rat(target.coeffs[i]);
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw domain_error("express: the given classes are linearly dependent");
  return *sol;
}

CoverPullback double_cover_pullback(const SurfaceLattice& l, const DivisorClass& c, const DivisorClass& branch_half) {
  require_same_lattice(l, c);
  require_same_lattice(l, branch_half);
  std::vector<Int> k = l.canonical;
  for (int i = 0; i < l.rank(); ++i) k[i] += branch_half.coeffs[i];
  DivisorClass k_down{l.name, std::move(k)};
  const Int kdot = 2 * intersect(l, k_down, c);
  const Int sq = 2 * self_int(l, c);
  return CoverPullback{std::move(k_down), kdot, sq};
}

Int cover_pullback_dot(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b) {
  return 2 * intersect(l, a, b);
}

bool horikawa_branch_constraints(int d, const Int& p_g) {
  const Int lo = std::max(Int(d + 4), Int(2 * d - 2));
  return p_g >= lo && (p_g - d) % 2 == 0;
}

Rat even_case_c_squared(const std::vector<Int>& separation_numbers) {
  Int s = 0;
  for (const Int& li : separation_numbers) {
    if (li < 1) throw domain_error("separation numbers must be positive");
    s += li;
  }
  if (s > 6) throw domain_error("separation numbers exceed (1/2) B.D = 6");
  // (C+C')^2 both ways: 2(D^2 - sum l) and 2C^2 + (B.D - 2 sum l); D^2 = 2,
  // B.D = 12. Solve the linear equation for C^2.
  const Rat lhs = Rat(2) * (Rat(2) - Rat(s));
  const Rat bprime_dot = Rat(12) - Rat(2) * Rat(s);
  return (lhs - bprime_dot) / 2;
}

}  // namespace qsurf::pic
