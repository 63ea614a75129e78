#include "qsurf/tables.hpp"

namespace qsurf::tables {

namespace {

using ade::Family;
using ade::Weight;

// Ambient coordinate helpers. A_n: e_0..e_n at indices 0..n. D_n: e_i at
// index i-1. E_n: h at index 0, e_i at index i.
Weight zero(Family f, int n) {
  const int dim = f == Family::D ? n : n + 1;
  return Weight(dim, Rat(0));
}

OddCaseRow row(std::string id, int mult, Family f, int n, std::vector<std::pair<int, Int>> pairings,
               Weight expected) {
  return OddCaseRow{std::move(id), mult, f, n, std::move(pairings), std::move(expected)};
}

}  // namespace

std::vector<OddCaseRow> odd_case_rows(int n_max) {
  std::vector<OddCaseRow> rows;

  // (B.D)_p = 2: A_n, the transformed curve meets both ends of the chain.
  for (int n = 1; n <= n_max; ++n) {
    Weight v = zero(Family::A, n);
    v[0] = 1;
    v[n] = -1;
    rows.push_back(row("m2-A" + std::to_string(n), 2, Family::A, n, {{1, 1}, {n, 1}}, v));
  }

  // (B.D)_p = 3.
  {
    Weight v = zero(Family::A, 1);
    v[0] = 1;
    v[1] = -1;
    rows.push_back(row("m3-A1", 3, Family::A, 1, {{1, 2}}, v));
  }
  {
    Weight v = zero(Family::A, 2);
    v[0] = 1;
    v[2] = -1;
    rows.push_back(row("m3-A2", 3, Family::A, 2, {{1, 1}, {2, 1}}, v));
  }
  for (int n = 4; n <= n_max; ++n) {
    Weight v = zero(Family::D, n);
    v[0] = v[1] = 1;
    rows.push_back(row("m3-D" + std::to_string(n), 3, Family::D, n, {{2, 1}}, v));
  }
  {
    Weight v = zero(Family::E, 6);
    v[0] = 2;
    for (int i = 1; i <= 6; ++i) v[i] = -1;
    rows.push_back(row("m3-E6", 3, Family::E, 6, {{6, 1}}, v));
  }
  {
    Weight v = zero(Family::E, 7);
    v[0] = 2;
    for (int i = 2; i <= 7; ++i) v[i] = -1;
    rows.push_back(row("m3-E7", 3, Family::E, 7, {{1, 1}}, v));
  }
  {
    Weight v = zero(Family::E, 8);
    v[0] = 3;
    for (int i = 1; i <= 7; ++i) v[i] = -1;
    v[8] = -2;
    rows.push_back(row("m3-E8", 3, Family::E, 8, {{7, 1}}, v));
  }

  // (B.D)_p = 4.
  for (int n = 4; n <= n_max; ++n) {
    Weight v = zero(Family::A, n);
    v[0] = v[1] = 1;
    v[n - 1] = v[n] = -1;
    rows.push_back(row("m4-A" + std::to_string(n), 4, Family::A, n, {{2, 1}, {n - 1, 1}}, v));
  }
  {
    Weight v = zero(Family::D, 5);
    v[0] = v[1] = v[2] = v[3] = 1;
    rows.push_back(row("m4-D5", 4, Family::D, 5, {{4, 1}, {5, 1}}, v));
  }
  for (int n = 4; n <= n_max; ++n) {
    Weight v = zero(Family::D, n);
    v[0] = 2;
    rows.push_back(row("m4-D" + std::to_string(n) + "-tangent", 4, Family::D, n, {{1, 2}}, v));
  }
  {
    Weight v = zero(Family::E, 6);
    v[0] = 2;
    for (int i = 2; i <= 5; ++i) v[i] = -1;
    v[6] = -2;
    rows.push_back(row("m4-E6", 4, Family::E, 6, {{1, 1}, {5, 1}}, v));
  }

  // (B.D)_p = 5.
  {
    Weight v = zero(Family::A, 3);
    v[0] = v[1] = 1;
    v[2] = v[3] = -1;
    rows.push_back(row("m5-A3", 5, Family::A, 3, {{2, 2}}, v));
  }
  {
    Weight v = zero(Family::A, 4);
    v[0] = v[1] = 1;
    v[3] = v[4] = -1;
    rows.push_back(row("m5-A4", 5, Family::A, 4, {{2, 1}, {3, 1}}, v));
  }
  for (int n = 6; n <= n_max; ++n) {
    Weight v = zero(Family::D, n);
    v[0] = v[1] = v[2] = v[3] = 1;
    rows.push_back(row("m5-D" + std::to_string(n), 5, Family::D, n, {{4, 1}}, v));
  }
  for (int n = 4; n <= n_max; ++n) {
    Weight v = zero(Family::D, n);
    v[0] = 2;
    rows.push_back(row("m5-D" + std::to_string(n) + "-tangent", 5, Family::D, n, {{1, 2}}, v));
  }
  {
    Weight v = zero(Family::E, 7);
    v[0] = 3;
    for (int i = 1; i <= 5; ++i) v[i] = -1;
    v[6] = v[7] = -2;
    rows.push_back(row("m5-E7", 5, Family::E, 7, {{5, 1}}, v));
  }
  {
    Weight v = zero(Family::E, 8);
    v[0] = 5;
    v[1] = -1;
    for (int i = 2; i <= 8; ++i) v[i] = -2;
    rows.push_back(row("m5-E8", 5, Family::E, 8, {{1, 1}}, v));
  }

  return rows;
}

std::vector<Int> row_intersections(const OddCaseRow& row) {
  std::vector<Int> out(row.n, Int(0));
  for (const auto& [idx, val] : row.pairings) out[idx - 1] += val;
  return out;
}

std::set<int> minuscule_indices(ade::Family f, int n) {
  switch (f) {
    case ade::Family::A: {
      std::set<int> all;
      for (int i = 1; i <= n; ++i) all.insert(i);
      return all;
    }
    case ade::Family::D:
      return {1, n - 1, n};
    case ade::Family::E:
      if (n == 6) return {1, 5};
      if (n == 7) return {6};
      return {};
  }
  return {};
}

}  // namespace qsurf::tables
