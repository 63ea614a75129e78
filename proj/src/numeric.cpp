#include "qsurf/numeric.hpp"

#include <sstream>

namespace qsurf {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw domain_error("zero denominator in rational literal: " + s);
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw domain_error("malformed rational literal: " + s);
  }
}

std::string int_to_string(const Int& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

std::optional<QVec> solve_linear(QMatrix a, QVec b) {
  const size_t n = a.size();
  if (n == 0) return QVec{};
  for (auto& row : a)
    if (row.size() != n) throw domain_error("solve_linear: matrix is not square");
  if (b.size() != n) throw domain_error("solve_linear: rhs size mismatch");

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rat inv = Rat(1) / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat f = a[row][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

int rank_of(QMatrix a) {
  if (a.empty()) return 0;
  const size_t cols = a[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < a.size(); ++col) {
    size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[row]);
    const Rat inv = Rat(1) / a[row][col];
    for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace qsurf
