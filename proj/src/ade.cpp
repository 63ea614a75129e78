#include "qsurf/ade.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace qsurf::ade {

namespace {

long long expected_positive_count(Family f, int n) {
  switch (f) {
    case Family::A:
      return static_cast<long long>(n) * (n + 1) / 2;
    case Family::D:
      return static_cast<long long>(n) * (n - 1);
    case Family::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return -1;
}

// Closure from the simple roots: in simple-root coordinates c, the vector is
// a root iff c^T Cartan c = 2. Adding E_j is tried whenever the pairing with
// E_j is negative, which reaches every positive root.
std::vector<std::vector<Int>> enumerate_positive(const std::vector<std::vector<Int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<Int> c(r, Int(0));
    c[i] = 1;
    seen.insert(c);
    queue.push_back(std::move(c));
  }
  while (!queue.empty()) {
    const std::vector<Int> c = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      Int pairing = 0;
      for (int i = 0; i < r; ++i) pairing += c[i] * cartan[i][j];
      if (pairing >= 0) continue;  // norm(c + E_j) = 4 + 2 pairing > 2, not a root
      std::vector<Int> next = c;
      next[j] += 1;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

RootSystem finish_build(RootSystem rs) {
  const int r = rs.rank;
  // Cartan matrix from the ambient model.
  rs.cartan.assign(r, std::vector<Int>(r, Int(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rat p = pair_form(rs, rs.simple_roots[i], rs.simple_roots[j]);
      if (den(p) != 1) throw domain_error("internal: non-integral Cartan entry");
      rs.cartan[i][j] = num(p);
    }
  // Fundamental weights: Cartan^{-1} columns expressed back in the ambient
  // space through the simple roots.
  QMatrix c(r, QVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c[i][j] = Rat(rs.cartan[i][j]);
  rs.fw_gram.assign(r, QVec(r));
  rs.fweights.assign(r, Weight(rs.ambient_dim, Rat(0)));
  for (int i = 0; i < r; ++i) {
    QVec e(r, Rat(0));
    e[i] = 1;
    auto col = solve_linear(c, e);
    if (!col) throw domain_error("internal: singular Cartan matrix");
    for (int j = 0; j < r; ++j) {
      rs.fw_gram[j][i] = (*col)[j];
      for (int k = 0; k < rs.ambient_dim; ++k)
        rs.fweights[i][k] += (*col)[j] * rs.simple_roots[j][k];
    }
  }
  rs.positive = enumerate_positive(rs.cartan);

  long long expected = 0;
  for (auto [f, n] : rs.factors) expected += expected_positive_count(f, n);
  if (static_cast<long long>(rs.positive.size()) != expected)
    throw domain_error("internal: positive root count mismatch for " + rs.name);
  return rs;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::D:
      return "D";
    case Family::E:
      return "E";
  }
  return "?";
}

RootSystem build(Family f, int n) {
  const bool ok = (f == Family::A && n >= 1) || (f == Family::D && n >= 4) ||
                  (f == Family::E && (n == 6 || n == 7 || n == 8));
  if (!ok) throw domain_error("invalid rank " + std::to_string(n) + " for family " + family_name(f));

  RootSystem rs;
  rs.name = family_name(f) + std::to_string(n);
  rs.factors = {{f, n}};
  rs.rank = n;
  switch (f) {
    case Family::A:
      rs.ambient_dim = n + 1;
      rs.form_diag.assign(n + 1, Rat(1));
      for (int i = 1; i <= n; ++i) {
        Weight root(n + 1, Rat(0));
        root[i - 1] = 1;
        root[i] = -1;
        rs.simple_roots.push_back(std::move(root));
      }
      break;
    case Family::D:
      rs.ambient_dim = n;
      rs.form_diag.assign(n, Rat(1));
      for (int i = 1; i < n; ++i) {
        Weight root(n, Rat(0));
        root[i - 1] = 1;
        root[i] = -1;
        rs.simple_roots.push_back(std::move(root));
      }
      {
        Weight root(n, Rat(0));
        root[n - 2] = 1;
        root[n - 1] = 1;
        rs.simple_roots.push_back(std::move(root));
      }
      break;
    case Family::E:
      rs.ambient_dim = n + 1;  // h, e_1..e_n
      rs.form_diag.assign(n + 1, Rat(1));
      rs.form_diag[0] = -1;
      for (int i = 1; i < n; ++i) {
        Weight root(n + 1, Rat(0));
        root[i] = 1;
        root[i + 1] = -1;
        rs.simple_roots.push_back(std::move(root));
      }
      {
        Weight root(n + 1, Rat(0));
        root[0] = 1;
        root[1] = root[2] = root[3] = -1;
        rs.simple_roots.push_back(std::move(root));
      }
      break;
  }
  return finish_build(std::move(rs));
}

std::shared_ptr<const RootSystem> build_shared(Family f, int n) {
  return std::make_shared<const RootSystem>(build(f, n));
}

RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.name = a.name + "+" + b.name;
  rs.factors = a.factors;
  rs.factors.insert(rs.factors.end(), b.factors.begin(), b.factors.end());
  rs.rank = a.rank + b.rank;
  rs.ambient_dim = a.ambient_dim + b.ambient_dim;
  rs.form_diag = a.form_diag;
  rs.form_diag.insert(rs.form_diag.end(), b.form_diag.begin(), b.form_diag.end());
  for (const Weight& w : a.simple_roots) {
    Weight padded = w;
    padded.resize(rs.ambient_dim, Rat(0));
    rs.simple_roots.push_back(std::move(padded));
  }
  for (const Weight& w : b.simple_roots) {
    Weight padded(a.ambient_dim, Rat(0));
    padded.insert(padded.end(), w.begin(), w.end());
    rs.simple_roots.push_back(std::move(padded));
  }
  return finish_build(std::move(rs));
}

RootSystem parse_system(const std::string& spec) {
  std::optional<RootSystem> acc;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find('+', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string part = spec.substr(pos, end - pos);
    if (part.size() < 2) throw domain_error("malformed system spec '" + spec + "'");
    Family f;
    switch (part[0]) {
      case 'A':
        f = Family::A;
        break;
      case 'D':
        f = Family::D;
        break;
      case 'E':
        f = Family::E;
        break;
      default:
        throw domain_error("unknown family in '" + spec + "'");
    }
    int n = 0;
    try {
      n = std::stoi(part.substr(1));
    } catch (const std::exception&) {
      throw domain_error("malformed rank in '" + spec + "'");
    }
    RootSystem next = build(f, n);
    acc = acc ? direct_sum(*acc, next) : std::move(next);
    pos = end + 1;
  }
  if (!acc) throw domain_error("empty system spec");
  return std::move(*acc);
}

Rat pair_form(const RootSystem& rs, const Weight& v, const Weight& w) {
  if (v.size() != static_cast<size_t>(rs.ambient_dim) || w.size() != static_cast<size_t>(rs.ambient_dim))
    throw domain_error("ambient dimension mismatch");
  Rat s = 0;
  for (int i = 0; i < rs.ambient_dim; ++i) s += rs.form_diag[i] * v[i] * w[i];
  return s;
}

Rat norm2(const RootSystem& rs, const Weight& w) { return pair_form(rs, w, w); }

const std::vector<Weight>& fundamental_weights(const RootSystem& rs) { return rs.fweights; }

Weight root_vector(const RootSystem& rs, const std::vector<Int>& coords) {
  if (coords.size() != static_cast<size_t>(rs.rank)) throw domain_error("root coordinate length mismatch");
  Weight out(rs.ambient_dim, Rat(0));
  for (int j = 0; j < rs.rank; ++j)
    for (int k = 0; k < rs.ambient_dim; ++k) out[k] += Rat(coords[j]) * rs.simple_roots[j][k];
  return out;
}

bool is_weight(const RootSystem& rs, const Weight& w) {
  for (int j = 0; j < rs.rank; ++j)
    if (den(pair_form(rs, w, rs.simple_roots[j])) != 1) return false;
  return true;
}

std::vector<Int> pairing_coords(const RootSystem& rs, const Weight& w) {
  std::vector<Int> m(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    const Rat p = pair_form(rs, w, rs.simple_roots[j]);
    if (den(p) != 1) throw domain_error("vector is not in the weight lattice");
    m[j] = num(p);
  }
  return m;
}

Weight weight_of_divisor(const RootSystem& rs, const std::vector<Int>& intersections) {
  if (intersections.size() != static_cast<size_t>(rs.rank))
    throw domain_error("intersection list length must equal the rank");
  Weight out(rs.ambient_dim, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.ambient_dim; ++k) out[k] += Rat(intersections[i]) * rs.fweights[i][k];
  return out;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  for (int j = 0; j < rs.rank; ++j)
    if (pair_form(rs, w, rs.simple_roots[j]) < 0) return false;
  return true;
}

bool is_minuscule(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw domain_error("fundamental weight index out of range");
  for (const auto& c : rs.positive)
    if (c[i - 1] > 1) return false;
  return true;
}

Rat norm2_of_pairings(const RootSystem& rs, const std::vector<Int>& m) {
  if (m.size() != static_cast<size_t>(rs.rank)) throw domain_error("pairing vector length mismatch");
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) s += Rat(m[i]) * rs.fw_gram[i][j] * Rat(m[j]);
  return s;
}

std::optional<std::vector<Int>> root_lattice_coords(const RootSystem& rs, const std::vector<Int>& m) {
  QMatrix c(rs.rank, QVec(rs.rank));
  QVec rhs(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    rhs[i] = Rat(m[i]);
    for (int j = 0; j < rs.rank; ++j) c[i][j] = Rat(rs.cartan[i][j]);
  }
  auto sol = solve_linear(std::move(c), std::move(rhs));
  if (!sol) return std::nullopt;
  std::vector<Int> out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (den((*sol)[i]) != 1) return std::nullopt;
    out[i] = num((*sol)[i]);
  }
  return out;
}

namespace {

uint64_t encode8(const std::vector<Int>& b) {
  uint64_t key = 0;
  for (const Int& v : b) {
    if (v < 0 || v > 255) throw domain_error("weight system coordinate out of the encodable range");
    key = (key << 8) | static_cast<uint64_t>(v.convert_to<unsigned>());
  }
  return key;
}

}  // namespace

WeightSystemStats weight_system(const RootSystem& rs, const std::vector<Int>& highest, long long max_states) {
  if (rs.rank > 8) throw domain_error("weight_system oracle is limited to rank <= 8");
  if (highest.size() != static_cast<size_t>(rs.rank)) throw domain_error("pairing vector length mismatch");
  for (const Int& v : highest)
    if (v < 0) throw domain_error("weight_system requires a dominant highest weight");

  std::set<uint64_t> seen;
  std::deque<std::vector<Int>> queue;  // b-vectors: amount subtracted per simple root
  std::vector<Int> zero(rs.rank, Int(0));
  seen.insert(encode8(zero));
  queue.push_back(std::move(zero));
  WeightSystemStats stats;
  while (!queue.empty()) {
    const std::vector<Int> b = std::move(queue.front());
    queue.pop_front();
    ++stats.total;
    bool dominant = true;
    std::vector<Int> m(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      m[j] = highest[j];
      for (int i = 0; i < rs.rank; ++i) m[j] -= b[i] * rs.cartan[i][j];
      if (m[j] < 0) dominant = false;
    }
    if (dominant) ++stats.dominant;
    for (int j = 0; j < rs.rank; ++j) {
      if (m[j] <= 0) continue;
      std::vector<Int> next = b;
      for (Int t = 1; t <= m[j]; ++t) {
        next[j] += 1;
        if (seen.insert(encode8(next)).second) {
          if (static_cast<long long>(seen.size()) > max_states)
            throw domain_error("weight system exceeded " + std::to_string(max_states) + " states");
          queue.push_back(next);
        }
      }
    }
  }
  return stats;
}

std::vector<std::vector<Int>> weyl_orbit(const RootSystem& rs, const std::vector<Int>& m, long long max_size) {
  if (m.size() != static_cast<size_t>(rs.rank)) throw domain_error("pairing vector length mismatch");
  std::set<std::vector<Int>> seen{m};
  std::deque<std::vector<Int>> queue{m};
  while (!queue.empty()) {
    const std::vector<Int> cur = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < rs.rank; ++j) {
      if (cur[j] == 0) continue;
      std::vector<Int> next(rs.rank);
      for (int i = 0; i < rs.rank; ++i) next[i] = cur[i] - cur[j] * rs.cartan[j][i];
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > max_size)
          throw domain_error("Weyl orbit exceeded " + std::to_string(max_size) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

void dominant_dfs(const RootSystem& rs, const Rat& bound, std::vector<Int>& m, int pos,
                  std::vector<std::vector<Int>>& out) {
  if (pos == rs.rank) {
    out.push_back(m);
    return;
  }
  for (Int v = 0;; ++v) {
    m[pos] = v;
    // The fundamental-weight Gram matrix is entrywise nonnegative, so the
    // partial norm is already a lower bound for any completion.
    Rat partial = 0;
    for (int i = 0; i <= pos; ++i)
      for (int j = 0; j <= pos; ++j) partial += Rat(m[i]) * rs.fw_gram[i][j] * Rat(m[j]);
    if (partial > bound) break;
    dominant_dfs(rs, bound, m, pos + 1, out);
  }
  m[pos] = 0;
}

}  // namespace

std::vector<std::vector<Int>> dominant_weights_up_to_norm(const RootSystem& rs, const Rat& bound) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> m(rs.rank, Int(0));
  dominant_dfs(rs, bound, m, 0, out);
  return out;
}

}  // namespace qsurf::ade
