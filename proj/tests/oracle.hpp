#pragma once

// Naive reference implementations used to cross-check the library. Nothing
// here calls into latwb; everything works on a plain order matrix.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;  // m[i][j] means i <= j

inline std::size_t size(const Matrix& m) { return m.size(); }

inline bool covers(const Matrix& m, std::size_t x, std::size_t y) {
  if (x == y || !m[x][y]) return false;
  for (std::size_t z = 0; z < m.size(); ++z)
    if (z != x && z != y && m[x][z] && m[z][y]) return false;
  return true;
}

// Least upper bound by scanning all upper bounds.
inline std::optional<std::size_t> join(const Matrix& m, std::size_t x, std::size_t y) {
  std::vector<std::size_t> ub;
  for (std::size_t z = 0; z < m.size(); ++z)
    if (m[x][z] && m[y][z]) ub.push_back(z);
  for (std::size_t z : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t w) { return m[z][w]; })) return z;
  return std::nullopt;
}

inline std::optional<std::size_t> meet(const Matrix& m, std::size_t x, std::size_t y) {
  std::vector<std::size_t> lb;
  for (std::size_t z = 0; z < m.size(); ++z)
    if (m[z][x] && m[z][y]) lb.push_back(z);
  for (std::size_t z : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](std::size_t w) { return m[w][z]; })) return z;
  return std::nullopt;
}

inline bool is_lattice(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (!join(m, x, y) || !meet(m, x, y)) return false;
  return true;
}

inline std::size_t bottom(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (std::all_of(m[x].begin(), m[x].end(), [](bool b) { return b; })) return x;
  return m.size();
}

inline std::size_t top(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    bool all = true;
    for (std::size_t y = 0; y < m.size(); ++y) all = all && m[y][x];
    if (all) return x;
  }
  return m.size();
}

// Lengths of all maximal chains, by depth-first search over covers.
inline void chain_lengths(const Matrix& m, std::size_t x, std::size_t len, std::set<std::size_t>& out) {
  bool extended = false;
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (covers(m, x, y)) {
      extended = true;
      chain_lengths(m, y, len + 1, out);
    }
  }
  if (!extended) out.insert(len);
}

inline bool is_graded(const Matrix& m) {
  std::set<std::size_t> lengths;
  chain_lengths(m, bottom(m), 0, lengths);
  return lengths.size() == 1;
}

inline std::size_t height(const Matrix& m) {
  std::set<std::size_t> lengths;
  chain_lengths(m, bottom(m), 0, lengths);
  return *lengths.rbegin();
}

inline bool is_modular(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      if (!m[x][z]) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (*join(m, x, *meet(m, y, z)) != *meet(m, *join(m, x, y), z)) return false;
    }
  return true;
}

inline bool is_semimodular(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t w = *meet(m, s, t);
      if (s == t || !covers(m, w, s) || !covers(m, w, t)) continue;
      const std::size_t j = *join(m, s, t);
      if (!covers(m, s, j) || !covers(m, t, j)) return false;
    }
  return true;
}

inline bool is_distributive(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (*meet(m, x, *join(m, y, z)) != *join(m, *meet(m, x, y), *meet(m, x, z))) return false;
  return true;
}

// A knot is comparable to everything and is neither bottom nor top.
inline bool is_vi(const Matrix& m) {
  const std::size_t b = bottom(m), t = top(m);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (x == b || x == t) continue;
    bool comparable = true;
    for (std::size_t y = 0; y < m.size(); ++y) comparable = comparable && (m[x][y] || m[y][x]);
    if (comparable) return false;
  }
  return true;
}

inline std::vector<std::size_t> ranks(const Matrix& m) {
  // Rank = length of the longest chain from the bottom; valid when graded.
  const std::size_t n = m.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) below[x] += m[y][x] ? 1 : 0;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> r(n, 0);
  for (std::size_t y : order)
    for (std::size_t x = 0; x < n; ++x)
      if (covers(m, x, y)) r[y] = std::max(r[y], r[x] + 1);
  return r;
}

inline bool is_piece(const Matrix& m) {
  if (!is_graded(m) || !is_vi(m)) return false;
  const std::size_t b = bottom(m), t = top(m);
  std::size_t n_atoms = 0, n_coatoms = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    n_atoms += covers(m, b, x) ? 1 : 0;
    n_coatoms += covers(m, x, t) ? 1 : 0;
  }
  const auto r = ranks(m);
  const std::size_t h = r[t];
  if (n_atoms != 2 || n_coatoms != 2 || h < 3) return false;
  for (std::size_t k = 2; k + 2 <= h; ++k)
    if (std::count(r.begin(), r.end(), k) == 2) return false;
  return true;
}

// Lexicographically smallest relation matrix over all relabelings.
inline std::vector<bool> permutation_min_code(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(m[p[i]][p[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Every lattice on n labeled points ordered compatibly with 0 < 1 < ... < n-1,
// up to isomorphism. Feasible for n <= 6.
inline std::vector<Matrix> all_lattices(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  std::vector<Matrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) m[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (m[a][b] && m[b][c] && !m[a][c]) transitive = false;
    if (!transitive || !is_lattice(m)) continue;
    if (seen.insert(permutation_min_code(m)).second) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace oracle
