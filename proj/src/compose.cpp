#include "latwb/compose.hpp"

#include <algorithm>
#include <string>

#include "latwb/canonical.hpp"
#include "latwb/props.hpp"

namespace latwb {

Lattice vertical_sum(const Lattice& lower, const Lattice& upper) {
  const std::size_t offset = lower.size() - 1;
  std::vector<CoverPair> pairs = lower.poset().cover_pairs();
  for (const auto& [x, y] : upper.poset().cover_pairs()) pairs.emplace_back(x + offset, y + offset);
  return lattice_from_covers(lower.size() + upper.size() - 1, pairs);
}

Lattice vertical_sum(std::span<const Lattice> parts) {
  Lattice result = Lattice::singleton();
  for (const auto& part : parts) result = vertical_sum(result, part);
  return result;
}

std::vector<Lattice> vertical_decompose(const Lattice& l) {
  if (l.size() == 1) throw Error("SingletonInput", "the singleton is the empty vertical sum");
  std::vector<Element> cuts{l.bottom()};
  for (Element k : knots(l)) cuts.push_back(k);
  cuts.push_back(l.top());
  std::vector<Lattice> parts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) parts.push_back(interval(l, cuts[i], cuts[i + 1]));
  return parts;
}

Poset vertical_ksum(const Lattice& lower, const Lattice& upper, std::size_t k, std::span<const std::size_t> matching) {
  const auto lower_coatoms = coatoms(lower);
  const auto upper_atoms = atoms(upper);
  if (lower.size() < 2 || upper.size() < 2 || lower_coatoms.size() != k || upper_atoms.size() != k)
    throw Error("PreconditionViolated", "vertical " + std::to_string(k) + "-sum needs exactly " + std::to_string(k) +
                                            " coatoms below and " + std::to_string(k) + " atoms above");
  if (matching.size() != k) throw Error("PreconditionViolated", "matching has the wrong length");
  std::vector<bool> used(k, false);
  for (auto target : matching) {
    if (target >= k || used[target]) throw Error("PreconditionViolated", "matching is not a bijection");
    used[target] = true;
  }

  // Lower part keeps indices 0..|L|-2; upper non-atoms follow in order.
  const std::size_t base = lower.size() - 1;
  std::vector<Element> index(upper.size(), 0);
  for (std::size_t i = 0; i < k; ++i) index[upper_atoms[matching[i]]] = lower_coatoms[i];
  std::size_t next = base;
  for (Element y = 1; y < upper.size(); ++y)
    if (!std::binary_search(upper_atoms.begin(), upper_atoms.end(), y)) index[y] = next++;

  std::vector<CoverPair> pairs;
  for (const auto& [x, y] : lower.poset().cover_pairs())
    if (y != lower.top()) pairs.emplace_back(x, y);
  for (const auto& [x, y] : upper.poset().cover_pairs())
    if (x != upper.bottom()) pairs.emplace_back(index[x], index[y]);
  return build_poset(next, pairs);
}

Lattice vertical_2sum(const Lattice& lower, const Lattice& upper, Matching2 m) {
  const std::size_t parallel[] = {0, 1};
  const std::size_t crossed[] = {1, 0};
  Poset glued = vertical_ksum(lower, upper, 2, m == Matching2::parallel ? parallel : crossed);
  try {
    return as_lattice(glued);
  } catch (const Error& e) {
    throw Error("InvariantBroken", std::string("vertical 2-sum is not a lattice: ") + e.what());
  }
}

std::vector<Lattice> vertical_2sums_all(const Lattice& lower, const Lattice& upper) {
  std::vector<Lattice> result;
  result.push_back(vertical_2sum(lower, upper, Matching2::parallel));
  Lattice other = vertical_2sum(lower, upper, Matching2::crossed);
  if (canonical_code(other) != canonical_code(result.front())) result.push_back(std::move(other));
  return result;
}

std::pair<Lattice, Lattice> split_at_level(const Lattice& l, Element a, Element b) {
  const std::size_t n = l.size();
  std::vector<Element> low_index(n, n), high_index(n, n);
  std::size_t low_count = 0, high_count = 1;
  for (Element x = 0; x < n; ++x) {
    if (l.leq(x, a) || l.leq(x, b)) low_index[x] = low_count++;
    if (l.leq(a, x) || l.leq(b, x)) high_index[x] = high_count++;
  }
  std::vector<CoverPair> low_pairs, high_pairs;
  for (const auto& [x, y] : l.poset().cover_pairs()) {
    if (low_index[x] < n && low_index[y] < n) low_pairs.emplace_back(low_index[x], low_index[y]);
    if (high_index[x] < n && high_index[y] < n) high_pairs.emplace_back(high_index[x], high_index[y]);
  }
  for (Element x : {a, b}) {
    low_pairs.emplace_back(low_index[x], low_count);
    high_pairs.emplace_back(0, high_index[x]);
  }
  return {lattice_from_covers(low_count + 1, low_pairs), lattice_from_covers(high_count, high_pairs)};
}

std::pair<Lattice, Lattice> split_at_lowest_neck(const Lattice& l) {
  auto r = rank_function(l);
  if (!r) throw Error("PreconditionViolated", "lattice is not graded");
  auto levels = necks(l, *r);
  if (levels.empty()) throw Error("PreconditionViolated", "lattice has no neck");
  auto pair = rank_level(*r, levels.front());
  return split_at_level(l, pair[0], pair[1]);
}

}  // namespace latwb
