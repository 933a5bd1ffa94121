#include "latwb/lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace latwb {

namespace {

void check_index(const Lattice& l, Element x) {
  if (x >= l.size())
    throw Error("IndexOutOfRange", "element " + std::to_string(x) + " not in 0.." + std::to_string(l.size() - 1));
}

// Lowest set index of a & b, or n if empty.
Element lowest_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::size_t n) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (auto word = a[w] & b[w]) return w * 64 + static_cast<Element>(std::countr_zero(word));
  return n;
}

// Highest set index of a & b, or n if empty.
Element highest_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::size_t n) {
  for (std::size_t w = a.size(); w-- > 0;)
    if (auto word = a[w] & b[w]) return w * 64 + 63 - static_cast<Element>(std::countl_zero(word));
  return n;
}

// True when every bit of (a & b) is also set in c.
bool common_within(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                   std::span<const std::uint64_t> c) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & b[w]) & ~c[w]) return false;
  return true;
}

}  // namespace

NotALattice::NotALattice(Element x, Element y, Reason reason)
    : Error("NotALattice", "pair (" + std::to_string(x) + "," + std::to_string(y) + "): " + reason_name(reason)),
      x_(x), y_(y), reason_(reason) {}

const char* NotALattice::reason_name(Reason r) noexcept {
  switch (r) {
    case Reason::no_upper_bound: return "no-upper-bound";
    case Reason::no_least_upper_bound: return "no-least-upper-bound";
    case Reason::no_lower_bound: return "no-lower-bound";
    case Reason::no_greatest_lower_bound: return "no-greatest-lower-bound";
  }
  return "unknown";
}

Element Lattice::join(Element x, Element y) const {
  check_index(*this, x);
  check_index(*this, y);
  return join_unchecked(x, y);
}

Element Lattice::meet(Element x, Element y) const {
  check_index(*this, x);
  check_index(*this, y);
  return meet_unchecked(x, y);
}

bool Lattice::covers(Element lower, Element upper) const {
  auto up = poset_.upper_covers(lower);
  return std::binary_search(up.begin(), up.end(), upper);
}

Lattice as_lattice(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t minimal = 0, maximal = 0;
  for (Element x = 0; x < n; ++x) {
    if (p.lower_covers(x).empty()) ++minimal;
    if (p.upper_covers(x).empty()) ++maximal;
  }
  if (minimal != 1) throw Error("NoUniqueBottom", std::to_string(minimal) + " minimal elements");
  if (maximal != 1) throw Error("NoUniqueTop", std::to_string(maximal) + " maximal elements");

  Lattice l;
  l.poset_ = p;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      // In a linear extension the least element of a set with a minimum has the lowest index.
      Element j = lowest_common(p.up_set(x), p.up_set(y), n);
      if (j == n) throw NotALattice(x, y, NotALattice::Reason::no_upper_bound);
      if (!common_within(p.up_set(x), p.up_set(y), p.up_set(j)))
        throw NotALattice(x, y, NotALattice::Reason::no_least_upper_bound);
      Element m = highest_common(p.down_set(x), p.down_set(y), n);
      if (m == n) throw NotALattice(x, y, NotALattice::Reason::no_lower_bound);
      if (!common_within(p.down_set(x), p.down_set(y), p.down_set(m)))
        throw NotALattice(x, y, NotALattice::Reason::no_greatest_lower_bound);
      l.join_[x * n + y] = l.join_[y * n + x] = j;
      l.meet_[x * n + y] = l.meet_[y * n + x] = m;
    }
  }
  return l;
}

Lattice lattice_from_covers(std::size_t n, std::span<const CoverPair> cover_pairs) {
  return as_lattice(build_poset(n, cover_pairs));
}

Lattice Lattice::singleton() { return lattice_from_covers(1, {}); }

Lattice Lattice::chain(std::size_t k) {
  std::vector<CoverPair> pairs;
  for (Element i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
  return lattice_from_covers(k, pairs);
}

Lattice Lattice::boolean(std::size_t k) {
  // Subsets ordered by cardinality, then numerically: a linear extension.
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::size_t> order(n);
  for (std::size_t s = 0; s < n; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<Element> index(n);
  for (std::size_t i = 0; i < n; ++i) index[order[i]] = i;
  std::vector<CoverPair> pairs;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t b = 0; b < k; ++b)
      if (!(s >> b & 1U)) pairs.emplace_back(index[s], index[s | (std::size_t{1} << b)]);
  return lattice_from_covers(n, pairs);
}

Lattice Lattice::diamond(std::size_t k) {
  std::vector<CoverPair> pairs;
  for (Element i = 1; i <= k; ++i) {
    pairs.emplace_back(0, i);
    pairs.emplace_back(i, k + 1);
  }
  if (k == 0) pairs.emplace_back(0, 1);
  return lattice_from_covers(k + 2, pairs);
}

std::vector<Element> atoms(const Lattice& l) {
  auto up = l.poset().upper_covers(l.bottom());
  return {up.begin(), up.end()};
}

std::vector<Element> coatoms(const Lattice& l) {
  auto down = l.poset().lower_covers(l.top());
  return {down.begin(), down.end()};
}

Lattice dual(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<CoverPair> pairs;
  for (const auto& [x, y] : l.poset().cover_pairs()) pairs.emplace_back(n - 1 - y, n - 1 - x);
  return lattice_from_covers(n, pairs);
}

Lattice interval(const Lattice& l, Element lo, Element hi) {
  if (lo >= l.size() || hi >= l.size() || !l.leq(lo, hi))
    throw Error("IndexOutOfRange", "interval bounds are not an ordered pair of elements");
  std::vector<Element> index(l.size(), l.size());
  std::size_t count = 0;
  for (Element x = lo; x <= hi; ++x)
    if (l.leq(lo, x) && l.leq(x, hi)) index[x] = count++;
  std::vector<CoverPair> pairs;
  for (const auto& [x, y] : l.poset().cover_pairs())
    if (index[x] < count && index[y] < count) pairs.emplace_back(index[x], index[y]);
  return lattice_from_covers(count, pairs);
}

}  // namespace latwb
