#include "latwb/poset.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace latwb {

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<CoverPair> Poset::cover_pairs() const {
  std::vector<CoverPair> pairs;
  for (Element x = 0; x < size(); ++x)
    for (Element y : up_[x]) pairs.emplace_back(x, y);
  return pairs;
}

namespace {

std::string pair_text(const CoverPair& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

}  // namespace

Poset build_poset(std::size_t n, std::span<const CoverPair> cover_pairs) {
  if (n == 0) throw Error("IndexOutOfRange", "a poset needs at least one element");

  Poset p;
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const auto& c : cover_pairs) {
    if (c.first >= n || c.second >= n)
      throw Error("IndexOutOfRange", "cover " + pair_text(c) + " outside 0.." + std::to_string(n - 1));
    if (c.first >= c.second)
      throw Error("NotLinearExtension", "cover " + pair_text(c) + " does not go upward in index order");
    p.up_[c.first].push_back(c.second);
    p.down_[c.second].push_back(c.first);
  }
  for (Element x = 0; x < n; ++x) {
    auto& u = p.up_[x];
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end())
      throw Error("DuplicateCover", "duplicate cover above element " + std::to_string(x));
    std::sort(p.down_[x].begin(), p.down_[x].end());
  }

  // Reflexive-transitive closure, top-down in index order.
  p.leq_ = BitMatrix(n);
  for (Element x = n; x-- > 0;) {
    p.leq_.set(x, x);
    auto row = p.leq_.row(x);
    for (Element y : p.up_[x]) {
      auto other = p.leq_.row(y);
      for (std::size_t w = 0; w < row.size(); ++w) row[w] |= other[w];
    }
  }
  // A cover (x, y) is redundant when y lies above another cover of x.
  for (Element x = 0; x < n; ++x)
    for (Element y : p.up_[x])
      for (Element z : p.up_[x])
        if (z != y && p.leq_.test(z, y))
          throw Error("NotReduced", "cover " + pair_text({x, y}) + " is implied through " + std::to_string(z));

  p.geq_ = BitMatrix(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (p.leq_.test(x, y)) p.geq_.set(y, x);
  return p;
}

Poset build_poset_any_order(std::size_t n, std::span<const CoverPair> cover_pairs, std::vector<Element>* relabel) {
  if (n == 0) throw Error("IndexOutOfRange", "a poset needs at least one element");
  std::vector<std::vector<Element>> up(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& c : cover_pairs) {
    if (c.first >= n || c.second >= n)
      throw Error("IndexOutOfRange", "cover " + pair_text(c) + " outside 0.." + std::to_string(n - 1));
    if (c.first == c.second) throw Error("NotAcyclic", "cover " + pair_text(c) + " is a loop");
    up[c.first].push_back(c.second);
    ++indegree[c.second];
  }
  // Kahn's algorithm with a min-heap keeps the result stable.
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push(x);
  std::vector<Element> position(n, n);
  Element next = 0;
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    position[x] = next++;
    for (Element y : up[x])
      if (--indegree[y] == 0) ready.push(y);
  }
  if (next != n) throw Error("NotAcyclic", "cover relation contains a cycle");

  std::vector<CoverPair> mapped;
  mapped.reserve(cover_pairs.size());
  for (const auto& c : cover_pairs) mapped.emplace_back(position[c.first], position[c.second]);
  if (relabel) *relabel = position;
  return build_poset(n, mapped);
}

Poset relabel_poset(const Poset& p, std::span<const Element> perm) {
  std::vector<CoverPair> pairs;
  for (const auto& [x, y] : p.cover_pairs()) pairs.emplace_back(perm[x], perm[y]);
  return build_poset(p.size(), pairs);
}

std::vector<CoverPair> transitive_reduction(const BitMatrix& leq) {
  const std::size_t n = leq.size();
  std::vector<CoverPair> pairs;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (!leq.test(x, y)) continue;
      bool direct = true;
      for (Element z = x + 1; z < y && direct; ++z)
        if (leq.test(x, z) && leq.test(z, y)) direct = false;
      if (direct) pairs.emplace_back(x, y);
    }
  return pairs;
}

}  // namespace latwb
