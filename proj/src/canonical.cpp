#include "latwb/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace latwb {

namespace {

// Individualization-refinement search over ordered partitions. Colors are
// dense ranks 0..k-1 whose order is label-independent, so every discrete
// partition reached is a candidate labeling; the lexicographically least
// cover-matrix encoding wins.
class Canonizer {
 public:
  Canonizer(std::size_t n, const std::vector<std::vector<Element>>& up, const std::vector<std::vector<Element>>& down)
      : n_(n), up_(up), down_(down), adjacent_(n * n, 0), twin_(n) {
    for (Element x = 0; x < n; ++x)
      for (Element y : up[x]) adjacent_[x * n + y] = 1;

    // Twins share both cover lists; swapping two twins is an automorphism.
    std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::size_t> classes;
    for (Element x = 0; x < n; ++x) {
      auto key = std::make_pair(sorted(up[x]), sorted(down[x]));
      twin_[x] = classes.try_emplace(std::move(key), classes.size()).first->second;
    }
  }

  CanonicalLabeling run() {
    std::vector<std::size_t> color = initial_colors();
    search(color);
    CanonicalLabeling result;
    result.position.assign(best_position_.begin(), best_position_.end());
    result.code.bytes = std::move(best_code_);
    return result;
  }

 private:
  static std::vector<Element> sorted(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<std::size_t> initial_colors() const {
    // Longest chain from below and from above, down-set and up-set sizes.
    std::vector<std::size_t> depth(n_, 0), height(n_, 0), below(n_, 1), above(n_, 1);
    for (Element x = 0; x < n_; ++x)
      for (Element y : up_[x]) depth[y] = std::max(depth[y], depth[x] + 1);
    for (Element x = n_; x-- > 0;)
      for (Element y : up_[x]) height[x] = std::max(height[x], height[y] + 1);

    std::vector<std::vector<bool>> reach(n_, std::vector<bool>(n_, false));
    for (Element x = n_; x-- > 0;) {
      reach[x][x] = true;
      for (Element y : up_[x])
        for (Element z = 0; z < n_; ++z)
          if (reach[y][z]) reach[x][z] = true;
    }
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (x != y && reach[x][y]) {
          ++above[x];
          ++below[y];
        }

    std::vector<std::vector<std::size_t>> keys(n_);
    for (Element x = 0; x < n_; ++x)
      keys[x] = {depth[x], height[x], below[x], above[x], up_[x].size(), down_[x].size()};
    return rank_by(keys);
  }

  std::vector<std::size_t> rank_by(const std::vector<std::vector<std::size_t>>& keys) const {
    std::vector<Element> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Element a, Element b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> color(n_);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
    return color;
  }

  static std::size_t cell_count(const std::vector<std::size_t>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  void refine(std::vector<std::size_t>& color) const {
    std::size_t cells = cell_count(color);
    std::vector<std::vector<std::size_t>> keys(n_);
    while (cells < n_) {
      for (Element x = 0; x < n_; ++x) {
        auto& key = keys[x];
        key.clear();
        key.push_back(color[x]);
        std::size_t mark = key.size();
        for (Element y : up_[x]) key.push_back(color[y]);
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(mark), key.end());
        key.push_back(n_);  // separator, larger than every color
        mark = key.size();
        for (Element y : down_[x]) key.push_back(color[y]);
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(mark), key.end());
      }
      auto next = rank_by(keys);
      std::size_t next_cells = cell_count(next);
      color = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  void search(std::vector<std::size_t> color) {
    refine(color);
    if (cell_count(color) == n_) {
      visit_leaf(color);
      return;
    }
    // Target cell: the first color that holds more than one element.
    std::vector<std::size_t> size(n_, 0);
    for (auto c : color) ++size[c];
    std::size_t target = 0;
    while (size[target] < 2) ++target;

    std::vector<std::size_t> tried_twins;
    for (Element v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_[v]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_[v]);
      std::vector<std::size_t> child(n_);
      for (Element u = 0; u < n_; ++u) child[u] = 2 * color[u] + (u == v ? 0 : 1);
      std::vector<std::vector<std::size_t>> keys(n_);
      for (Element u = 0; u < n_; ++u) keys[u] = {child[u]};
      search(rank_by(keys));
    }
  }

  void visit_leaf(const std::vector<std::size_t>& position) {
    std::vector<Element> vertex(n_);
    for (Element v = 0; v < n_; ++v) vertex[position[v]] = v;
    std::string code;
    code.reserve(4 + (n_ * n_ + 7) / 8);
    for (int shift = 24; shift >= 0; shift -= 8) code.push_back(static_cast<char>((n_ >> shift) & 0xFF));
    unsigned char byte = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) | adjacent_[vertex[i] * n_ + vertex[j]]);
        if (++filled == 8) {
          code.push_back(static_cast<char>(byte));
          byte = 0;
          filled = 0;
        }
      }
    if (filled > 0) code.push_back(static_cast<char>(byte << (8 - filled)));

    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_position_ = position;
      have_best_ = true;
    }
  }

  std::size_t n_;
  const std::vector<std::vector<Element>>& up_;
  const std::vector<std::vector<Element>>& down_;
  std::vector<unsigned char> adjacent_;
  std::vector<std::size_t> twin_;

  bool have_best_ = false;
  std::string best_code_;
  std::vector<std::size_t> best_position_;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::size_t n, const std::vector<std::vector<Element>>& up,
                                     const std::vector<std::vector<Element>>& down) {
  return Canonizer(n, up, down).run();
}

CanonicalLabeling canonical_labeling(const Poset& p) {
  std::vector<std::vector<Element>> up(p.size()), down(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto u = p.upper_covers(x);
    auto d = p.lower_covers(x);
    up[x].assign(u.begin(), u.end());
    down[x].assign(d.begin(), d.end());
  }
  return canonical_labeling(p.size(), up, down);
}

CanonicalCode canonical_code(const Poset& p) { return canonical_labeling(p).code; }

bool is_isomorphic(const Poset& p, const Poset& q) {
  return p.size() == q.size() && canonical_code(p) == canonical_code(q);
}

Lattice canonical_form(const Lattice& l) {
  auto labeling = canonical_labeling(l.poset());
  return as_lattice(relabel_poset(l.poset(), labeling.position));
}

}  // namespace latwb
