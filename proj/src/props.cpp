#include "latwb/props.hpp"

#include <algorithm>

namespace latwb {

std::optional<RankFunction> rank_function(const Lattice& l, std::vector<Element>* violation) {
  const Poset& p = l.poset();
  RankFunction r;
  r.ranks.assign(l.size(), 0);
  for (Element x = 0; x < l.size(); ++x)
    for (Element y : p.upper_covers(x)) r.ranks[y] = std::max(r.ranks[y], r.ranks[x] + 1);
  for (const auto& [x, y] : p.cover_pairs()) {
    if (r.ranks[y] != r.ranks[x] + 1) {
      if (violation) *violation = {x, y};
      return std::nullopt;
    }
  }
  r.height = r.ranks[l.top()];
  return r;
}

Check check_graded(const Lattice& l) {
  std::vector<Element> violation;
  if (rank_function(l, &violation)) return Check::pass();
  return Check::fail(violation);
}

Check check_semimodular(const Lattice& l) {
  const Poset& p = l.poset();
  for (Element m = 0; m < l.size(); ++m) {
    auto up = p.upper_covers(m);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        Element s = up[i], t = up[j];
        Element top = l.join_unchecked(s, t);
        if (!l.covers(s, top) || !l.covers(t, top)) return Check::fail({s, t});
      }
  }
  return Check::pass();
}

Check check_modular(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element z = x; z < n; ++z) {
      if (!l.leq(x, z)) continue;
      for (Element y = 0; y < n; ++y) {
        Element lhs = l.join_unchecked(x, l.meet_unchecked(y, z));
        Element rhs = l.meet_unchecked(l.join_unchecked(x, y), z);
        if (lhs != rhs) return Check::fail({x, y, z});
      }
    }
  return Check::pass();
}

bool is_modular_via_semimodularity(const Lattice& l) { return is_semimodular(l) && is_semimodular(dual(l)); }

Check check_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z) {
        Element lhs = l.meet_unchecked(x, l.join_unchecked(y, z));
        Element rhs = l.join_unchecked(l.meet_unchecked(x, y), l.meet_unchecked(x, z));
        if (lhs != rhs) return Check::fail({x, y, z});
      }
  return Check::pass();
}

std::vector<Element> knots(const Lattice& l) {
  std::vector<Element> result;
  const Poset& p = l.poset();
  for (Element x = 1; x + 1 < l.size(); ++x) {
    bool all = true;
    for (Element y = 0; y < l.size() && all; ++y) all = p.comparable(x, y);
    if (all) result.push_back(x);
  }
  return result;
}

bool is_vi(const Lattice& l) { return knots(l).empty(); }

std::vector<Element> rank_level(const RankFunction& r, std::size_t rank) {
  std::vector<Element> level;
  for (Element x = 0; x < r.ranks.size(); ++x)
    if (r.ranks[x] == rank) level.push_back(x);
  return level;
}

std::vector<std::size_t> necks(const Lattice& l, const RankFunction& r) {
  std::vector<std::size_t> width(r.height + 1, 0);
  for (Element x = 0; x < l.size(); ++x) ++width[r.ranks[x]];
  std::vector<std::size_t> result;
  for (std::size_t rho = 2; rho + 2 <= r.height; ++rho)
    if (width[rho] == 2) result.push_back(rho);
  return result;
}

bool is_piece(const Lattice& l) {
  auto r = rank_function(l);
  if (!r || r->height < 3) return false;
  if (atoms(l).size() != 2 || coatoms(l).size() != 2) return false;
  if (!is_vi(l)) return false;
  return necks(l, *r).empty();
}

PropertyReport classify(const Lattice& l) {
  PropertyReport report;
  report.graded = check_graded(l);
  report.semimodular = check_semimodular(l);
  report.modular = check_modular(l);
  report.distributive = check_distributive(l);
  auto k = knots(l);
  report.vertically_indecomposable = k.empty() ? Check::pass() : Check::fail({k.front()});
  report.piece = is_piece(l);
  return report;
}

}  // namespace latwb
