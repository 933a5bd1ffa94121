#pragma once

#include <random>
#include <string>
#include <vector>

#include "latwb/io.hpp"
#include "latwb/lattice.hpp"
#include "latwb/paper.hpp"
#include "oracle.hpp"

namespace testing_support {

using latwb::CoverPair;
using latwb::Element;
using latwb::Lattice;

inline oracle::Matrix to_matrix(const Lattice& l) {
  oracle::Matrix m(l.size(), std::vector<bool>(l.size(), false));
  for (Element i = 0; i < l.size(); ++i)
    for (Element j = 0; j < l.size(); ++j) m[i][j] = l.leq(i, j);
  return m;
}

// Matrix whose labels already form a linear extension.
inline Lattice from_matrix(const oracle::Matrix& m) {
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (oracle::covers(m, i, j)) pairs.emplace_back(i, j);
  return latwb::lattice_from_covers(m.size(), pairs);
}

inline Lattice record(const std::string& r) { return latwb::parse_record(r); }

// A uniformly shuffled topological order used as a relabeling.
inline std::vector<Element> random_linear_extension(const latwb::Poset& p, std::mt19937_64& rng) {
  const std::size_t n = p.size();
  std::vector<std::size_t> pending(n);
  for (Element x = 0; x < n; ++x) pending[x] = p.lower_covers(x).size();
  std::vector<Element> ready{0};
  std::vector<Element> perm(n);
  for (std::size_t next = 0; next < n; ++next) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t k = pick(rng);
    const Element x = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    perm[x] = next;
    for (Element y : p.upper_covers(x))
      if (--pending[y] == 0) ready.push_back(y);
  }
  return perm;
}

inline Lattice random_relabel(const Lattice& l, std::mt19937_64& rng) {
  return latwb::as_lattice(latwb::relabel_poset(l.poset(), random_linear_extension(l.poset(), rng)));
}

// 0 < a < c < top and 0 < b < d < top.
inline Lattice hexagon() { return record("6;1,2;3;4;5;5;"); }
inline Lattice pentagon() { return record("5;1,2;3;4;4;"); }
// Product of a 2-chain and a 3-chain.
inline Lattice chain2_times_chain3() { return record("6;1,2;3;3,4;5;5;"); }

inline latwb::PaperDataset dataset() {
  return latwb::load_paper_dataset(std::string(LATWB_TEST_DATA_DIR) + "/paper_dataset.txt");
}

}  // namespace testing_support
