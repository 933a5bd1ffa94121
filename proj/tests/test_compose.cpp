#include <doctest.h>

#include "latwb/canonical.hpp"
#include "latwb/compose.hpp"
#include "latwb/enumerate.hpp"
#include "latwb/props.hpp"
#include "support.hpp"

using namespace latwb;
using namespace testing_support;

namespace {

std::vector<Lattice> all_up_to(std::size_t n_max, FamilyId family = FamilyId::all) {
  LatticeEnumerator e{Family(family)};
  std::vector<Lattice> out;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (const Lattice& l : e.lattices(n)) out.push_back(l);
  return out;
}

bool same_parts(const std::vector<Lattice>& a, const std::vector<Lattice>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_isomorphic(a[i], b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("vertical sum sizes, identity and associativity") {
  const Lattice b3 = Lattice::boolean(3), m3 = Lattice::diamond(3), h = hexagon();
  CHECK(vertical_sum(b3, m3).size() == 8 + 5 - 1);
  CHECK(vertical_sum(Lattice::singleton(), b3) == b3);
  CHECK(is_isomorphic(vertical_sum(b3, Lattice::singleton()), b3));
  CHECK(is_isomorphic(vertical_sum(vertical_sum(b3, m3), h), vertical_sum(b3, vertical_sum(m3, h))));
  CHECK(vertical_sum(std::span<const Lattice>{}) == Lattice::singleton());
  const std::vector<Lattice> parts{Lattice::chain(2), Lattice::chain(2), Lattice::chain(2)};
  CHECK(is_isomorphic(vertical_sum(parts), Lattice::chain(4)));
}

TEST_CASE("decomposition of simple cases") {
  CHECK_THROWS_WITH_AS(vertical_decompose(Lattice::singleton()), doctest::Contains("singleton"), Error);
  const auto chain_parts = vertical_decompose(Lattice::chain(5));
  CHECK(chain_parts.size() == 4);
  for (const Lattice& p : chain_parts) CHECK(p.size() == 2);
  const auto b3_parts = vertical_decompose(Lattice::boolean(3));
  REQUIRE(b3_parts.size() == 1);
  CHECK(is_isomorphic(b3_parts.front(), Lattice::boolean(3)));
}

TEST_CASE("decomposition is unique on every vertical sum of lattices up to 6 elements") {
  const auto lattices = all_up_to(6);
  for (const Lattice& l : lattices) {
    for (const Lattice& u : lattices) {
      const Lattice s = vertical_sum(l, u);
      REQUIRE(s.size() == l.size() + u.size() - 1);
      auto expected = vertical_decompose(l);
      for (auto& p : vertical_decompose(u)) expected.push_back(std::move(p));
      const auto parts = vertical_decompose(s);
      REQUIRE(same_parts(parts, expected));
      for (const Lattice& p : parts) REQUIRE(is_vi(p));
      REQUIRE(is_isomorphic(vertical_sum(parts), s));
    }
  }
}

TEST_CASE("2-sum needs two coatoms below and two atoms above") {
  CHECK_THROWS_AS(vertical_2sum(Lattice::boolean(3), chain2_times_chain3(), Matching2::parallel), Error);
  CHECK_THROWS_AS(vertical_2sum(chain2_times_chain3(), Lattice::diamond(3), Matching2::parallel), Error);
}

TEST_CASE("the two matchings of the 2x3 grid with itself are not isomorphic") {
  const Lattice g = chain2_times_chain3();
  const auto sums = vertical_2sums_all(g, g);
  REQUIRE(sums.size() == 2);
  CHECK_FALSE(is_isomorphic(sums[0], sums[1]));
  for (const Lattice& s : sums) {
    CHECK(s.size() == 8);
    CHECK(is_modular(s));
  }
}

TEST_CASE("published 2-sum example is reproduced") {
  const auto data = dataset();
  const Lattice lower = data.lattice("two-sum-lower"), upper = data.lattice("two-sum-upper");
  const Lattice expected = data.lattice("two-sum-result");
  for (Matching2 m : {Matching2::parallel, Matching2::crossed}) {
    const Lattice s = vertical_2sum(lower, upper, m);
    CHECK(s.size() == 10);
    CHECK(is_isomorphic(s, expected));
  }
  const auto [l, u] = split_at_lowest_neck(expected);
  CHECK(is_isomorphic(l, lower));
  CHECK(is_isomorphic(u, upper));
}

TEST_CASE("2-sums of small pieces satisfy the closure laws under both matchings") {
  std::vector<Lattice> pieces;
  for (const Lattice& l : all_up_to(10, FamilyId::graded))
    if (is_piece(l)) pieces.push_back(l);
  REQUIRE(!pieces.empty());
  std::size_t checked = 0;
  for (const Lattice& l : pieces) {
    const bool l_semi = is_semimodular(l), l_mod = is_modular(l);
    for (const Lattice& u : pieces) {
      const bool u_semi = is_semimodular(u), u_mod = is_modular(u);
      for (Matching2 m : {Matching2::parallel, Matching2::crossed}) {
        const Lattice s = vertical_2sum(l, u, m);  // throws if not a lattice
        REQUIRE(s.size() == l.size() + u.size() - 4);
        REQUIRE(is_vi(s));
        REQUIRE(is_graded(s));
        if (l_semi && u_semi) REQUIRE(is_semimodular(s));
        if (l_mod && u_mod) REQUIRE(is_modular(s));
        REQUIRE(coatoms(s).size() == 2);
        REQUIRE(atoms(s).size() == 2);
        // The lowest neck separates the summands again.
        const auto [lo, hi] = split_at_lowest_neck(s);
        REQUIRE(is_isomorphic(lo, l));
        REQUIRE(is_isomorphic(hi, u));
        ++checked;
      }
    }
  }
  CHECK(checked == 2 * pieces.size() * pieces.size());
}

TEST_CASE("3-sum of two Boolean cubes fails for every matching") {
  const Lattice b3 = Lattice::boolean(3);
  std::vector<std::size_t> matching{0, 1, 2};
  do {
    const Poset glued = vertical_ksum(b3, b3, 3, matching);
    CHECK(glued.size() == 11);
    CHECK_THROWS_AS(as_lattice(glued), NotALattice);
  } while (std::next_permutation(matching.begin(), matching.end()));
}

TEST_CASE("k-sum with k = 1 is the vertical sum") {
  const Lattice h = hexagon(), m3 = Lattice::diamond(3);
  const std::vector<std::size_t> matching{0};
  const Lattice c2 = Lattice::chain(2);
  // A 1-sum drops both tops and bottoms; gluing via a 2-chain recovers L + U.
  const Poset one = vertical_ksum(vertical_sum(h, c2), vertical_sum(c2, m3), 1, matching);
  CHECK(is_isomorphic(as_lattice(one), vertical_sum(h, m3)));
}
