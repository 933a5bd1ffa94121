#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latwb/canonical.hpp"
#include "latwb/compose.hpp"
#include "latwb/enumerate.hpp"
#include "support.hpp"

using namespace latwb;
using namespace testing_support;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("build_poset accepts a 2-chain") {
  const std::vector<CoverPair> pairs{{0, 1}};
  const Poset p = build_poset(2, pairs);
  CHECK(p.size() == 2);
  CHECK(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 0));
}

TEST_CASE("build_poset rejects malformed cover lists") {
  const std::vector<CoverPair> implied{{0, 1}, {1, 2}, {0, 2}};
  CHECK(error_code([&] { build_poset(3, implied); }) == "NotReduced");
  const std::vector<CoverPair> out_of_range{{0, 3}};
  CHECK(error_code([&] { build_poset(3, out_of_range); }) == "IndexOutOfRange");
  const std::vector<CoverPair> backwards{{1, 0}};
  CHECK(error_code([&] { build_poset(2, backwards); }) == "NotLinearExtension");
  const std::vector<CoverPair> duplicate{{0, 1}, {0, 1}};
  CHECK(error_code([&] { build_poset(2, duplicate); }) == "DuplicateCover");
}

TEST_CASE("build_poset_any_order sorts topologically and detects cycles") {
  const std::vector<CoverPair> shuffled{{2, 0}, {0, 1}};
  std::vector<Element> relabel;
  const Poset p = build_poset_any_order(3, shuffled, &relabel);
  CHECK(p.leq(relabel[2], relabel[1]));
  CHECK(relabel[2] == 0);
  const std::vector<CoverPair> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK(error_code([&] { build_poset_any_order(3, cycle); }) == "NotAcyclic");
}

TEST_CASE("hexagon order relation has 17 true entries") {
  // 6 reflexive pairs plus 11 strict ones: each chain 0<a<c<top and
  // 0<b<d<top contributes 6 pairs, sharing 0<top.
  const Lattice h = hexagon();
  CHECK(h.poset().order_matrix().count() == 17);
  std::size_t brute = 0;
  for (const auto& row : to_matrix(h)) brute += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  CHECK(brute == 17);
}

TEST_CASE("transitive reduction round-trips the cover relation") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Lattice& l : enumerate(n, Family(FamilyId::all)))
      CHECK(transitive_reduction(l.poset().order_matrix()) == l.poset().cover_pairs());
}

TEST_CASE("as_lattice reports the failing condition") {
  CHECK(as_lattice(build_poset(2, std::vector<CoverPair>{{0, 1}})).size() == 2);
  const std::vector<CoverPair> no_top{{0, 1}, {0, 2}};
  CHECK(error_code([&] { as_lattice(build_poset(3, no_top)); }) == "NoUniqueTop");
  const std::vector<CoverPair> no_bottom{{0, 2}, {1, 2}};
  CHECK(error_code([&] { as_lattice(build_poset(3, no_bottom)); }) == "NoUniqueBottom");

  // Two middles each below two incomparable elements: no least upper bound.
  const std::vector<CoverPair> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  try {
    as_lattice(build_poset(6, bowtie));
    FAIL("bowtie accepted");
  } catch (const NotALattice& e) {
    CHECK(e.code() == "NotALattice");
    CHECK(std::set<Element>{e.first(), e.second()} == std::set<Element>{1, 2});
    CHECK(e.reason() == NotALattice::Reason::no_least_upper_bound);
  }
}

TEST_CASE("Boolean cube glued to itself along three atoms is not a lattice") {
  const Lattice b3 = Lattice::boolean(3);
  const std::vector<std::size_t> matching{0, 1, 2};
  const Poset glued = vertical_ksum(b3, b3, 3, matching);
  CHECK(glued.size() == 11);
  CHECK_THROWS_AS(as_lattice(glued), NotALattice);
}

TEST_CASE("join and meet") {
  const Lattice b3 = Lattice::boolean(3);
  const auto a = atoms(b3);
  REQUIRE(a.size() == 3);
  const Element j = b3.join(a[0], a[1]);
  CHECK(b3.covers(j, b3.top()));
  CHECK(b3.covers(a[0], j));
  CHECK(b3.covers(a[1], j));
  for (Element x = 0; x < b3.size(); ++x) {
    CHECK(b3.join(x, b3.bottom()) == x);
    CHECK(b3.join(x, x) == x);
    CHECK(b3.join(x, b3.top()) == b3.top());
  }
  const Lattice h = hexagon();
  CHECK(h.join(1, 2) == h.top());
  CHECK_THROWS_AS(h.join(0, 6), Error);
}

TEST_CASE("atoms and coatoms") {
  const Lattice c2 = Lattice::chain(2);
  CHECK(atoms(c2) == std::vector<Element>{1});
  CHECK(coatoms(c2) == std::vector<Element>{0});
  CHECK(atoms(Lattice::boolean(3)).size() == 3);
  CHECK(coatoms(Lattice::boolean(3)).size() == 3);
  const auto data = dataset();
  const Lattice left = data.lattice("two-sum-lower");
  CHECK(atoms(left).size() == 3);
  CHECK(coatoms(left).size() == 2);
}

TEST_CASE("dual") {
  CHECK(is_isomorphic(dual(Lattice::chain(5)), Lattice::chain(5)));
  CHECK(is_isomorphic(dual(Lattice::boolean(3)), Lattice::boolean(3)));
  const Lattice left = dataset().lattice("two-sum-lower");
  CHECK(atoms(dual(left)).size() == 2);
  CHECK(coatoms(dual(left)).size() == 3);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Lattice& l : enumerate(n, Family(FamilyId::all))) {
      CHECK_NOTHROW(as_lattice(dual(l).poset()));
      CHECK(dual(dual(l)) == l);
    }
}

TEST_CASE("join and meet tables agree with brute force and satisfy the lattice laws") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Lattice& l : enumerate(n, Family(FamilyId::all))) {
      const auto m = to_matrix(l);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          REQUIRE(l.join(x, y) == *oracle::join(m, x, y));
          REQUIRE(l.meet(x, y) == *oracle::meet(m, x, y));
          REQUIRE(l.join(x, y) == l.join(y, x));
          REQUIRE(l.meet(x, l.join(x, y)) == x);
          REQUIRE(l.join(x, l.meet(x, y)) == x);
          for (Element z = 0; z < n; ++z) {
            REQUIRE(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
            REQUIRE(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
          }
        }
    }
  }
}

TEST_CASE("absorption holds on modular lattices up to 12 elements") {
  LatticeEnumerator e(Family(FamilyId::modular));
  for (std::size_t n = 9; n <= 12; ++n)
    for (const Lattice& l : e.lattices(n))
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          REQUIRE(l.meet_unchecked(x, l.join_unchecked(x, y)) == x);
          REQUIRE(l.join_unchecked(x, l.meet_unchecked(x, y)) == x);
        }
}

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937_64 rng(20240611);
  const Lattice m3 = Lattice::diamond(3);
  CHECK(canonical_code(m3) == canonical_code(random_relabel(m3, rng)));
  CHECK(canonical_code(Lattice::chain(5)) != canonical_code(m3));

  for (std::size_t n = 1; n <= 10; ++n) {
    const auto lattices = enumerate(n, Family(FamilyId::all));
    // Every lattice up to 9 elements, every tenth one at 10.
    const std::size_t step = n <= 9 ? 1 : 10;
    for (std::size_t i = 0; i < lattices.size(); i += step) {
      const CanonicalCode code = canonical_code(lattices[i]);
      for (int k = 0; k < 100; ++k) REQUIRE(canonical_code(random_relabel(lattices[i], rng)) == code);
    }
  }
}

TEST_CASE("canonical form is a fixed point with the same code") {
  std::mt19937_64 rng(7);
  for (const Lattice& l : enumerate(7, Family(FamilyId::all))) {
    const Lattice c = canonical_form(random_relabel(l, rng));
    CHECK(canonical_form(c) == c);
    CHECK(canonical_code(c) == canonical_code(l));
  }
}

TEST_CASE("all 53 seven-element lattices have distinct codes") {
  const auto lattices = enumerate(7, Family(FamilyId::all));
  std::set<CanonicalCode> codes;
  for (const Lattice& l : lattices) codes.insert(canonical_code(l));
  CHECK(lattices.size() == 53);
  CHECK(codes.size() == 53);
}

TEST_CASE("canonical codes separate exactly the brute-force isomorphism classes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto classes = oracle::all_lattices(n);
    std::set<CanonicalCode> codes;
    for (const auto& m : classes) codes.insert(canonical_code(from_matrix(m)));
    CHECK(codes.size() == classes.size());
  }
}
