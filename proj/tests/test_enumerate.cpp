#include <doctest.h>

#include <cstdlib>
#include <set>

#include "latwb/canonical.hpp"
#include "latwb/enumerate.hpp"
#include "support.hpp"

using namespace latwb;
using namespace testing_support;

namespace {

bool oracle_member(FamilyId id, const oracle::Matrix& m) {
  switch (id) {
    case FamilyId::all: return true;
    case FamilyId::graded: return oracle::is_graded(m);
    case FamilyId::modular: return oracle::is_modular(m);
    case FamilyId::semimodular: return oracle::is_semimodular(m);
    case FamilyId::distributive: return oracle::is_distributive(m);
    case FamilyId::graded_even_rank: return oracle::is_graded(m) && oracle::height(m) % 2 == 0;
  }
  return false;
}

std::vector<std::size_t> counts(FamilyId id, std::size_t n_max) {
  LatticeEnumerator e{Family(id)};
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(e.count(n));
  return out;
}

}  // namespace

TEST_CASE("lattice counts agree with brute force over all order relations") {
  LatticeEnumerator e{Family(FamilyId::all)};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<CanonicalCode> brute;
    for (const auto& m : oracle::all_lattices(n)) brute.insert(canonical_code(from_matrix(m)));
    std::set<CanonicalCode> generated;
    for (const Lattice& l : e.lattices(n)) generated.insert(canonical_code(l));
    CHECK(generated == brute);
  }
  CHECK(counts(FamilyId::all, 8) == std::vector<std::size_t>{1, 1, 1, 2, 5, 15, 53, 222});
}

TEST_CASE("modular counts follow from the vi convolution") {
  // Totals recomputed here from the leading vi counts 1,0,1,1,2,3,7.
  const std::vector<long> vi{0, 1, 1, 0, 1, 1, 2, 3, 7};  // vi[k] for k = 1..8
  std::vector<long> total{0, 1};
  for (std::size_t n = 2; n <= 8; ++n) {
    long s = 0;
    for (std::size_t k = 2; k <= n; ++k) s += vi[k] * total[n - k + 1];
    total.push_back(s);
  }
  const std::vector<std::size_t> expected(total.begin() + 1, total.end());
  CHECK(expected == std::vector<std::size_t>{1, 1, 1, 2, 4, 8, 16, 34});
  CHECK(counts(FamilyId::modular, 8) == expected);
}

TEST_CASE("family pruning keeps exactly the post-filtered lattices") {
  LatticeEnumerator all{Family(FamilyId::all)};
  for (FamilyId id : {FamilyId::graded, FamilyId::modular, FamilyId::semimodular, FamilyId::distributive,
                      FamilyId::graded_even_rank}) {
    LatticeEnumerator e{Family(id)};
    for (std::size_t n = 1; n <= 8; ++n) {
      std::set<CanonicalCode> filtered;
      for (const Lattice& l : all.lattices(n))
        if (oracle_member(id, to_matrix(l))) filtered.insert(canonical_code(l));
      std::set<CanonicalCode> generated;
      for (const Lattice& l : e.lattices(n)) generated.insert(canonical_code(l));
      INFO("family " << Family(id).name() << ", n = " << n);
      REQUIRE(generated == filtered);
      REQUIRE(generated.size() == e.lattices(n).size());
    }
  }
}

TEST_CASE("output is sorted by canonical code without duplicates") {
  for (FamilyId id : Family::standard()) {
    LatticeEnumerator e{Family(id)};
    for (std::size_t n = 1; n <= 9; ++n) {
      const auto& ls = e.lattices(n);
      for (std::size_t i = 1; i < ls.size(); ++i) REQUIRE(canonical_code(ls[i - 1]) < canonical_code(ls[i]));
      for (const Lattice& l : ls) REQUIRE(canonical_form(l) == l);
    }
  }
}

TEST_CASE("totals satisfy the vi convolution for every closed family") {
  for (FamilyId id : Family::standard()) {
    const CountTables t = count_tables(9, Family(id));
    INFO("family " << Family(id).name());
    CHECK(total_from_vi(t.vi).values == t.total.values);
    CHECK(t.total.provenance == Provenance::enumerated);
  }
}

TEST_CASE("family counts are nested") {
  const auto d = counts(FamilyId::distributive, 9), m = counts(FamilyId::modular, 9);
  const auto s = counts(FamilyId::semimodular, 9), g = counts(FamilyId::graded, 9), l = counts(FamilyId::all, 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(d[i] <= m[i]);
    CHECK(m[i] <= s[i]);
    CHECK(s[i] <= g[i]);
    CHECK(g[i] <= l[i]);
  }
}

TEST_CASE("graded lattices of even rank exceed the convolution bound") {
  LatticeEnumerator e{Family(FamilyId::graded_even_rank)};
  CountTable total{"graded-even-rank", CountKind::total, Provenance::enumerated, {}};
  CountTable vi{"graded-even-rank", CountKind::vi, Provenance::enumerated, {}};
  for (std::size_t n = 1; n <= 6; ++n) {
    total.values.emplace_back(e.count(n));
    std::size_t v = 0;
    for (const Lattice& l : e.lattices(n)) v += is_vi(l) ? 1 : 0;
    vi.values.emplace_back(v);
  }
  const CountTable conv = total_from_vi(vi);
  bool strict = false;
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(total.at(n) >= conv.at(n));
    strict = strict || total.at(n) > conv.at(n);
  }
  CHECK(strict);
  // The 3-chain is the first lattice the convolution misses.
  CHECK(total.at(3) == 1);
  CHECK(conv.at(3) == 0);
  // Not decomposition-closed, so count_tables skips the convolution check.
  const CountTables t = count_tables(6, Family(FamilyId::graded_even_rank));
  CHECK(t.total.values == total.values);
}

TEST_CASE("count tables for tiny N") {
  for (FamilyId id : Family::standard()) {
    const CountTables t = count_tables(2, Family(id));
    CHECK(t.total.values == std::vector<BigInt>{1, 1});
    CHECK(t.vi.values == std::vector<BigInt>{1, 1});
    CHECK(t.piece.values == std::vector<BigInt>{0, 0});
  }
}

TEST_CASE("piece counts for small n") {
  const CountTables m = count_tables(10, Family(FamilyId::modular));
  const CountTables s = count_tables(10, Family(FamilyId::semimodular));
  const auto data = dataset();
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(m.piece.at(n) == data.table("modular-pieces").at(n));
    CHECK(s.piece.at(n) == data.table("semimodular-pieces").at(n));
  }
}

TEST_CASE("resource caps") {
  EnumLimits limits;
  limits.max_n[FamilyId::all] = 5;
  LatticeEnumerator e{Family(FamilyId::all), limits};
  CHECK(e.count(5) == 5);
  try {
    e.count(6);
    FAIL("cap ignored");
  } catch (const Error& err) {
    CHECK(err.code() == "ResourceCap");
  }
  ::setenv("LATWB_MAX_N_DISTRIBUTIVE", "4", 1);
  CHECK(EnumLimits::from_env().limit(FamilyId::distributive) == 4);
  ::setenv("LATWB_MAX_N_DISTRIBUTIVE", "lots", 1);
  CHECK_THROWS_AS(EnumLimits::from_env(), Error);
  ::unsetenv("LATWB_MAX_N_DISTRIBUTIVE");
  CHECK(EnumLimits::from_env().limit(FamilyId::distributive) == 13);
}

TEST_CASE("family names") {
  CHECK(Family::from_name("semimodular").id() == FamilyId::semimodular);
  CHECK(Family::from_name("graded-even-rank").id() == FamilyId::graded_even_rank);
  CHECK_THROWS_AS(Family::from_name("lattices"), Error);
  CHECK(Family::standard().size() == 5);
}
