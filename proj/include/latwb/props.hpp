#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latwb/lattice.hpp"

namespace latwb {

/// Outcome of a structural predicate. When `holds` is false, `witness`
/// names the elements that violate the defining law (pair or triple).
struct Check {
  bool holds = true;
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return holds; }
  static Check pass() { return {}; }
  static Check fail(std::vector<Element> w) { return {false, std::move(w)}; }
};

struct RankFunction {
  std::vector<std::size_t> ranks;
  std::size_t height = 0;

  std::size_t operator[](Element x) const { return ranks.at(x); }
};

/// Ranks by longest chain from the bottom, verified on every cover. Returns
/// nullopt when l is not graded; `violation` then receives the offending cover.
std::optional<RankFunction> rank_function(const Lattice& l, std::vector<Element>* violation = nullptr);
Check check_graded(const Lattice& l);

/// Upper semimodularity: s, t covering s∧t implies s∨t covers s and t.
Check check_semimodular(const Lattice& l);
/// Modular law x∨(y∧z) = (x∨y)∧z for all x ≤ z; witness is (x, y, z).
Check check_modular(const Lattice& l);
/// Independent route: semimodular and dual-semimodular.
bool is_modular_via_semimodularity(const Lattice& l);
/// x∧(y∨z) = (x∧y)∨(x∧z) for all triples; witness is (x, y, z).
Check check_distributive(const Lattice& l);

inline bool is_graded(const Lattice& l) { return check_graded(l).holds; }
inline bool is_semimodular(const Lattice& l) { return check_semimodular(l).holds; }
inline bool is_modular(const Lattice& l) { return check_modular(l).holds; }
inline bool is_distributive(const Lattice& l) { return check_distributive(l).holds; }

/// Non-extreme elements comparable to every element, ascending.
std::vector<Element> knots(const Lattice& l);
/// Vertically indecomposable: no knots. The singleton counts as vi.
bool is_vi(const Lattice& l);

/// Rank levels holding exactly two elements, excluding atom and coatom levels.
std::vector<std::size_t> necks(const Lattice& l, const RankFunction& r);
/// Elements of the given rank, ascending.
std::vector<Element> rank_level(const RankFunction& r, std::size_t rank);

/// Graded vi-lattice with exactly two atoms, exactly two coatoms, no neck
/// and height at least three.
bool is_piece(const Lattice& l);

struct PropertyReport {
  Check graded;
  Check modular;
  Check semimodular;
  Check distributive;
  Check vertically_indecomposable;
  bool piece = false;
};

PropertyReport classify(const Lattice& l);

}  // namespace latwb
