#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "latwb/lattice.hpp"

namespace latwb {

/// Which coatom of the lower lattice is glued to which atom of the upper one,
/// relative to stored element order. `parallel` pairs lower-index with
/// lower-index; `crossed` swaps.
enum class Matching2 { parallel, crossed };

/// L + U: identify the top of `lower` with the bottom of `upper`.
/// Elements of `lower` keep their indices.
Lattice vertical_sum(const Lattice& lower, const Lattice& upper);

/// Vertical sum of a sequence, left to right; the empty sum is the singleton.
Lattice vertical_sum(std::span<const Lattice> parts);

/// Unique decomposition into non-singleton vi-lattices, bottom-up.
/// Throws Error("SingletonInput") for the one-element lattice.
std::vector<Lattice> vertical_decompose(const Lattice& l);

/// L +₂ U: drop the top of `lower` and the bottom of `upper`, then identify
/// the two coatoms of `lower` with the two atoms of `upper` per `m`.
/// Throws Error("PreconditionViolated") unless `lower` has exactly two
/// coatoms and `upper` exactly two atoms.
Lattice vertical_2sum(const Lattice& lower, const Lattice& upper, Matching2 m);

/// Both matchings, deduplicated up to isomorphism (one or two lattices).
std::vector<Lattice> vertical_2sums_all(const Lattice& lower, const Lattice& upper);

/// Generalized k-sum. `matching[i]` is the index into atoms(upper) glued to
/// the i-th coatom of `lower`. The result need not be a lattice.
Poset vertical_ksum(const Lattice& lower, const Lattice& upper, std::size_t k, std::span<const std::size_t> matching);

/// Cuts a graded lattice along a two-element rank level {a, b}: the lower part
/// is the down-set of {a, b} plus a new top, the upper part the up-set plus a
/// new bottom. Inverse of vertical_2sum when the level is the glued pair.
std::pair<Lattice, Lattice> split_at_level(const Lattice& l, Element a, Element b);

/// Splits at the lowest-rank neck. Throws Error("PreconditionViolated")
/// when l is not graded or has no neck.
std::pair<Lattice, Lattice> split_at_lowest_neck(const Lattice& l);

}  // namespace latwb
