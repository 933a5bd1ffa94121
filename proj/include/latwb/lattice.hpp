#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latwb/poset.hpp"

namespace latwb {

/// Finite lattice over a Poset in linear-extension form, with bottom 0 and
/// top n-1. Join and meet tables are precomputed.
class Lattice {
 public:
  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return size() - 1; }

  /// Bounds-checked; throws Error("IndexOutOfRange").
  Element join(Element x, Element y) const;
  Element meet(Element x, Element y) const;

  Element join_unchecked(Element x, Element y) const noexcept { return join_[x * size() + y]; }
  Element meet_unchecked(Element x, Element y) const noexcept { return meet_[x * size() + y]; }

  bool leq(Element x, Element y) const noexcept { return poset_.leq(x, y); }
  bool covers(Element lower, Element upper) const;

  bool operator==(const Lattice& other) const { return poset_ == other.poset_; }

  static Lattice singleton();
  static Lattice chain(std::size_t k);
  /// Boolean lattice of all subsets of a k-element set.
  static Lattice boolean(std::size_t k);
  /// M_k: bottom, k pairwise incomparable middles, top.
  static Lattice diamond(std::size_t k);

 private:
  friend Lattice as_lattice(const Poset& p);

  Poset poset_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
};

/// Raised by as_lattice when a pair lacks a least upper or greatest lower bound.
class NotALattice : public Error {
 public:
  enum class Reason { no_upper_bound, no_least_upper_bound, no_lower_bound, no_greatest_lower_bound };

  NotALattice(Element x, Element y, Reason reason);

  Element first() const noexcept { return x_; }
  Element second() const noexcept { return y_; }
  Reason reason() const noexcept { return reason_; }

  static const char* reason_name(Reason r) noexcept;

 private:
  Element x_;
  Element y_;
  Reason reason_;
};

/// Validates p as a lattice and builds its tables. Throws NoUniqueBottom,
/// NoUniqueTop (as Error) or NotALattice naming a witnessing pair.
Lattice as_lattice(const Poset& p);

/// Lattice built from covers; shorthand for as_lattice(build_poset(...)).
Lattice lattice_from_covers(std::size_t n, std::span<const CoverPair> cover_pairs);

std::vector<Element> atoms(const Lattice& l);
std::vector<Element> coatoms(const Lattice& l);

/// Order-reversed lattice, reindexed x -> n-1-x.
Lattice dual(const Lattice& l);

/// Sublattice on the interval [lo, hi], reindexed in order.
Lattice interval(const Lattice& l, Element lo, Element hi);

}  // namespace latwb
