#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latwb/error.hpp"

namespace latwb {

using Element = std::size_t;
using CoverPair = std::pair<Element, Element>;

/// Dense square boolean matrix stored as 64-bit words per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept { return {bits_.data() + i * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t i) noexcept { return {bits_.data() + i * words_, words_}; }

  std::size_t count() const noexcept;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Finite poset stored in a linear extension: every cover (i, j) has i < j.
/// Immutable once built; construct through build_poset.
class Poset {
 public:
  std::size_t size() const noexcept { return up_.size(); }

  std::span<const Element> upper_covers(Element x) const { return up_.at(x); }
  std::span<const Element> lower_covers(Element x) const { return down_.at(x); }

  bool leq(Element x, Element y) const noexcept { return leq_.test(x, y); }
  bool less(Element x, Element y) const noexcept { return x != y && leq_.test(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq_.test(x, y) || leq_.test(y, x); }

  /// Row x of the order matrix: the up-set of x as a bitset.
  std::span<const std::uint64_t> up_set(Element x) const noexcept { return leq_.row(x); }
  /// Row x of the transposed order matrix: the down-set of x as a bitset.
  std::span<const std::uint64_t> down_set(Element x) const noexcept { return geq_.row(x); }

  const BitMatrix& order_matrix() const noexcept { return leq_; }

  /// All cover pairs, sorted lexicographically.
  std::vector<CoverPair> cover_pairs() const;

  /// Labeled equality (same indices, same covers).
  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  friend Poset build_poset(std::size_t n, std::span<const CoverPair> cover_pairs);
  friend Poset build_poset_any_order(std::size_t n, std::span<const CoverPair> cover_pairs,
                                     std::vector<Element>* relabel);

  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  BitMatrix leq_;
  BitMatrix geq_;
};

/// Builds a poset from its cover relation. Pairs must satisfy i < j < n and
/// form a transitive reduction. Throws Error with code IndexOutOfRange,
/// NotLinearExtension, DuplicateCover or NotReduced.
Poset build_poset(std::size_t n, std::span<const CoverPair> cover_pairs);

/// Same as build_poset but accepts covers in any index order: the elements are
/// reindexed by a stable topological sort. Throws NotAcyclic on a cycle.
/// When `relabel` is given it receives the new index of each old index.
Poset build_poset_any_order(std::size_t n, std::span<const CoverPair> cover_pairs,
                            std::vector<Element>* relabel = nullptr);

/// Poset with element x moved to position perm[x]. perm must map covers
/// upward (i.e. be a linear extension of the relabeled order).
Poset relabel_poset(const Poset& p, std::span<const Element> perm);

/// Transitive reduction of an order matrix given in linear-extension form.
std::vector<CoverPair> transitive_reduction(const BitMatrix& leq);

}  // namespace latwb
