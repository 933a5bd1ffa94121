#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latwb/count_table.hpp"
#include "latwb/lattice.hpp"
#include "latwb/props.hpp"

namespace latwb {

enum class FamilyId { all, graded, modular, semimodular, distributive, graded_even_rank };

/// A lattice family: an isomorphism-invariant predicate plus metadata.
class Family {
 public:
  explicit Family(FamilyId id) : id_(id) {}

  static Family from_name(std::string_view name);
  static std::span<const FamilyId> standard();  // the five decomposition-closed families

  FamilyId id() const noexcept { return id_; }
  std::string_view name() const noexcept;
  bool contains(const Lattice& l) const;
  /// Closed under vertical sum and vertical decomposition, so that totals
  /// follow from vi counts by convolution.
  bool decomposition_closed() const noexcept { return id_ != FamilyId::graded_even_rank; }

  bool operator==(const Family&) const = default;

 private:
  FamilyId id_;
};

/// Largest n the enumerator will attempt, per family.
struct EnumLimits {
  std::map<FamilyId, std::size_t> max_n{{FamilyId::all, 10},        {FamilyId::graded, 10},
                                        {FamilyId::modular, 13},    {FamilyId::semimodular, 13},
                                        {FamilyId::distributive, 13}, {FamilyId::graded_even_rank, 10}};

  /// Defaults overridden by LATWB_MAX_N_<FAMILY> (e.g. LATWB_MAX_N_SEMIMODULAR=14).
  static EnumLimits from_env();
  std::size_t limit(FamilyId id) const { return max_n.at(id); }
};

/// Generates all unlabeled lattices of a family level by level. Each level is
/// computed once and cached; lattices come out in canonical labeling, sorted
/// by canonical code.
class LatticeEnumerator {
 public:
  explicit LatticeEnumerator(Family family, EnumLimits limits = EnumLimits::from_env());
  ~LatticeEnumerator();
  LatticeEnumerator(LatticeEnumerator&&) noexcept;
  LatticeEnumerator& operator=(LatticeEnumerator&&) noexcept;

  /// All n-element members of the family. Throws Error("ResourceCap").
  const std::vector<Lattice>& lattices(std::size_t n);
  std::size_t count(std::size_t n) { return lattices(n).size(); }

  const Family& family() const noexcept { return family_; }

 private:
  struct State;
  Family family_;
  EnumLimits limits_;
  std::unique_ptr<State> state_;
};

/// Convenience wrapper: every n-element lattice of the family.
std::vector<Lattice> enumerate(std::size_t n, const Family& family, const EnumLimits& limits = EnumLimits::from_env());

struct CountTables {
  CountTable total;
  CountTable vi;
  CountTable piece;
};

/// Counts per n = 1..big_n. For decomposition-closed families the directly
/// enumerated totals are checked against the convolution of the vi counts;
/// a mismatch throws Error("InvariantBroken").
CountTables count_tables(std::size_t big_n, const Family& family, const EnumLimits& limits = EnumLimits::from_env());
CountTables count_tables(std::size_t big_n, LatticeEnumerator& enumerator);

struct ClassificationSummary {
  std::vector<PropertyReport> reports;
  std::size_t total = 0;
  std::size_t graded = 0;
  std::size_t modular = 0;
  std::size_t semimodular = 0;
  std::size_t distributive = 0;
  std::size_t vi = 0;
  std::size_t pieces = 0;
};

ClassificationSummary classify_listing(std::span<const Lattice> lattices);

}  // namespace latwb
