#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "latwb/lattice.hpp"

namespace latwb {

/// Byte string identifying the isomorphism class of a poset. Codes of
/// posets with different sizes never compare equal.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

/// Result of canonical labeling: position[v] is the canonical index of
/// vertex v. The canonical order is a linear extension of the poset.
struct CanonicalLabeling {
  std::vector<Element> position;
  CanonicalCode code;
};

/// Canonical labeling from raw cover lists. `up[v]` and `down[v]` are the
/// upper and lower covers of v; v's indices must form a linear extension.
CanonicalLabeling canonical_labeling(std::size_t n, const std::vector<std::vector<Element>>& up,
                                     const std::vector<std::vector<Element>>& down);

CanonicalLabeling canonical_labeling(const Poset& p);
CanonicalCode canonical_code(const Poset& p);
inline CanonicalCode canonical_code(const Lattice& l) { return canonical_code(l.poset()); }

bool is_isomorphic(const Poset& p, const Poset& q);
inline bool is_isomorphic(const Lattice& a, const Lattice& b) { return is_isomorphic(a.poset(), b.poset()); }

/// The representative of l's isomorphism class in canonical labeling.
Lattice canonical_form(const Lattice& l);

}  // namespace latwb

template <>
struct std::hash<latwb::CanonicalCode> {
  std::size_t operator()(const latwb::CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};
