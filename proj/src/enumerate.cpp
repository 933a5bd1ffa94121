#include "latwb/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <unordered_set>

#include "latwb/canonical.hpp"

namespace latwb {

namespace {

constexpr std::size_t kMaxSmall = 32;
using Mask = std::uint32_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Lattice on at most 32 elements in linear-extension order, as up-set and
// down-set bitmasks (each including the element itself).
struct Small {
  std::size_t n = 0;
  std::array<Mask, kMaxSmall> up{};
  std::array<Mask, kMaxSmall> down{};

  Element join(Element x, Element y) const { return static_cast<Element>(std::countr_zero(up[x] & up[y])); }
  Element meet(Element x, Element y) const { return static_cast<Element>(31 - std::countl_zero(down[x] & down[y])); }

  std::array<Mask, kMaxSmall> upper_covers() const {
    std::array<Mask, kMaxSmall> cov{};
    for (Element x = 0; x < n; ++x) {
      Mask strict = up[x] & ~bit(x);
      Mask c = strict;
      for (Mask rest = strict; rest; rest &= rest - 1) {
        auto y = static_cast<Element>(std::countr_zero(rest));
        c &= ~(up[y] & ~bit(y));
      }
      cov[x] = c;
    }
    return cov;
  }
};

Mask shift_up(Mask m) { return ((m & ~Mask{1}) << 1) | (m & 1U); }

// Upper semimodularity at every element m >= from (from = 0: the full law).
bool semimodular_from(const Small& s, const std::array<Mask, kMaxSmall>& cov, Element from) {
  for (Element m = from; m < s.n; ++m)
    for (Mask a = cov[m]; a; a &= a - 1) {
      auto x = static_cast<Element>(std::countr_zero(a));
      for (Mask b = a & (a - 1); b; b &= b - 1) {
        auto y = static_cast<Element>(std::countr_zero(b));
        Element j = s.join(x, y);
        if (!(cov[x] & bit(j)) || !(cov[y] & bit(j))) return false;
      }
    }
  return true;
}

// Lower semimodularity restricted to meets >= from.
bool lower_semimodular_from(const Small& s, const std::array<Mask, kMaxSmall>& cov, Element from) {
  std::array<Mask, kMaxSmall> lower{};
  for (Element x = 0; x < s.n; ++x)
    for (Mask c = cov[x]; c; c &= c - 1) lower[std::countr_zero(c)] |= bit(x);
  for (Element j = 0; j < s.n; ++j)
    for (Mask a = lower[j]; a; a &= a - 1) {
      auto x = static_cast<Element>(std::countr_zero(a));
      for (Mask b = a & (a - 1); b; b &= b - 1) {
        auto y = static_cast<Element>(std::countr_zero(b));
        Element m = s.meet(x, y);
        if (m < from) continue;
        if (!(cov[m] & bit(x)) || !(cov[m] & bit(y))) return false;
      }
    }
  return true;
}

// Removing an atom preserves semimodularity above the bottom (and its dual
// restricted to nonzero meets), so these weaker laws prune every level while
// the full laws are applied only to the target size.
enum class Prune { none, upper, both };

Prune prune_for(FamilyId id) {
  switch (id) {
    case FamilyId::semimodular: return Prune::upper;
    case FamilyId::modular:
    case FamilyId::distributive: return Prune::both;
    default: return Prune::none;
  }
}

bool passes(const Small& s, Prune prune, bool final_level) {
  if (prune == Prune::none) return true;
  auto cov = s.upper_covers();
  Element from = final_level ? 0 : 1;
  if (!semimodular_from(s, cov, from)) return false;
  return prune == Prune::upper || lower_semimodular_from(s, cov, from);
}

struct Keyed {
  std::string code;
  Small lattice;
};

Keyed canonicalize(const Small& s) {
  auto cov = s.upper_covers();
  std::vector<std::vector<Element>> up(s.n), down(s.n);
  for (Element x = 0; x < s.n; ++x)
    for (Mask c = cov[x]; c; c &= c - 1) {
      auto y = static_cast<Element>(std::countr_zero(c));
      up[x].push_back(y);
      down[y].push_back(x);
    }
  auto labeling = canonical_labeling(s.n, up, down);
  Keyed out;
  out.code = std::move(labeling.code.bytes);
  out.lattice.n = s.n;
  for (Element x = 0; x < s.n; ++x) {
    Mask u = 0, d = 0;
    for (Mask m = s.up[x]; m; m &= m - 1) u |= bit(labeling.position[std::countr_zero(m)]);
    for (Mask m = s.down[x]; m; m &= m - 1) d |= bit(labeling.position[std::countr_zero(m)]);
    out.lattice.up[labeling.position[x]] = u;
    out.lattice.down[labeling.position[x]] = d;
  }
  return out;
}

Lattice to_lattice(const Small& s) {
  auto cov = s.upper_covers();
  std::vector<CoverPair> pairs;
  for (Element x = 0; x < s.n; ++x)
    for (Mask c = cov[x]; c; c &= c - 1) pairs.emplace_back(x, static_cast<Element>(std::countr_zero(c)));
  return lattice_from_covers(s.n, pairs);
}

Small singleton_small() {
  Small s;
  s.n = 1;
  s.up[0] = s.down[0] = 1;
  return s;
}

Small chain2_small() {
  Small s;
  s.n = 2;
  s.up[0] = 0b11;
  s.up[1] = 0b10;
  s.down[0] = 0b01;
  s.down[1] = 0b11;
  return s;
}

// Adds a new atom below the up-set generated by `generators`. Returns false
// when the result would not be a lattice: the up-set must contain, with any
// two members whose meet is not the bottom, that meet as well.
bool add_atom(const Small& k, Mask generators, Small& out) {
  Mask upset = 0;
  for (Mask g = generators; g; g &= g - 1) upset |= k.up[std::countr_zero(g)];
  for (Mask a = upset; a; a &= a - 1) {
    auto x = static_cast<Element>(std::countr_zero(a));
    for (Mask b = a & (a - 1); b; b &= b - 1) {
      Element m = k.meet(x, static_cast<Element>(std::countr_zero(b)));
      if (m != 0 && !(upset & bit(m))) return false;
    }
  }
  out.n = k.n + 1;
  out.up[0] = (Mask{1} << out.n) - 1;
  out.down[0] = 1;
  out.up[1] = bit(1) | (upset << 1);
  out.down[1] = 0b11;
  for (Element x = 1; x < k.n; ++x) {
    out.up[x + 1] = shift_up(k.up[x]);
    out.down[x + 1] = shift_up(k.down[x]) | ((upset & bit(x)) ? bit(1) : 0);
  }
  return true;
}

// Calls visit(mask) for every nonempty antichain of k without the bottom.
template <class Visit>
void for_each_antichain(const Small& k, Element x, Mask chosen, Mask blocked, Visit& visit) {
  if (x == k.n) {
    if (chosen) visit(chosen);
    return;
  }
  for_each_antichain(k, x + 1, chosen, blocked, visit);
  if (!(blocked & bit(x))) for_each_antichain(k, x + 1, chosen | bit(x), blocked | k.up[x] | k.down[x], visit);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view Family::name() const noexcept {
  switch (id_) {
    case FamilyId::all: return "all";
    case FamilyId::graded: return "graded";
    case FamilyId::modular: return "modular";
    case FamilyId::semimodular: return "semimodular";
    case FamilyId::distributive: return "distributive";
    case FamilyId::graded_even_rank: return "graded-even-rank";
  }
  return "?";
}

Family Family::from_name(std::string_view name) {
  for (auto id : {FamilyId::all, FamilyId::graded, FamilyId::modular, FamilyId::semimodular, FamilyId::distributive,
                  FamilyId::graded_even_rank})
    if (Family(id).name() == name) return Family(id);
  throw Error("UnknownFamily", "unknown lattice family '" + std::string(name) + "'");
}

std::span<const FamilyId> Family::standard() {
  static constexpr std::array<FamilyId, 5> ids{FamilyId::all, FamilyId::graded, FamilyId::modular,
                                               FamilyId::semimodular, FamilyId::distributive};
  return ids;
}

bool Family::contains(const Lattice& l) const {
  switch (id_) {
    case FamilyId::all: return true;
    case FamilyId::graded: return is_graded(l);
    case FamilyId::modular: return is_modular(l);
    case FamilyId::semimodular: return is_semimodular(l);
    case FamilyId::distributive: return is_distributive(l);
    case FamilyId::graded_even_rank: {
      auto r = rank_function(l);
      return r && r->height % 2 == 0;
    }
  }
  return false;
}

EnumLimits EnumLimits::from_env() {
  EnumLimits limits;
  for (auto& [id, cap] : limits.max_n) {
    std::string var = "LATWB_MAX_N_";
    for (char c : Family(id).name()) var.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
    if (const char* value = std::getenv(var.c_str())) {
      char* end = nullptr;
      unsigned long parsed = std::strtoul(value, &end, 10);
      if (end == value || *end != '\0') throw Error("InvalidEnvironment", var + " is not a nonnegative integer");
      cap = parsed;
    }
  }
  return limits;
}

struct LatticeEnumerator::State {
  // Superfamily levels (closed under atom removal), in canonical form.
  std::vector<std::vector<Small>> pool;
  std::map<std::size_t, std::vector<Lattice>> members;
};

LatticeEnumerator::LatticeEnumerator(Family family, EnumLimits limits)
    : family_(family), limits_(std::move(limits)), state_(std::make_unique<State>()) {
  state_->pool.push_back({});                    // n = 0 unused
  state_->pool.push_back({singleton_small()});   // n = 1
  state_->pool.push_back({chain2_small()});      // n = 2
}

LatticeEnumerator::~LatticeEnumerator() = default;
LatticeEnumerator::LatticeEnumerator(LatticeEnumerator&&) noexcept = default;
LatticeEnumerator& LatticeEnumerator::operator=(LatticeEnumerator&&) noexcept = default;

const std::vector<Lattice>& LatticeEnumerator::lattices(std::size_t n) {
  if (n == 0) throw Error("IndexOutOfRange", "lattices have at least one element");
  if (n > limits_.limit(family_.id()) || n >= kMaxSmall)
    throw Error("ResourceCap", "enumerating " + std::string(family_.name()) + " lattices of " + std::to_string(n) +
                                   " elements exceeds the configured cap of " +
                                   std::to_string(std::min(limits_.limit(family_.id()), kMaxSmall - 1)));
  if (auto it = state_->members.find(n); it != state_->members.end()) return it->second;

  const Prune prune = prune_for(family_.id());
  auto& pool = state_->pool;
  while (pool.size() <= n) {
    std::unordered_set<std::string> seen;
    std::vector<Keyed> level;
    Small candidate;
    const Small* parent = nullptr;
    auto visit = [&](Mask generators) {
      if (!add_atom(*parent, generators, candidate)) return;
      if (!passes(candidate, prune, false)) return;
      Keyed keyed = canonicalize(candidate);
      if (seen.insert(keyed.code).second) level.push_back(std::move(keyed));
    };
    for (const Small& p : pool.back()) {
      parent = &p;
      for_each_antichain(p, 1, 0, 0, visit);
    }
    std::sort(level.begin(), level.end(), [](const Keyed& a, const Keyed& b) { return a.code < b.code; });
    std::vector<Small> smalls;
    smalls.reserve(level.size());
    for (auto& k : level) smalls.push_back(k.lattice);
    pool.push_back(std::move(smalls));
  }

  // Pool entries are already canonical and sorted by code.
  std::vector<Lattice> result;
  for (const Small& s : pool[n]) {
    if (!passes(s, prune, true)) continue;
    Lattice l = to_lattice(s);
    if (family_.contains(l)) result.push_back(std::move(l));
  }
  return state_->members.emplace(n, std::move(result)).first->second;
}

std::vector<Lattice> enumerate(std::size_t n, const Family& family, const EnumLimits& limits) {
  LatticeEnumerator e(family, limits);
  return e.lattices(n);
}

CountTables count_tables(std::size_t big_n, LatticeEnumerator& enumerator) {
  const std::string family{enumerator.family().name()};
  CountTables tables{{family, CountKind::total, Provenance::enumerated, {}},
                     {family, CountKind::vi, Provenance::enumerated, {}},
                     {family, CountKind::piece, Provenance::enumerated, {}}};
  for (std::size_t n = 1; n <= big_n; ++n) {
    const auto& level = enumerator.lattices(n);
    std::size_t vi = 0, pieces = 0;
    for (const auto& l : level) {
      if (!is_vi(l)) continue;
      ++vi;
      if (is_piece(l)) ++pieces;
    }
    tables.total.values.emplace_back(static_cast<unsigned long>(level.size()));
    tables.vi.values.emplace_back(static_cast<unsigned long>(vi));
    tables.piece.values.emplace_back(static_cast<unsigned long>(pieces));
  }
  if (enumerator.family().decomposition_closed() && !(total_from_vi(tables.vi) == tables.total))
    throw Error("InvariantBroken", "enumerated totals disagree with the vi convolution for family " + family);
  return tables;
}

CountTables count_tables(std::size_t big_n, const Family& family, const EnumLimits& limits) {
  LatticeEnumerator e(family, limits);
  return count_tables(big_n, e);
}

ClassificationSummary classify_listing(std::span<const Lattice> lattices) {
  ClassificationSummary summary;
  for (const auto& l : lattices) {
    auto report = classify(l);
    ++summary.total;
    summary.graded += report.graded.holds;
    summary.modular += report.modular.holds;
    summary.semimodular += report.semimodular.holds;
    summary.distributive += report.distributive.holds;
    summary.vi += report.vertically_indecomposable.holds;
    summary.pieces += report.piece;
    summary.reports.push_back(std::move(report));
  }
  return summary;
}

}  // namespace latwb
