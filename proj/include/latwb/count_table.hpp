#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "latwb/error.hpp"

namespace latwb {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class CountKind { total, vi, piece };
enum class Provenance { enumerated, paper, external_file, derived };

const char* to_string(CountKind k) noexcept;
const char* to_string(Provenance p) noexcept;
CountKind count_kind_from_string(const std::string& s);

/// Integer sequence f(1..N) for one lattice family and count kind.
struct CountTable {
  std::string family;
  CountKind kind = CountKind::total;
  Provenance provenance = Provenance::derived;
  std::vector<BigInt> values;  // values[i] holds f(i + 1)

  std::size_t size() const noexcept { return values.size(); }
  /// 1-based access; throws Error("IndexOutOfRange").
  const BigInt& at(std::size_t n) const;

  bool operator==(const CountTable& other) const { return values == other.values; }
};

/// Totals from vi counts by f(n) = sum_{k=2..n} f_vi(k) f(n-k+1), f(1) = 1.
CountTable total_from_vi(const CountTable& vi);

/// Inverse of total_from_vi. Throws Error("NegativeDeconvolution") when no
/// nonnegative vi table maps to `total`, and Error("InvalidTable") unless
/// total(1) = 1.
CountTable vi_from_total(const CountTable& total);

}  // namespace latwb
