#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latwb/count_table.hpp"

namespace latwb {

// ---------------------------------------------------------------------------
// Exact rationals

/// Parses "22726/10000", "2.2726", "1e-6" or "2.5E+1" into an exact rational.
Rational parse_rational(const std::string& text);
/// Decimal expansion of x rounded toward -infinity (floor) or +infinity (ceil).
std::string decimal_floor(const Rational& x, unsigned places);
std::string decimal_ceil(const Rational& x, unsigned places);

/// Largest rational with the given denominator whose (N-1)-th power is at
/// most f(N); the exponential base obtained from vertical sums of N-element
/// lattices.
Rational simple_bound(const BigInt& f_n, std::size_t n, unsigned long denominator = 10000);

// ---------------------------------------------------------------------------
// Recurrences

enum class RecurrenceShape { vsum, v2sum, plain };

const char* to_string(RecurrenceShape s) noexcept;
RecurrenceShape recurrence_shape_from_string(const std::string& s);

/// Lower-bound sequence: f(n) = initial[n-1] for n <= initial.size(), and
/// f(n) = sum_i coeffs[i-1] * f(n-i) beyond, with f(k) = 0 for k <= 0. The
/// homogeneous relation also holds for every n >= homogeneous_from.
struct Recurrence {
  RecurrenceShape shape = RecurrenceShape::plain;
  std::vector<BigInt> coeffs;
  std::vector<BigInt> initial;
  std::size_t homogeneous_from = 1;
  std::string source;         // name of the count table it was built from
  std::size_t source_n = 0;   // the table prefix length N that was used

  std::size_t order() const noexcept { return coeffs.size(); }
  /// Throws Error("InvalidRecurrence") on negative or all-zero coefficients
  /// or an inconsistent homogeneous_from.
  void validate() const;
};

/// Vertical-sum recurrence of order N-1 with a_i = vi(i+1); initial values
/// are the exact convolution up to N.
Recurrence build_recurrence_vsum(const CountTable& vi, std::size_t big_n);

/// Vertical-2-sum recurrence from piece counts: lag j = k-4 carries pc(k),
/// order N-4; initial values f(n) = pc(n) for n <= 6 and
/// pc(n) + sum_{k=6}^{n-1} pc(k) f(n-k+4) up to N.
Recurrence build_recurrence_v2sum(const CountTable& pieces, std::size_t big_n);

/// Streaming exact evaluation; keeps only the last `order` values.
class ExactSequence {
 public:
  explicit ExactSequence(const Recurrence& rec);
  /// Advances to the next index and returns its value.
  const BigInt& next();
  std::size_t index() const noexcept { return index_; }

 private:
  const Recurrence& rec_;
  std::vector<BigInt> ring_;
  std::size_t index_ = 0;
  BigInt scratch_;
};

/// Exact value m * 2^exponent.
struct Dyadic {
  BigInt mantissa;
  long exponent = 0;

  /// Exact comparison with an integer.
  int compare(const BigInt& value) const;
  std::string to_string(int digits = 12) const;
};

/// Streaming fixed-precision evaluation with rounding toward zero, so each
/// value is a lower bound on the exact sequence.
class LowerSequence {
 public:
  /// With `base` = c, current_at_least_power() compares against c^index.
  explicit LowerSequence(const Recurrence& rec, long precision_bits = 128,
                         const std::optional<Rational>& base = std::nullopt);
  ~LowerSequence();
  LowerSequence(const LowerSequence&) = delete;
  LowerSequence& operator=(const LowerSequence&) = delete;

  void next();
  std::size_t index() const noexcept { return index_; }
  Dyadic current() const;
  /// True when the current lower bound is at least c^index, with c^index
  /// rounded upward. Requires a base.
  bool current_at_least_power() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t index_ = 0;
};

enum class EvalMode { exact, rigorous_lower };

struct SequenceValues {
  std::vector<BigInt> exact;       // filled in exact mode
  std::vector<Dyadic> lower;       // filled in rigorous-lower mode
};

/// Values f(1..n_max). Throws Error("ResourceCap") above LATWB_MAX_EVAL
/// (default 20000).
SequenceValues eval_sequence(const Recurrence& rec, std::size_t n_max, EvalMode mode, long precision_bits = 128);

// ---------------------------------------------------------------------------
// Dominant root

/// Exact bracket [lo, hi] of the positive root of the auxiliary polynomial
/// x^d - sum a_i x^{d-i}. Signs are those of the polynomial at the ends;
/// both are zero when the root was hit exactly (lo == hi).
struct RootBracket {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;

  Rational width() const { return hi - lo; }
};

/// Sign of x^d - sum a_i x^{d-i} at x, evaluated exactly.
int auxiliary_sign(const std::vector<BigInt>& coeffs, const Rational& x);
/// q^d * p(c) for c = p/q in lowest terms: an integer with the sign of p(c).
BigInt auxiliary_scaled(const std::vector<BigInt>& coeffs, const Rational& c);

/// Bisection from [1, 1 + sum a_i] until hi - lo <= tol.
RootBracket dominant_root(const Recurrence& rec, const Rational& tol);

// ---------------------------------------------------------------------------
// Certificates

/// Exact evidence that f(n) >= c^n for every n >= window_start: the
/// auxiliary polynomial is nonpositive at c and `order` consecutive values
/// starting at window_start satisfy f(n) * q^n >= p^n.
struct BoundCertificate {
  Recurrence recurrence;
  Rational c;
  BigInt poly_value;               // q^d * p(c), must be <= 0
  std::size_t window_start = 0;
  std::vector<BigInt> window;      // f(window_start .. window_start + d - 1)
};

struct CertifyOptions {
  std::size_t search_cap = 200000;          // largest admissible window_start
  std::optional<std::size_t> pinned_start;  // check only this window
  long precision_bits = 128;
};

/// Finds the first window the rigorous-lower scan accepts and confirms it
/// exactly. Throws Error("PolynomialCheckFailed") when p(c) > 0 and
/// Error("WindowNotFound") when no window starts at or below the cap.
BoundCertificate certify(const Recurrence& rec, const Rational& c, const CertifyOptions& options = {});

/// Recomputes the window from the recurrence and rechecks everything.
/// Throws Error("MalformedCertificate") when the certificate is structurally
/// inconsistent; returns false when a check fails.
bool verify_certificate(const BoundCertificate& cert);

}  // namespace latwb
