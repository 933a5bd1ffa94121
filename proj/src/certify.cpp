#include <numeric>
#include <optional>

#include "latwb/bounds.hpp"

namespace latwb {

// ---------------------------------------------------------------------------
// Dominant root

BigInt auxiliary_scaled(const std::vector<BigInt>& coeffs, const Rational& c) {
  // Homogeneous Horner: sum_k b_k p^{d-k} q^k with b_0 = 1, b_k = -a_k.
  const BigInt& p = c.get_num();
  const BigInt& q = c.get_den();
  BigInt acc = 1;
  BigInt q_power = 1;
  for (const BigInt& a : coeffs) {
    q_power *= q;
    acc *= p;
    acc -= a * q_power;
  }
  return acc;
}

int auxiliary_sign(const std::vector<BigInt>& coeffs, const Rational& x) {
  return sgn(auxiliary_scaled(coeffs, x));
}

RootBracket dominant_root(const Recurrence& rec, const Rational& tol) {
  rec.validate();
  if (tol <= 0) throw Error("PreconditionViolated", "tolerance must be positive");
  BigInt sum = std::accumulate(rec.coeffs.begin(), rec.coeffs.end(), BigInt(0));
  RootBracket b{Rational(1), Rational(1 + sum), 0, 0};
  b.sign_lo = auxiliary_sign(rec.coeffs, b.lo);
  if (b.sign_lo == 0) {
    b.hi = b.lo;
    return b;
  }
  b.sign_hi = auxiliary_sign(rec.coeffs, b.hi);
  if (b.sign_lo > 0 || b.sign_hi <= 0) throw Error("InvariantBroken", "root is not bracketed by [1, 1 + sum a]");
  while (b.width() > tol) {
    Rational mid = (b.lo + b.hi) / 2;
    mid.canonicalize();
    const int s = auxiliary_sign(rec.coeffs, mid);
    if (s == 0) return RootBracket{mid, mid, 0, 0};
    if (s < 0)
      b.lo = mid;
    else
      b.hi = mid;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

std::size_t coefficient_gcd_lags(const std::vector<BigInt>& coeffs) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) g = std::gcd(g, i + 1);
  return g;
}

BigInt power(const BigInt& base, std::size_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

// Checks f(n) q^n >= p^n for the d values starting at `start`, streaming the
// exact sequence from its current position.
bool exact_window_holds(ExactSequence& seq, const Rational& c, std::size_t start, std::size_t d,
                        std::vector<BigInt>& window) {
  while (seq.index() + 1 < start) seq.next();
  const BigInt& p = c.get_num();
  const BigInt& q = c.get_den();
  BigInt p_pow = power(p, start);
  BigInt q_pow = power(q, start);
  window.clear();
  bool ok = true;
  for (std::size_t k = 0; k < d; ++k) {
    const BigInt& f = seq.next();
    window.push_back(f);
    if (ok && f * q_pow < p_pow) ok = false;
    p_pow *= p;
    q_pow *= q;
  }
  return ok;
}

}  // namespace

BoundCertificate certify(const Recurrence& rec, const Rational& c, const CertifyOptions& options) {
  rec.validate();
  if (c <= 0) throw Error("PreconditionViolated", "base must be positive");
  const std::size_t d = rec.order();
  const std::size_t min_start = rec.homogeneous_from > d ? rec.homogeneous_from - d : 1;

  BoundCertificate cert{rec, c, auxiliary_scaled(rec.coeffs, c), 0, {}};
  if (cert.poly_value > 0)
    throw Error("PolynomialCheckFailed", "auxiliary polynomial is positive at c = " + c.get_str() +
                                             ", so c exceeds the dominant root");

  if (options.pinned_start) {
    const std::size_t start = *options.pinned_start;
    if (start < min_start)
      throw Error("WindowNotFound", "pinned window start " + std::to_string(start) + " is below " +
                                        std::to_string(min_start));
    ExactSequence seq(rec);
    if (!exact_window_holds(seq, c, start, d, cert.window))
      throw Error("WindowNotFound", "the window at " + std::to_string(start) + " does not dominate c^n");
    cert.window_start = start;
    return cert;
  }

  // The rigorous scan proposes; the exact stream confirms.
  LowerSequence lower(rec, options.precision_bits, c);
  std::optional<ExactSequence> exact;
  exact.emplace(rec);
  std::size_t run = 0;
  const std::size_t last_index = options.search_cap + d - 1;
  while (lower.index() < last_index) {
    lower.next();
    run = lower.current_at_least_power() ? run + 1 : 0;
    if (run < d) continue;
    const std::size_t start = lower.index() - d + 1;
    if (start < min_start) continue;
    // Restart the exact stream when it has already passed this start.
    if (start < exact->index() + 1) exact.emplace(rec);
    if (exact_window_holds(*exact, c, start, d, cert.window)) {
      cert.window_start = start;
      return cert;
    }
    run = 0;
  }

  std::string msg = "no window of " + std::to_string(d) + " consecutive values with f(n) >= c^n starts at or below " +
                    std::to_string(options.search_cap);
  if (const std::size_t g = coefficient_gcd_lags(rec.coeffs); g > 1)
    msg += "; the nonzero lags share the factor " + std::to_string(g) + ", so the sequence may vanish periodically";
  throw Error("WindowNotFound", msg);
}

bool verify_certificate(const BoundCertificate& cert) {
  const Recurrence& rec = cert.recurrence;
  try {
    rec.validate();
  } catch (const Error& e) {
    throw Error("MalformedCertificate", e.what());
  }
  const std::size_t d = rec.order();
  if (cert.c <= 0) throw Error("MalformedCertificate", "base must be positive");
  if (cert.window.size() != d) throw Error("MalformedCertificate", "window length differs from the order");
  if (cert.window_start < 1 || cert.window_start + d < rec.homogeneous_from)
    throw Error("MalformedCertificate", "window does not reach the homogeneous range");

  if (auxiliary_scaled(rec.coeffs, cert.c) != cert.poly_value || cert.poly_value > 0) return false;

  ExactSequence seq(rec);
  std::vector<BigInt> recomputed;
  const bool holds = exact_window_holds(seq, cert.c, cert.window_start, d, recomputed);
  return holds && recomputed == cert.window;
}

}  // namespace latwb
