#include <algorithm>
#include <cctype>
#include <cstdlib>

#include <mpfr.h>

#include "latwb/bounds.hpp"

namespace latwb {

// ---------------------------------------------------------------------------
// Rationals

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw Error("SyntaxError", "not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0 || den == 0)
      return fail();
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    scale += std::strtol(text.substr(start, i - start).c_str(), nullptr, 10);
  }
  if (i != text.size()) return fail();

  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale < 0 ? Rational(num, power) : Rational(num * power, 1);
  r.canonicalize();
  return r;
}

namespace {

std::string format_scaled(const BigInt& scaled, unsigned places) {
  BigInt magnitude = abs(scaled);
  std::string digits = magnitude.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = scaled < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

BigInt power_of_ten(unsigned places) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, places);
  return p;
}

}  // namespace

std::string decimal_floor(const Rational& x, unsigned places) {
  BigInt scaled;
  BigInt num = x.get_num() * power_of_ten(places);
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return format_scaled(scaled, places);
}

std::string decimal_ceil(const Rational& x, unsigned places) {
  BigInt scaled;
  BigInt num = x.get_num() * power_of_ten(places);
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return format_scaled(scaled, places);
}

Rational simple_bound(const BigInt& f_n, std::size_t n, unsigned long denominator) {
  if (f_n < 1 || n < 2 || denominator == 0)
    throw Error("PreconditionViolated", "simple bound needs f(N) >= 1, N >= 2 and a positive denominator");
  const auto exponent = static_cast<unsigned long>(n - 1);
  BigInt scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), denominator, exponent);
  scaled *= f_n;
  BigInt root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), exponent);  // floor of the real root
  Rational c(root, denominator);
  c.canonicalize();
  return c;
}

// ---------------------------------------------------------------------------
// Recurrences

const char* to_string(RecurrenceShape s) noexcept {
  switch (s) {
    case RecurrenceShape::vsum: return "vsum";
    case RecurrenceShape::v2sum: return "v2sum";
    case RecurrenceShape::plain: return "plain";
  }
  return "?";
}

RecurrenceShape recurrence_shape_from_string(const std::string& s) {
  if (s == "vsum") return RecurrenceShape::vsum;
  if (s == "v2sum") return RecurrenceShape::v2sum;
  if (s == "plain") return RecurrenceShape::plain;
  throw Error("UnknownShape", "unknown recurrence shape '" + s + "'");
}

void Recurrence::validate() const {
  if (coeffs.empty()) throw Error("InvalidRecurrence", "recurrence has order zero");
  if (std::any_of(coeffs.begin(), coeffs.end(), [](const BigInt& a) { return a < 0; }))
    throw Error("InvalidRecurrence", "negative coefficient");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& a) { return a == 0; }))
    throw Error("InvalidRecurrence", "all coefficients are zero");
  if (homogeneous_from < 1 || homogeneous_from > initial.size() + 1)
    throw Error("InvalidRecurrence", "homogeneous_from must lie in 1..initial+1");
}

Recurrence build_recurrence_vsum(const CountTable& vi, std::size_t big_n) {
  if (big_n < 2 || vi.size() < big_n)
    throw Error("PreconditionViolated", "vsum recurrence needs N >= 2 and vi counts through N");
  Recurrence rec;
  rec.shape = RecurrenceShape::vsum;
  rec.source = vi.family + "-" + to_string(vi.kind);
  rec.source_n = big_n;
  for (std::size_t i = 1; i < big_n; ++i) rec.coeffs.push_back(vi.at(i + 1));
  rec.initial.assign(big_n, 0);
  rec.initial[0] = 1;
  for (std::size_t n = 2; n <= big_n; ++n)
    for (std::size_t k = 2; k <= n; ++k) rec.initial[n - 1] += vi.at(k) * rec.initial[n - k];
  rec.homogeneous_from = 2;
  return rec;
}

Recurrence build_recurrence_v2sum(const CountTable& pieces, std::size_t big_n) {
  if (big_n < 6 || pieces.size() < big_n)
    throw Error("PreconditionViolated", "v2sum recurrence needs N >= 6 and piece counts through N");
  for (std::size_t n = 1; n <= 5; ++n)
    if (pieces.at(n) != 0) throw Error("PreconditionViolated", "piece counts must vanish below six elements");
  Recurrence rec;
  rec.shape = RecurrenceShape::v2sum;
  rec.source = pieces.family + "-" + to_string(pieces.kind);
  rec.source_n = big_n;
  for (std::size_t lag = 1; lag + 4 <= big_n; ++lag) rec.coeffs.push_back(pieces.at(lag + 4));
  rec.initial.assign(big_n, 0);
  for (std::size_t n = 1; n <= big_n; ++n) {
    BigInt value = pieces.at(n);
    for (std::size_t k = 6; k + 1 <= n && n >= 7; ++k) value += pieces.at(k) * rec.initial[n - k + 4 - 1];
    rec.initial[n - 1] = value;
  }
  rec.homogeneous_from = big_n + 1;
  return rec;
}

ExactSequence::ExactSequence(const Recurrence& rec) : rec_(rec), ring_(std::max<std::size_t>(rec.order(), 1)) {
  if (rec.order() == 0) throw Error("InvalidRecurrence", "recurrence has order zero");
}

const BigInt& ExactSequence::next() {
  const std::size_t n = ++index_;
  const std::size_t d = ring_.size();
  BigInt& slot = ring_[n % d];
  if (n <= rec_.initial.size()) {
    slot = rec_.initial[n - 1];
    return slot;
  }
  scratch_ = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    const BigInt& a = rec_.coeffs[i - 1];
    if (a == 0) continue;
    const BigInt& prev = ring_[(n + d - i) % d];
    if (a.fits_ulong_p())
      mpz_addmul_ui(scratch_.get_mpz_t(), prev.get_mpz_t(), a.get_ui());
    else
      mpz_addmul(scratch_.get_mpz_t(), prev.get_mpz_t(), a.get_mpz_t());
  }
  mpz_swap(slot.get_mpz_t(), scratch_.get_mpz_t());
  return slot;
}

int Dyadic::compare(const BigInt& value) const {
  BigInt lhs = mantissa, rhs = value;
  if (exponent >= 0)
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  else
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return cmp(lhs, rhs);
}

std::string Dyadic::to_string(int digits) const {
  mpfr_t v;
  mpfr_init2(v, static_cast<mpfr_prec_t>(std::max<std::size_t>(mpz_sizeinbase(mantissa.get_mpz_t(), 2), 2)));
  mpfr_set_z_2exp(v, mantissa.get_mpz_t(), exponent, MPFR_RNDZ);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*RDe", digits, v);
  std::string out(text);
  mpfr_free_str(text);
  mpfr_clear(v);
  return out;
}

namespace {

// RAII holder for one MPFR value.
class Float {
 public:
  explicit Float(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  ~Float() { mpfr_clear(value_); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;
  Float(Float&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

struct LowerSequence::Impl {
  const Recurrence& rec;
  mpfr_prec_t precision;
  std::vector<Float> ring;
  Float acc;
  Float term;
  std::optional<Float> base_up;   // c rounded up
  std::optional<Float> power_up;  // c^index rounded up

  Impl(const Recurrence& r, mpfr_prec_t p) : rec(r), precision(p), acc(p), term(p) {
    for (std::size_t i = 0; i < std::max<std::size_t>(r.order(), 1); ++i) ring.emplace_back(p);
  }
};

LowerSequence::LowerSequence(const Recurrence& rec, long precision_bits, const std::optional<Rational>& base)
    : impl_(std::make_unique<Impl>(rec, static_cast<mpfr_prec_t>(precision_bits))) {
  if (rec.order() == 0) throw Error("InvalidRecurrence", "recurrence has order zero");
  if (base) {
    impl_->base_up.emplace(impl_->precision);
    impl_->power_up.emplace(impl_->precision);
    mpfr_set_q(impl_->base_up->get(), base->get_mpq_t(), MPFR_RNDU);
    mpfr_set_ui(impl_->power_up->get(), 1, MPFR_RNDU);
  }
}

LowerSequence::~LowerSequence() = default;

void LowerSequence::next() {
  Impl& s = *impl_;
  const std::size_t n = ++index_;
  const std::size_t d = s.ring.size();
  mpfr_ptr slot = s.ring[n % d].get();
  if (s.power_up) mpfr_mul(s.power_up->get(), s.power_up->get(), s.base_up->get(), MPFR_RNDU);
  if (n <= s.rec.initial.size()) {
    mpfr_set_z(slot, s.rec.initial[n - 1].get_mpz_t(), MPFR_RNDZ);
    return;
  }
  mpfr_set_zero(s.acc.get(), 1);
  for (std::size_t i = 1; i <= d; ++i) {
    const BigInt& a = s.rec.coeffs[i - 1];
    if (a == 0) continue;
    mpfr_srcptr prev = s.ring[(n + d - i) % d].get();
    if (a.fits_ulong_p()) {
      mpfr_mul_ui(s.term.get(), prev, a.get_ui(), MPFR_RNDZ);
    } else {
      mpfr_set_z(s.term.get(), a.get_mpz_t(), MPFR_RNDZ);
      mpfr_mul(s.term.get(), s.term.get(), prev, MPFR_RNDZ);
    }
    mpfr_add(s.acc.get(), s.acc.get(), s.term.get(), MPFR_RNDZ);
  }
  mpfr_set(slot, s.acc.get(), MPFR_RNDZ);
}

Dyadic LowerSequence::current() const {
  Dyadic d;
  if (index_ == 0) return d;
  mpfr_srcptr v = impl_->ring[index_ % impl_->ring.size()].get();
  if (mpfr_zero_p(v)) return d;
  d.exponent = mpfr_get_z_2exp(d.mantissa.get_mpz_t(), v);
  return d;
}

bool LowerSequence::current_at_least_power() const {
  if (!impl_->power_up) throw Error("PreconditionViolated", "lower sequence has no base");
  mpfr_srcptr v = impl_->ring[index_ % impl_->ring.size()].get();
  return mpfr_cmp(v, impl_->power_up->get()) >= 0;
}

SequenceValues eval_sequence(const Recurrence& rec, std::size_t n_max, EvalMode mode, long precision_bits) {
  std::size_t cap = 20000;
  if (const char* env = std::getenv("LATWB_MAX_EVAL")) cap = std::strtoul(env, nullptr, 10);
  if (n_max > cap)
    throw Error("ResourceCap", "evaluating " + std::to_string(n_max) + " terms exceeds LATWB_MAX_EVAL=" +
                                   std::to_string(cap));
  SequenceValues out;
  if (mode == EvalMode::exact) {
    ExactSequence seq(rec);
    for (std::size_t n = 1; n <= n_max; ++n) out.exact.push_back(seq.next());
  } else {
    LowerSequence seq(rec, precision_bits);
    for (std::size_t n = 1; n <= n_max; ++n) {
      seq.next();
      out.lower.push_back(seq.current());
    }
  }
  return out;
}

}  // namespace latwb
