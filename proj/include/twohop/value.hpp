#pragma once

// Exact state-value arithmetic.
//
// Every value that crosses the wire (broadcast states, relayed states,
// initial conditions) is an exact rational canonicalized to 12 significant
// decimal digits, round-half-even.  Averaging computes the exact rational
// mean of the inputs and re-canonicalizes.  Two consequences the detection
// logic relies on:
//   * a verifier recomputing an honest sender's update gets a bit-identical
//     result, so equality checks never produce false alarms;
//   * denominators stay bounded, so long simulations do not accumulate
//     arbitrarily large rationals.
// The decimal rendering of a Value is exact and round-trips through parse.

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twohop {

namespace detail {

// deque: growing the cache must not invalidate references already handed out
inline const mpz_class& pow10(unsigned e) {
  static thread_local std::deque<mpz_class> cache{mpz_class(1)};
  while (cache.size() <= e) {
    cache.push_back(cache.back() * 10);
  }
  return cache[e];
}

// floor(log10(n/d)) for n,d > 0.
inline long floor_log10(const mpz_class& n, const mpz_class& d) {
  long guess = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  // sizeinbase over-reports by at most one digit; walk to the exact exponent.
  auto cmp_pow = [&](long e) {
    // compare n/d with 10^e
    if (e >= 0) return cmp(n, d * pow10(static_cast<unsigned>(e)));
    return cmp(n * pow10(static_cast<unsigned>(-e)), d);
  };
  while (cmp_pow(guess) < 0) --guess;
  while (cmp_pow(guess + 1) >= 0) ++guess;
  return guess;
}

}  // namespace detail

class Value {
 public:
  static constexpr int kSignificantDigits = 12;

  Value() : q_(0) {}

  static Value from_int(long v) {
    Value r;
    r.q_ = v;
    return r;
  }

  // Exact rational input, canonicalized.
  static Value from_mpq(const mpq_class& q) {
    Value r;
    r.q_ = quantize(q);
    return r;
  }

  static Value from_ratio(long num, unsigned long den) {
    if (den == 0) throw std::invalid_argument("Value: zero denominator");
    mpq_class q(mpz_class(num), mpz_class(den));
    q.canonicalize();
    return from_mpq(q);
  }

  // Parses "[+-]ddd[.ddd][(e|E)[+-]ddd]".  Exact; the result is canonical.
  static Value from_decimal(std::string_view s);

  // Round-half-even to kSignificantDigits significant decimal digits.
  static mpq_class quantize(const mpq_class& x);

  const mpq_class& rat() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }

  // Exact decimal rendering; positional for moderate magnitudes, scientific
  // outside [1e-5, 1e15).
  std::string str() const;

  friend bool operator==(const Value& a, const Value& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  mpq_class q_;  // invariant: q_ == quantize(q_)
};

inline mpq_class Value::quantize(const mpq_class& x) {
  int s = sgn(x);
  if (s == 0) return mpq_class(0);
  const mpz_class n = s > 0 ? x.get_num() : mpz_class(-x.get_num());
  const mpz_class& d = x.get_den();

  const long e = detail::floor_log10(n, d);
  const long shift = kSignificantDigits - 1 - e;

  // m = round_half_even(|x| * 10^shift), an integer with 12 digits.
  mpz_class num = n, den = d;
  if (shift >= 0) {
    num *= detail::pow10(static_cast<unsigned>(shift));
  } else {
    den *= detail::pow10(static_cast<unsigned>(-shift));
  }
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(rem * 2, den);
  if (half > 0 || (half == 0 && mpz_odd_p(quo.get_mpz_t()))) ++quo;

  mpq_class out;
  if (shift >= 0) {
    out = mpq_class(quo, detail::pow10(static_cast<unsigned>(shift)));
  } else {
    out = mpq_class(quo * detail::pow10(static_cast<unsigned>(-shift)), 1);
  }
  out.canonicalize();
  if (s < 0) out = -out;
  return out;
}

inline Value Value::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Value: empty decimal literal");
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  mpz_class mant = 0;
  long frac_digits = 0;
  bool any_digit = false, in_frac = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      mant = mant * 10 + (c - '0');
      if (in_frac) ++frac_digits;
      any_digit = true;
    } else if (c == '.') {
      if (in_frac) throw std::invalid_argument("Value: bad decimal literal");
      in_frac = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw std::invalid_argument("Value: bad decimal literal");
    }
  }
  if (!any_digit) throw std::invalid_argument("Value: bad decimal literal");
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("Value: bad exponent");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Value: bad exponent");
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 100000) throw std::invalid_argument("Value: exponent out of range");
    }
    if (eneg) exp10 = -exp10;
  }
  const long net = exp10 - frac_digits;
  mpq_class q;
  if (net >= 0) {
    q = mpq_class(mant * detail::pow10(static_cast<unsigned>(net)), 1);
  } else {
    q = mpq_class(mant, detail::pow10(static_cast<unsigned>(-net)));
  }
  q.canonicalize();
  if (neg) q = -q;
  return from_mpq(q);
}

inline std::string Value::str() const {
  if (is_zero()) return "0";
  const bool neg = sgn(q_) < 0;
  const mpz_class n = neg ? mpz_class(-q_.get_num()) : mpz_class(q_.get_num());
  const mpz_class& d = q_.get_den();

  // d divides a power of ten (quantization invariant): d = 2^a 5^b.
  mpz_class tmp = d;
  unsigned a = 0, b = 0;
  while (mpz_divisible_ui_p(tmp.get_mpz_t(), 2)) {
    tmp /= 2;
    ++a;
  }
  while (mpz_divisible_ui_p(tmp.get_mpz_t(), 5)) {
    tmp /= 5;
    ++b;
  }
  if (tmp != 1) throw std::logic_error("Value: non-decimal denominator");
  const unsigned k = a > b ? a : b;
  const mpz_class digits_z = n * detail::pow10(k) / d;
  std::string digits = digits_z.get_str();

  const long e = detail::floor_log10(n, d);
  std::string body;
  if (e >= -5 && e < 15) {
    if (k == 0) {
      body = digits;
    } else if (digits.size() > k) {
      body = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    } else {
      body = "0." + std::string(k - digits.size(), '0') + digits;
    }
    // trim trailing zeros of a fractional part
    if (body.find('.') != std::string::npos) {
      while (body.back() == '0') body.pop_back();
      if (body.back() == '.') body.pop_back();
    }
  } else {
    std::string m = digits;
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    body = m.substr(0, 1);
    if (m.size() > 1) body += "." + m.substr(1);
    body += "e" + std::to_string(e);
  }
  return neg ? "-" + body : body;
}

// Exact mean of the given values (ascending caller-defined order), then
// canonical quantization.  Empty input is the caller's error.
inline Value quantized_mean(std::span<const Value> xs) {
  if (xs.empty()) throw std::invalid_argument("quantized_mean: empty input");
  mpq_class sum(0);
  for (const Value& v : xs) sum += v.rat();
  sum /= static_cast<unsigned long>(xs.size());
  return Value::from_mpq(sum);
}

// |a - b| as an exact rational (for spread / tolerance comparisons).
inline mpq_class abs_diff(const Value& a, const Value& b) {
  mpq_class d = a.rat() - b.rat();
  if (sgn(d) < 0) d = -d;
  return d;
}

}  // namespace twohop
