#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "rooksum/rational.hpp"

namespace rooksum {

/// Field context interface. Scalars are plain values; every operation goes
/// through the context so that 𝔽_p scalars can stay a bare machine word.
template <class F>
concept ExactField = requires(const F& f, typename F::value_type& acc, const typename F::value_type& a,
                              std::int64_t i, std::string_view s) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(i) } -> std::same_as<typename F::value_type>;
  { f.from_rational(Rational{}) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.div(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  f.add_mul(acc, a, a);
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.to_fraction_string(a) } -> std::convertible_to<std::string>;
  { f.parse(s) } -> std::same_as<typename F::value_type>;
};

class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return {}; }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t v) const { return Rational(v); }
  value_type from_rational(const Rational& q) const { return q; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return Rational(1) / a; }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const { acc.add_mul(a, b); }

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string to_fraction_string(const value_type& a) const { return a.to_fraction_string(); }
  value_type parse(std::string_view s) const { return Rational::parse(s); }

  /// Cost proxy for choosing elimination pivots.
  std::size_t size_of(const value_type& a) const { return a.bit_length(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// 𝔽_p for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_mpz(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_rational(const Rational& q) const {
    value_type den = from_mpz(q.denominator());
    if (den == 0) throw std::domain_error("denominator is divisible by the modulus");
    return div(from_mpz(q.numerator()), den);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  void add_mul(value_type& acc, value_type a, value_type b) const {
    acc = static_cast<value_type>((acc + static_cast<std::uint64_t>(a) * b) % p_);
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string to_fraction_string(value_type a) const { return std::to_string(a) + "/1"; }
  value_type parse(std::string_view s) const { return from_rational(Rational::parse(s)); }
  std::size_t size_of(value_type) const { return 1; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

/// Runtime field selector: modulus 0 means ℚ.
struct FieldSpec {
  std::uint32_t modulus = 0;

  /// Accepts "Q" or "Fp:<prime>".
  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return {};
    if (text.substr(0, 3) == "Fp:") {
      std::string digits(text.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
        throw std::invalid_argument("bad field '" + std::string(text) + "'");
      }
      std::uint64_t p = std::stoull(digits);
      if (p >= (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("field modulus " + digits + " is not a prime below 2^31");
      }
      return {static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("bad field '" + std::string(text) + "' (expected Q or Fp:<p>)");
  }
  std::string to_string() const { return modulus == 0 ? "Q" : "Fp:" + std::to_string(modulus); }
};

/// Calls fn with the concrete field context named by the FieldSpec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.modulus == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField(spec.modulus));
}

/// True when every integer 1..n is invertible in the field.
template <ExactField F>
bool factorial_invertible(const F& field, int n) {
  std::uint64_t p = field.characteristic();
  return p == 0 || p > static_cast<std::uint64_t>(n);
}

}  // namespace rooksum
