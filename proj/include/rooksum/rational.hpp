#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rooksum {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word are
/// kept inline; anything larger is held in a shared immutable mpq_class. The
/// representation is canonical, so equality is a field-by-field compare.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {  // NOLINT(implicit)
    if (value == kMinSmall - 1) *this = from_mpq(mpq_class(static_cast<long>(value)));
  }
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(num, den);
  }
  explicit Rational(const mpq_class& q) { *this = from_mpq(q); }

  /// Accepts "a", "-a" or "a/b".
  static Rational parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return from_mpq(q);
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), static_cast<long>(num_), static_cast<unsigned long>(den_));
    return q;
  }
  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

  /// Total bit length of numerator and denominator; used as a pivot-size proxy.
  std::size_t bit_length() const {
    if (big_) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
    auto bits = [](std::uint64_t v) { return v == 0 ? 1 : 64 - static_cast<std::size_t>(__builtin_clzll(v)); };
    return bits(num_ < 0 ? static_cast<std::uint64_t>(-num_) : static_cast<std::uint64_t>(num_)) +
           bits(static_cast<std::uint64_t>(den_));
  }

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  /// Always "a/b", including "a/1".
  std::string to_fraction_string() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r >= kMinSmall) return Rational(Small{}, r, 1);
      }
      return from_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a) {
    if (!a.big_) return Rational(Small{}, -a.num_, a.den_);
    return from_mpq(-*a.big_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r >= kMinSmall) return Rational(Small{}, r, 1);
      }
      return from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_) {
      return from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    return from_mpq(a.to_mpq() / b.to_mpq());
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  /// *this += a * b, with an allocation-free path for word-sized integers.
  void add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
      std::int64_t p, r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &r) &&
          r >= kMinSmall) {
        num_ = r;
        return;
      }
    }
    *this = *this + a * b;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

 private:
  static constexpr std::int64_t kMinSmall = INT64_MIN + 1;
  struct Small {};
  Rational(Small, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) z = -z;
    return z;
  }

  static Rational from_i128(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational(Small{}, 0, 1);
    unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd_u128(un, static_cast<unsigned __int128>(den));
    if (g != 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
    if (num >= kMinSmall && num <= INT64_MAX && den <= INT64_MAX) {
      return Rational(Small{}, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return from_mpq_canonical(std::move(q));
  }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    return from_mpq_canonical(std::move(q));
  }
  static Rational from_mpq_canonical(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
      long nv = n.get_si();
      if (nv >= kMinSmall) return Rational(Small{}, nv, d.get_si());
    }
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace rooksum
