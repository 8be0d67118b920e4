#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/span.hpp"

namespace rooksum {

/// Minimal polynomial of a in k[S_n], as monic coefficients c_0, ..., c_d
/// (lowest degree first, c_d = 1), found from the first linear dependency among
/// 1, a, a^2, ...
template <ExactField F>
std::vector<typename F::value_type> element_min_poly(const AlgebraElement<F>& a) {
  const F& f = a.field();
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  DependencyFinder<F> finder(G.order(), f);
  AlgebraElement<F> power = AlgebraElement<F>::identity(a.degree(), f);
  while (true) {
    if (auto dep = finder.push(power.to_dense())) return *dep;
    power = power * a;
  }
}

/// Integer root with its multiplicity.
struct RootMultiplicity {
  std::int64_t root;
  int multiplicity;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

namespace detail {

inline Rational eval(const std::vector<Rational>& c, std::int64_t x) {
  Rational v;
  for (std::size_t i = c.size(); i-- > 0;) v = v * Rational(x) + c[i];
  return v;
}

/// Divides by (x - r); the remainder must be zero.
inline std::vector<Rational> deflate(const std::vector<Rational>& c, std::int64_t r) {
  std::size_t d = c.size() - 1;
  std::vector<Rational> q(d);
  Rational carry;
  for (std::size_t i = d; i-- > 0;) {
    carry = c[i + 1] + carry * Rational(r);
    q[i] = carry;
  }
  return q;
}

}  // namespace detail

/// Factorization of a monic rational polynomial into linear factors x - r with
/// integer r, or nullopt when it does not split that way.
///
/// A split polynomial has only real roots, so every root is bounded by
/// sqrt(sum r_i^2) = sqrt(c_{d-1}^2 - 2 c_{d-2}); candidates in that range that
/// divide the lowest nonzero coefficient are tested exactly.
inline std::optional<std::vector<RootMultiplicity>> integer_root_factorization(std::vector<Rational> c,
                                                                               std::int64_t max_bound = 10'000'000) {
  if (c.empty() || !c.back().is_one()) throw PreconditionError("polynomial must be monic");
  for (const auto& x : c) {
    if (!x.is_integer()) return std::nullopt;
  }
  std::vector<RootMultiplicity> out;
  int zero_mult = 0;
  while (c.size() > 1 && c[0].is_zero()) {
    c.erase(c.begin());
    ++zero_mult;
  }
  std::size_t d = c.size() - 1;
  if (d > 0) {
    mpz_class a1 = c[d - 1].numerator();
    mpz_class a2 = d >= 2 ? c[d - 2].numerator() : mpz_class(0);
    mpz_class power_sum = a1 * a1 - 2 * a2;
    if (power_sum < 0) return std::nullopt;
    mpz_class bound = sqrt(power_sum) + 1;
    if (bound > max_bound) return std::nullopt;
    mpz_class constant = c[0].numerator();
    std::int64_t b = bound.get_si();
    for (std::int64_t r = -b; r <= b && c.size() > 1; ++r) {
      if (r == 0 || constant % mpz_class(static_cast<long>(r)) != 0) continue;
      int mult = 0;
      while (c.size() > 1 && detail::eval(c, r).is_zero()) {
        c = detail::deflate(c, r);
        ++mult;
      }
      if (mult) {
        out.push_back({r, mult});
        constant = c[0].numerator();
      }
    }
    if (c.size() > 1) return std::nullopt;
  }
  if (zero_mult) out.push_back({0, zero_mult});
  // Lower multiplicity first, then larger roots first.
  std::sort(out.begin(), out.end(), [](const RootMultiplicity& x, const RootMultiplicity& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
    return x.root > y.root;
  });
  return out;
}

/// kPlain: "(x-4)*(x+2)*x^2". kTeX: "(x-4)(x+2)x^{2}".
enum class FactorStyle { kPlain, kTeX };

/// A lone simple factor is written bare, e.g. "x-1".
inline std::string format_factorization(const std::vector<RootMultiplicity>& factors,
                                        FactorStyle style = FactorStyle::kPlain) {
  auto linear = [](std::int64_t r) {
    if (r == 0) return std::string("x");
    return r > 0 ? "x-" + std::to_string(r) : "x+" + std::to_string(-r);
  };
  if (factors.size() == 1 && factors[0].multiplicity == 1) return linear(factors[0].root);
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i && style == FactorStyle::kPlain) s += '*';
    const auto& f = factors[i];
    s += f.root == 0 ? "x" : "(" + linear(f.root) + ")";
    if (f.multiplicity > 1) {
      std::string e = std::to_string(f.multiplicity);
      s += style == FactorStyle::kPlain ? "^" + e : "^{" + e + "}";
    }
  }
  return s;
}

/// Parses the format produced by format_factorization. Also accepts juxtaposed
/// factors without '*' and exponents written as "^{2}".
inline std::vector<RootMultiplicity> parse_factorization(std::string_view text) {
  std::vector<RootMultiplicity> out;
  std::size_t i = 0;
  auto fail = [&] { throw PreconditionError("bad factored polynomial '" + std::string(text) + "'"); };
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail();
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  while (i < text.size()) {
    if (text[i] == '*') {
      ++i;
      continue;
    }
    bool paren = text[i] == '(';
    if (paren) ++i;
    if (i >= text.size() || text[i] != 'x') fail();
    ++i;
    std::int64_t root = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      bool minus = text[i] == '-';
      ++i;
      std::int64_t v = read_int(i);
      root = minus ? v : -v;
    }
    if (paren) {
      if (i >= text.size() || text[i] != ')') fail();
      ++i;
    }
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool brace = i < text.size() && text[i] == '{';
      if (brace) ++i;
      mult = static_cast<int>(read_int(i));
      if (brace) {
        if (i >= text.size() || text[i] != '}') fail();
        ++i;
      }
    }
    out.push_back({root, mult});
  }
  if (out.empty()) fail();
  return out;
}

/// Expanded monic coefficients of prod (x - r)^m, lowest degree first.
inline std::vector<Rational> expand_factorization(const std::vector<RootMultiplicity>& factors) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& f : factors) {
    for (int k = 0; k < f.multiplicity; ++k) {
      std::vector<Rational> next(c.size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * Rational(f.root);
      }
      c = std::move(next);
    }
  }
  return c;
}

/// Descending-power text such as "x^3-2*x+1/2", for polynomials that do not split.
template <ExactField F>
std::string format_polynomial(const std::vector<typename F::value_type>& c, const F& field) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (field.is_zero(c[i])) continue;
    std::string coeff = field.to_string(c[i]);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!s.empty() || negative) s += negative ? "-" : "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      s += coeff;
    } else if (coeff == "1") {
      s += mono;
    } else {
      s += coeff + "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace rooksum
