#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/polynomial.hpp"
#include "rooksum/subset.hpp"

namespace rooksum {

inline constexpr int kProductRuleCap = 8;

namespace detail {
inline void require_ground(int n, const Subset& s) {
  if (s.ground_size() != n) throw PreconditionError("subset " + s.to_string() + " is not a subset of [n]");
}
inline int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// Sum of all w with w(A) = B. Zero unless |A| = |B|.
template <ExactField F>
AlgebraElement<F> nabla(const Subset& b, const Subset& a, const F& field) {
  int n = a.ground_size();
  detail::require_ground(n, b);
  if (a.size() != b.size()) return AlgebraElement<F>(n, field);
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    if (G.image_mask(r, a.mask()) == b.mask()) terms.emplace_back(r, field.one());
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

/// Sum of all w with w(A) contained in B.
template <ExactField F>
AlgebraElement<F> nabla_tilde(const Subset& b, const Subset& a, const F& field) {
  int n = a.ground_size();
  detail::require_ground(n, b);
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    if ((G.image_mask(r, a.mask()) & ~b.mask()) == 0) terms.emplace_back(r, field.one());
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

/// |B∩C|! |B\C|! |C\B|! |[n]\(B∪C)|!
inline std::int64_t omega(const Subset& b, const Subset& c) {
  int n = b.ground_size();
  detail::require_ground(n, c);
  return static_cast<std::int64_t>(factorial((b & c).size()) * factorial((b - c).size()) *
                                   factorial((c - b).size()) * factorial(n - (b | c).size()));
}

namespace detail {
template <ExactField F>
void require_product_shape(const Subset& d, const Subset& c, const Subset& b, const Subset& a) {
  int n = a.ground_size();
  for (const Subset* s : {&b, &c, &d}) require_ground(n, *s);
  check_cap("product rule", n, kProductRuleCap);
  if (d.size() != c.size() || b.size() != a.size()) {
    throw PreconditionError("product rule needs |D| = |C| and |B| = |A|");
  }
}
}  // namespace detail

/// Product nabla(D,C) nabla(B,A) via the intersection-size form:
/// omega(B,C) * sum of w with |w(A) ∩ D| = |B ∩ C|.
template <ExactField F>
AlgebraElement<F> product_rule_a(const Subset& d, const Subset& c, const Subset& b, const Subset& a, const F& field) {
  detail::require_product_shape<F>(d, c, b, a);
  int n = a.ground_size();
  int h = (b & c).size();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> terms;
  auto w = field.from_int(omega(b, c));
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    if (std::popcount(G.image_mask(r, a.mask()) & d.mask()) == h) terms.emplace_back(r, w);
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

/// Product nabla(D,C) nabla(B,A) expanded in rook sums nabla(U,V), U ⊆ D, V ⊆ A.
template <ExactField F>
AlgebraElement<F> product_rule_b(const Subset& d, const Subset& c, const Subset& b, const Subset& a, const F& field) {
  detail::require_product_shape<F>(d, c, b, a);
  int n = a.ground_size();
  int h = (b & c).size();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename F::value_type> acc(G.order(), field.zero());
  auto om = field.from_int(omega(b, c));
  for (const Subset& u : subsets_of(d)) {
    if (u.size() < h) continue;
    auto coeff = field.mul(om, field.from_int(detail::sign_power(u.size() - h) * binomial(u.size(), h)));
    for (const Subset& v : subsets_of(a)) {
      if (v.size() != u.size()) continue;
      auto rook = nabla(u, v, field);
      for (const auto& [r, x] : rook.terms()) field.add_mul(acc[r], coeff, x);
    }
  }
  return AlgebraElement<F>::from_dense(n, field, acc);
}

/// Product nabla(D,C) nabla(B,A) expanded in containment sums nabla_tilde(D,V), V ⊆ A.
template <ExactField F>
AlgebraElement<F> product_rule_c(const Subset& d, const Subset& c, const Subset& b, const Subset& a, const F& field) {
  detail::require_product_shape<F>(d, c, b, a);
  int n = a.ground_size();
  int h = (b & c).size();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename F::value_type> acc(G.order(), field.zero());
  auto om = field.from_int(omega(b, c));
  for (const Subset& v : subsets_of(a)) {
    if (v.size() < h) continue;
    auto coeff = field.mul(om, field.from_int(detail::sign_power(v.size() - h) * binomial(v.size(), h)));
    auto rook = nabla_tilde(d, v, field);
    for (const auto& [r, x] : rook.terms()) field.add_mul(acc[r], coeff, x);
  }
  return AlgebraElement<F>::from_dense(n, field, acc);
}

/// sum over k-subsets B of D of omega(B,C) (-1)^{k-|B∩C|} binom(k, |B∩C|).
inline std::int64_t delta(const Subset& d, const Subset& c, int k) {
  detail::require_ground(d.ground_size(), c);
  std::int64_t s = 0;
  for (const Subset& b : subsets_of(d)) {
    if (b.size() != k) continue;
    int h = (b & c).size();
    s += omega(b, c) * detail::sign_power(k - h) * binomial(k, h);
  }
  return s;
}

/// sum over |D|-subsets C of B of delta(D, C, k).
inline std::int64_t delta_tilde(const Subset& d, const Subset& b, int k) {
  detail::require_ground(d.ground_size(), b);
  std::int64_t s = 0;
  for (const Subset& c : subsets_of(b)) {
    if (c.size() == d.size()) s += delta(d, c, k);
  }
  return s;
}

/// Weights on subsets C with |C| = |D|; missing subsets have weight 0.
template <ExactField F>
using SubsetWeights = std::map<Subset, typename F::value_type>;

namespace detail {
template <ExactField F>
void require_weights(const Subset& d, const SubsetWeights<F>& alpha) {
  for (const auto& [c, x] : alpha) {
    require_ground(d.ground_size(), c);
    if (c.size() != d.size()) throw PreconditionError("weight key " + c.to_string() + " has the wrong size");
  }
}

/// prod_{k=0}^{|D|} (x - delta_k) x.
template <ExactField F>
AlgebraElement<F> triangular_product(const AlgebraElement<F>& x, const Subset& d, const SubsetWeights<F>& alpha) {
  const F& f = x.field();
  AlgebraElement<F> acc = x;
  for (int k = 0; k <= d.size(); ++k) {
    auto dk = f.zero();
    for (const auto& [c, w] : alpha) f.add_mul(dk, w, f.from_int(delta(d, c, k)));
    acc = minus_scalar(x, dk) * acc;
  }
  return acc;
}
}  // namespace detail

/// sum_C alpha_C nabla(D, C).
template <ExactField F>
AlgebraElement<F> weighted_nabla_into(const Subset& d, const SubsetWeights<F>& alpha, const F& field) {
  detail::require_weights<F>(d, alpha);
  AlgebraElement<F> x(d.ground_size(), field);
  for (const auto& [c, w] : alpha) x = x + scale(w, nabla(d, c, field));
  return x;
}

/// sum_C alpha_C nabla(C, D).
template <ExactField F>
AlgebraElement<F> weighted_nabla_from(const Subset& d, const SubsetWeights<F>& alpha, const F& field) {
  detail::require_weights<F>(d, alpha);
  AlgebraElement<F> x(d.ground_size(), field);
  for (const auto& [c, w] : alpha) x = x + scale(w, nabla(c, d, field));
  return x;
}

/// prod_{k=0}^{|D|} (X - delta_{D,alpha,k}) X with X = sum_C alpha_C nabla(D,C).
/// Vanishes identically.
template <ExactField F>
AlgebraElement<F> triangular_annihilation(const Subset& d, const SubsetWeights<F>& alpha, const F& field) {
  return detail::triangular_product(weighted_nabla_into(d, alpha, field), d, alpha);
}

/// Same product with X = sum_C alpha_C nabla(C,D).
template <ExactField F>
AlgebraElement<F> triangular_annihilation_mirrored(const Subset& d, const SubsetWeights<F>& alpha, const F& field) {
  return detail::triangular_product(weighted_nabla_from(d, alpha, field), d, alpha);
}

/// prod_{k=0}^{|D|} (nabla_tilde(B,D) - delta_tilde(D,B,k)) nabla_tilde(B,D). Vanishes identically.
template <ExactField F>
AlgebraElement<F> containment_annihilation(const Subset& b, const Subset& d, const F& field) {
  AlgebraElement<F> x = nabla_tilde(b, d, field);
  AlgebraElement<F> acc = x;
  for (int k = 0; k <= d.size(); ++k) acc = minus_scalar(x, field.from_int(delta_tilde(d, b, k))) * acc;
  return acc;
}

/// Sum of all w with w(A) ∩ B = ∅ for A = {1..a} and B = {a-c+1 .. a-c+b}
/// (1-based), so |A ∩ B| = c. Zero when the parameters admit no such sets.
template <ExactField F>
AlgebraElement<F> kappa(int n, int a, int b, int c, const F& field) {
  if (a < 0 || b < 0 || c < 0 || c > a || c > b || a > n || a - c + b > n) return AlgebraElement<F>(n, field);
  Subset as = Subset::interval(n, 0, a);
  Subset bs = Subset::interval(n, a - c, b);
  return nabla_tilde(bs.complement(), as, field);
}

inline constexpr int kMinpolCap = 6;

/// One row of the minimal-polynomial table of kappa(n, a, b, c).
struct MinpolRow {
  int n, a, b, c;
  std::vector<Rational> coefficients;
  std::optional<std::vector<RootMultiplicity>> factors;

  std::string formatted(FactorStyle style = FactorStyle::kPlain) const {
    if (factors) return format_factorization(*factors, style);
    return format_polynomial(coefficients, RationalField{});
  }
};

/// Parameter triples listed in the table: (0,0,0) stands for every b = 0 row,
/// then a >= b >= 1 with a + b <= n and 0 <= c <= b.
inline std::vector<std::array<int, 3>> minpol_parameters(int n) {
  std::vector<std::array<int, 3>> out{{0, 0, 0}};
  for (int b = 1; 2 * b <= n; ++b) {
    for (int a = b; a + b <= n; ++a) {
      for (int c = 0; c <= b; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

inline MinpolRow minpol_row(int n, int a, int b, int c) {
  RationalField q;
  MinpolRow row{n, a, b, c, element_min_poly(kappa(n, a, b, c, q)), std::nullopt};
  row.factors = integer_root_factorization(row.coefficients);
  return row;
}

inline std::vector<MinpolRow> minpol_table(int n, bool unsafe_cap = false) {
  check_cap("minimal polynomial table", n, kMinpolCap, unsafe_cap);
  if (n < 1) throw PreconditionError("n must be positive");
  std::vector<MinpolRow> rows;
  for (const auto& [a, b, c] : minpol_parameters(n)) rows.push_back(minpol_row(n, a, b, c));
  return rows;
}

}  // namespace rooksum
