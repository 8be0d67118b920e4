#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/subset.hpp"

namespace rooksum {

/// Lookup tables for S_n with elements indexed by lexicographic rank.
/// Instances are built once per n and shared.
class SymmetricGroup {
 public:
  static constexpr int kMaxDegree = 10;
  static constexpr int kTableDegree = 6;

  static const SymmetricGroup& of(int n) {
    if (n < 0 || n > kMaxDegree) throw CapExceeded("symmetric group tables", n, kMaxDegree);
    static std::mutex mu;
    static std::array<std::unique_ptr<SymmetricGroup>, kMaxDegree + 1> cache;
    std::lock_guard lock(mu);
    if (!cache[n]) cache[n].reset(new SymmetricGroup(n));
    return *cache[n];
  }

  int degree() const { return n_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(perms_.size()); }
  const Permutation& element(std::uint32_t r) const { return perms_[r]; }
  std::uint32_t rank(const Permutation& w) const {
    if (w.size() != n_) throw PreconditionError("permutation size does not match group degree");
    return static_cast<std::uint32_t>(lex_rank(w));
  }
  std::uint32_t inverse(std::uint32_t r) const { return inverse_[r]; }
  int sign(std::uint32_t r) const { return sign_[r]; }
  /// Rank of u v, where (u v)(i) = u(v(i)).
  std::uint32_t product(std::uint32_t u, std::uint32_t v) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(u) * order() + v];
    return static_cast<std::uint32_t>(lex_rank(compose(perms_[u], perms_[v])));
  }
  /// Mask of w(S) for the permutation of rank r.
  std::uint32_t image_mask(std::uint32_t r, std::uint32_t mask) const {
    const Permutation& w = perms_[r];
    std::uint32_t out = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) out |= 1u << w[std::countr_zero(m)];
    return out;
  }

 private:
  explicit SymmetricGroup(int n) : n_(n), perms_(all_permutations(n)) {
    std::size_t N = perms_.size();
    inverse_.resize(N);
    sign_.resize(N);
    for (std::size_t r = 0; r < N; ++r) {
      inverse_[r] = static_cast<std::uint32_t>(lex_rank(rooksum::inverse(perms_[r])));
      sign_[r] = static_cast<std::int8_t>(rooksum::sign(perms_[r]));
    }
    if (n <= kTableDegree) {
      table_.resize(N * N);
      for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) {
          table_[u * N + v] = static_cast<std::uint16_t>(lex_rank(compose(perms_[u], perms_[v])));
        }
      }
    }
  }

  int n_;
  std::vector<Permutation> perms_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::int8_t> sign_;
  std::vector<std::uint16_t> table_;
};

/// Element of the group algebra k[S_n]: a sparse list of (lex rank, coefficient)
/// terms, sorted by rank, with no zero coefficients.
template <ExactField F>
class AlgebraElement {
 public:
  using value_type = typename F::value_type;
  using Term = std::pair<std::uint32_t, value_type>;

  AlgebraElement(int n, const F& field) : n_(n), field_(field) { SymmetricGroup::of(n); }

  static AlgebraElement identity(int n, const F& field) {
    AlgebraElement e(n, field);
    e.terms_.emplace_back(0, field.one());
    return e;
  }
  static AlgebraElement basis(const Permutation& w, const F& field) {
    AlgebraElement e(w.size(), field);
    e.terms_.emplace_back(SymmetricGroup::of(w.size()).rank(w), field.one());
    return e;
  }
  /// Sums duplicate ranks and drops zeros.
  static AlgebraElement from_terms(int n, const F& field, std::vector<Term> terms) {
    AlgebraElement e(n, field);
    std::uint32_t order = SymmetricGroup::of(n).order();
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (t.first >= order) throw PreconditionError("permutation rank out of range");
      if (!e.terms_.empty() && e.terms_.back().first == t.first) {
        e.terms_.back().second = field.add(e.terms_.back().second, t.second);
      } else {
        e.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(e.terms_, [&](const Term& t) { return field.is_zero(t.second); });
    return e;
  }
  static AlgebraElement from_dense(int n, const F& field, const std::vector<value_type>& dense) {
    AlgebraElement e(n, field);
    if (dense.size() != SymmetricGroup::of(n).order()) throw PreconditionError("dense vector has wrong length");
    for (std::uint32_t r = 0; r < dense.size(); ++r) {
      if (!field.is_zero(dense[r])) e.terms_.emplace_back(r, dense[r]);
    }
    return e;
  }
  /// Sum of w over all permutations w satisfying pred.
  static AlgebraElement sum_where(int n, const F& field, const std::function<bool(const Permutation&)>& pred) {
    const SymmetricGroup& G = SymmetricGroup::of(n);
    AlgebraElement e(n, field);
    for (std::uint32_t r = 0; r < G.order(); ++r) {
      if (pred(G.element(r))) e.terms_.emplace_back(r, field.one());
    }
    return e;
  }

  int degree() const { return n_; }
  const F& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  value_type coeff_at_rank(std::uint32_t r) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                               [](const Term& t, std::uint32_t key) { return t.first < key; });
    return it != terms_.end() && it->first == r ? it->second : field_.zero();
  }
  value_type coeff(const Permutation& w) const { return coeff_at_rank(SymmetricGroup::of(n_).rank(w)); }
  /// Coefficient of the identity permutation.
  value_type coeff_one() const { return coeff_at_rank(0); }

  std::vector<value_type> to_dense() const {
    std::vector<value_type> d(SymmetricGroup::of(n_).order(), field_.zero());
    for (const auto& [r, c] : terms_) d[r] = c;
    return d;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first || !a.field_.equal(a.terms_[i].second, b.terms_[i].second)) {
        return false;
      }
    }
    return true;
  }

 private:
  int n_;
  F field_;
  std::vector<Term> terms_;
};

namespace detail {
template <ExactField F>
void require_same_degree(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  if (a.degree() != b.degree()) throw PreconditionError("group algebra elements of different degree");
}
}  // namespace detail

template <ExactField F>
AlgebraElement<F> operator+(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  detail::require_same_degree(a, b);
  const F& f = a.field();
  std::vector<typename AlgebraElement<F>::Term> out;
  out.reserve(a.support_size() + b.support_size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, f.add(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return AlgebraElement<F>::from_terms(a.degree(), f, std::move(out));
}

template <ExactField F>
AlgebraElement<F> scale(const typename F::value_type& c, const AlgebraElement<F>& a) {
  std::vector<typename AlgebraElement<F>::Term> out;
  const F& f = a.field();
  if (f.is_zero(c)) return AlgebraElement<F>(a.degree(), f);
  out.reserve(a.support_size());
  for (const auto& [r, x] : a.terms()) out.emplace_back(r, f.mul(c, x));
  return AlgebraElement<F>::from_terms(a.degree(), f, std::move(out));
}

template <ExactField F>
AlgebraElement<F> operator-(const AlgebraElement<F>& a) {
  return scale(a.field().neg(a.field().one()), a);
}

template <ExactField F>
AlgebraElement<F> operator-(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  return a + (-b);
}

/// Convolution product.
template <ExactField F>
AlgebraElement<F> operator*(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  detail::require_same_degree(a, b);
  const F& f = a.field();
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  std::size_t work = a.support_size() * b.support_size();
  if (work == 0) return AlgebraElement<F>(a.degree(), f);
  if (work * 4 < G.order()) {
    std::vector<typename AlgebraElement<F>::Term> out;
    out.reserve(work);
    for (const auto& [u, cu] : a.terms()) {
      for (const auto& [v, cv] : b.terms()) out.emplace_back(G.product(u, v), f.mul(cu, cv));
    }
    return AlgebraElement<F>::from_terms(a.degree(), f, std::move(out));
  }
  std::vector<typename F::value_type> acc(G.order(), f.zero());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) f.add_mul(acc[G.product(u, v)], cu, cv);
  }
  return AlgebraElement<F>::from_dense(a.degree(), f, acc);
}

/// w a, computed by relabelling.
template <ExactField F>
AlgebraElement<F> left_multiply(const Permutation& w, const AlgebraElement<F>& a) {
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  std::uint32_t wr = G.rank(w);
  std::vector<typename AlgebraElement<F>::Term> out;
  out.reserve(a.support_size());
  for (const auto& [r, c] : a.terms()) out.emplace_back(G.product(wr, r), c);
  return AlgebraElement<F>::from_terms(a.degree(), a.field(), std::move(out));
}

/// a w, computed by relabelling.
template <ExactField F>
AlgebraElement<F> right_multiply(const AlgebraElement<F>& a, const Permutation& w) {
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  std::uint32_t wr = G.rank(w);
  std::vector<typename AlgebraElement<F>::Term> out;
  out.reserve(a.support_size());
  for (const auto& [r, c] : a.terms()) out.emplace_back(G.product(r, wr), c);
  return AlgebraElement<F>::from_terms(a.degree(), a.field(), std::move(out));
}

/// a - c * 1.
template <ExactField F>
AlgebraElement<F> minus_scalar(const AlgebraElement<F>& a, const typename F::value_type& c) {
  return a - scale(c, AlgebraElement<F>::identity(a.degree(), a.field()));
}

/// Linear extension of w -> w^{-1}; an algebra anti-automorphism.
template <ExactField F>
AlgebraElement<F> antipode(const AlgebraElement<F>& a) {
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  std::vector<typename AlgebraElement<F>::Term> out;
  for (const auto& [r, c] : a.terms()) out.emplace_back(G.inverse(r), c);
  return AlgebraElement<F>::from_terms(a.degree(), a.field(), std::move(out));
}

/// Linear extension of w -> sign(w) w; an algebra automorphism.
template <ExactField F>
AlgebraElement<F> sign_twist(const AlgebraElement<F>& a) {
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  const F& f = a.field();
  std::vector<typename AlgebraElement<F>::Term> out;
  for (const auto& [r, c] : a.terms()) out.emplace_back(r, G.sign(r) < 0 ? f.neg(c) : c);
  return AlgebraElement<F>::from_terms(a.degree(), f, std::move(out));
}

/// Standard bilinear form making the permutations orthonormal.
template <ExactField F>
typename F::value_type dot(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  detail::require_same_degree(a, b);
  const F& f = a.field();
  typename F::value_type s = f.zero();
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      f.add_mul(s, i->second, j->second);
      ++i;
      ++j;
    }
  }
  return s;
}

/// Board given by allowed columns per row: row i permits w(i) in allowed[i].
using Board = std::vector<std::uint32_t>;

/// Sum of all permutations whose graph lies inside the board.
template <ExactField F>
AlgebraElement<F> board_sum(int n, const Board& allowed, const F& field) {
  if (static_cast<int>(allowed.size()) != n) throw PreconditionError("board must have n rows");
  return AlgebraElement<F>::sum_where(n, field, [&](const Permutation& w) {
    for (int i = 0; i < n; ++i) {
      if (!((allowed[i] >> w[i]) & 1u)) return false;
    }
    return true;
  });
}

/// Random element with about `density` of the permutations in its support and
/// coefficients drawn from [-range, range].
template <ExactField F>
AlgebraElement<F> random_element(int n, const F& field, std::mt19937_64& rng, double density = 0.5,
                                 int range = 3) {
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    if (keep(rng)) terms.emplace_back(r, field.from_int(coeff(rng)));
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(img[i], img[pick(rng)]);
  }
  return Permutation(std::move(img));
}

}  // namespace rooksum
