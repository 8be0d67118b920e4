#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"

namespace rooksum {

/// Incrementally maintained subspace basis in reduced row echelon form: each
/// stored row has a 1 in its pivot column and every other stored row is 0 there.
template <ExactField F>
class SpanBasis {
 public:
  using value_type = typename F::value_type;
  using Vector = std::vector<value_type>;

  SpanBasis(std::size_t dim, const F& field) : dim_(dim), field_(field) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == dim_; }
  const F& field() const { return field_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after clearing every pivot column.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (field_.is_zero(v[pivots_[i]])) continue;
      value_type c = field_.neg(v[pivots_[i]]);
      for (auto j : support_[i]) field_.add_mul(v[j], c, rows_[i][j]);
    }
    return v;
  }
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v; returns true when the rank grew.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && field_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    value_type inv = field_.inv(v[p]);
    for (auto& x : v) {
      if (!field_.is_zero(x)) x = field_.mul(x, inv);
    }
    std::vector<std::uint32_t> sup = support_of(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (field_.is_zero(rows_[i][p])) continue;
      value_type c = field_.neg(rows_[i][p]);
      for (auto j : sup) field_.add_mul(rows_[i][j], c, v[j]);
      support_[i] = support_of(rows_[i]);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    support_.push_back(std::move(sup));
    return true;
  }

  bool is_zero_vector(const Vector& v) const {
    for (const auto& x : v) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

 private:
  void check(const Vector& v) const {
    if (v.size() != dim_) throw PreconditionError("vector length does not match span dimension");
  }
  std::vector<std::uint32_t> support_of(const Vector& v) const {
    std::vector<std::uint32_t> s;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!field_.is_zero(v[j])) s.push_back(static_cast<std::uint32_t>(j));
    }
    return s;
  }

  std::size_t dim_;
  F field_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> support_;
};

/// Detects the first vector in a sequence that depends linearly on its
/// predecessors and reports the dependency.
template <ExactField F>
class DependencyFinder {
 public:
  using value_type = typename F::value_type;
  using Vector = std::vector<value_type>;

  DependencyFinder(std::size_t dim, const F& field) : dim_(dim), field_(field) {}

  std::size_t count() const { return pushed_; }

  /// Pushes v_m. When v_m lies in the span of v_0..v_{m-1} returns c with
  /// sum_j c_j v_j = 0 and c_m = 1; otherwise stores v_m and returns nullopt.
  std::optional<Vector> push(Vector v) {
    if (v.size() != dim_) throw PreconditionError("vector length does not match dimension");
    std::size_t m = pushed_++;
    Vector comb(m + 1, field_.zero());
    comb[m] = field_.one();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& x = v[pivots_[i]];
      if (field_.is_zero(x)) continue;
      value_type c = field_.neg(x);
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!field_.is_zero(rows_[i][j])) field_.add_mul(v[j], c, rows_[i][j]);
      }
      for (std::size_t j = 0; j < combs_[i].size(); ++j) field_.add_mul(comb[j], c, combs_[i][j]);
    }
    std::size_t p = 0;
    while (p < dim_ && field_.is_zero(v[p])) ++p;
    if (p == dim_) return comb;
    value_type inv = field_.inv(v[p]);
    for (auto& x : v) x = field_.mul(x, inv);
    for (auto& x : comb) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    combs_.push_back(std::move(comb));
    pivots_.push_back(p);
    return std::nullopt;
  }

 private:
  std::size_t dim_;
  F field_;
  std::size_t pushed_ = 0;
  std::vector<Vector> rows_;
  std::vector<Vector> combs_;
  std::vector<std::size_t> pivots_;
};

/// Dependency among the vectors, found at the first vector lying in the span of
/// the earlier ones; nullopt (meaning "extend the sequence") if all are independent.
template <ExactField F>
std::optional<std::vector<typename F::value_type>> min_dependency(
    const std::vector<std::vector<typename F::value_type>>& vectors, std::size_t dim, const F& field) {
  DependencyFinder<F> finder(dim, field);
  for (const auto& v : vectors) {
    if (auto dep = finder.push(v)) return dep;
  }
  return std::nullopt;
}

/// Span of group algebra elements, as coordinate vectors indexed by lex rank.
template <ExactField F>
SpanBasis<F> span_of(int n, const F& field, const std::vector<AlgebraElement<F>>& elems) {
  SpanBasis<F> s(SymmetricGroup::of(n).order(), field);
  for (const auto& e : elems) s.insert(e.to_dense());
  return s;
}

/// Algebra element with the given coordinates.
template <ExactField F>
AlgebraElement<F> element_from_vector(int n, const F& field, const std::vector<typename F::value_type>& v) {
  return AlgebraElement<F>::from_dense(n, field, v);
}

/// Rank of span(a) + span(b).
template <ExactField F>
std::size_t joint_rank(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  SpanBasis<F> s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s.rank();
}

/// True when both bases span the same subspace.
template <ExactField F>
bool same_span(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& r : b.rows()) {
    if (!a.contains(r)) return false;
  }
  return true;
}

}  // namespace rooksum
