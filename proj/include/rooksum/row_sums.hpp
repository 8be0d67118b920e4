#pragma once

#include <cstdint>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/set_decomposition.hpp"

namespace rooksum {

/// Sum of all w with w(A_i) = B_i for every i. Zero when the block sizes differ.
template <ExactField F>
AlgebraElement<F> row_sum(const SetDecomposition& to, const SetDecomposition& from, const F& field) {
  int n = from.ground_size();
  if (to.ground_size() != n) throw PreconditionError("row sum: ground sizes differ");
  if (to.length() != from.length()) throw PreconditionError("row sum: decompositions of different length");
  if (!to.covers() || !from.covers()) throw PreconditionError("row sum: blocks must cover [n]");
  if (to.block_sizes() != from.block_sizes()) return AlgebraElement<F>(n, field);
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    bool ok = true;
    for (int i = 0; ok && i < from.length(); ++i) ok = G.image_mask(r, from.block(i).mask()) == to.block(i).mask();
    if (ok) terms.emplace_back(r, field.one());
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

/// Signed sum over the permutations of [n] fixing every point outside U.
template <ExactField F>
AlgebraElement<F> antisymmetrizer(const Subset& u, const F& field) {
  int n = u.ground_size();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::uint32_t outside = Subset::full(n).mask() & ~u.mask();
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    const Permutation& w = G.element(r);
    bool fixes = true;
    for (std::uint32_t m = outside; fixes && m; m &= m - 1) {
      int i = std::countr_zero(m);
      fixes = w[i] == i;
    }
    if (fixes) terms.emplace_back(r, G.sign(r) > 0 ? field.one() : field.neg(field.one()));
  }
  return AlgebraElement<F>::from_terms(n, field, std::move(terms));
}

/// Unsigned sum over the permutations of [n] fixing every point outside U.
template <ExactField F>
AlgebraElement<F> symmetrizer(const Subset& u, const F& field) {
  return sign_twist(antisymmetrizer(u, field));
}

/// Sum of all w with w(a_i) = b_i for every i; tuples are 0-based and may repeat.
template <ExactField F>
AlgebraElement<F> tuple_sum(int n, const std::vector<int>& to, const std::vector<int>& from, const F& field) {
  if (to.size() != from.size()) throw PreconditionError("tuple sum: tuples of different length");
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (to[i] < 0 || to[i] >= n || from[i] < 0 || from[i] >= n) throw PreconditionError("tuple entry outside [n]");
  }
  return AlgebraElement<F>::sum_where(n, field, [&](const Permutation& w) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (w[from[i]] != to[i]) return false;
    }
    return true;
  });
}

}  // namespace rooksum
