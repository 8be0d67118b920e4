#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/matrix.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/report.hpp"
#include "rooksum/row_sums.hpp"
#include "rooksum/span.hpp"

namespace rooksum {

/// Which family a basis spans.
///  kRowSum:          span of row sums over set decompositions with at most k blocks.
///  kAntisymmetrizer: two-sided ideal generated by the antisymmetrizers on k+1 points.
enum class IdealKind { kRowSum, kAntisymmetrizer };

inline std::string to_string(IdealKind kind) { return kind == IdealKind::kRowSum ? "row-sum" : "antisymmetrizer"; }

/// Triangular basis: elements[i] has coefficient ±1 at leading[i].
template <ExactField F>
struct IdealBasis {
  int n;
  int k;
  IdealKind kind;
  bool sign_twisted;
  std::vector<AlgebraElement<F>> elements;
  std::vector<Permutation> leading;

  std::size_t size() const { return elements.size(); }
};

/// One element per v avoiding 12...(k+1): the row sum from the decreasing-run
/// decomposition of v's positions to its image under v. Coefficient 1 at v and
/// every other permutation in the support is lexicographically smaller.
template <ExactField F>
IdealBasis<F> row_sum_ideal_basis(int n, int k, const F& field, int cap = kEnumerationCap) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  IdealBasis<F> basis{n, k, IdealKind::kRowSum, false, {}, {}};
  for (const Permutation& v : enumerate_avoiders(n, k + 1, cap)) {
    SetDecomposition from = erdos_szekeres_decomposition(v, k);
    basis.elements.push_back(row_sum(act(v, from), from, field));
    basis.leading.push_back(v);
  }
  return basis;
}

/// One element per v containing 12...(k+1): v times the antisymmetrizer on the
/// lexicographically first k+1 positions where v increases. Coefficient 1 at v
/// and every other permutation in the support is lexicographically larger.
template <ExactField F>
IdealBasis<F> antisymmetrizer_ideal_basis(int n, int k, const F& field, int cap = kEnumerationCap) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  check_cap("ideal basis", n, cap);
  IdealBasis<F> basis{n, k, IdealKind::kAntisymmetrizer, false, {}, {}};
  for (const Permutation& v : all_permutations(n)) {
    if (avoids_increasing(v, k + 1)) continue;
    Subset positions = smallest_increasing_positions(v, k + 1);
    basis.elements.push_back(left_multiply(v, antisymmetrizer(positions, field)));
    basis.leading.push_back(v);
  }
  return basis;
}

template <ExactField F>
IdealBasis<F> ideal_basis(int n, int k, IdealKind kind, const F& field, int cap = kEnumerationCap) {
  return kind == IdealKind::kRowSum ? row_sum_ideal_basis(n, k, field, cap)
                                    : antisymmetrizer_ideal_basis(n, k, field, cap);
}

/// Image of a basis under the sign automorphism.
template <ExactField F>
IdealBasis<F> sign_twisted(IdealBasis<F> basis) {
  for (auto& e : basis.elements) e = sign_twist(e);
  basis.sign_twisted = !basis.sign_twisted;
  return basis;
}

/// Antisymmetrizer-ideal basis with the convention that negative k gives the
/// whole algebra.
template <ExactField F>
IdealBasis<F> antisymmetrizer_ideal_basis_extended(int n, int k, const F& field) {
  if (k >= 0) return antisymmetrizer_ideal_basis(n, k, field);
  IdealBasis<F> basis{n, k, IdealKind::kAntisymmetrizer, false, {}, {}};
  for (const Permutation& v : all_permutations(n)) {
    basis.elements.push_back(AlgebraElement<F>::basis(v, field));
    basis.leading.push_back(v);
  }
  return basis;
}

/// Row-sum ideal basis with the convention that negative k gives zero.
template <ExactField F>
IdealBasis<F> row_sum_ideal_basis_extended(int n, int k, const F& field) {
  if (k >= 0) return row_sum_ideal_basis(n, k, field);
  return IdealBasis<F>{n, k, IdealKind::kRowSum, false, {}, {}};
}

template <ExactField F>
SpanBasis<F> span_of(const IdealBasis<F>& basis, const F& field) {
  return span_of(basis.n, field, basis.elements);
}

namespace detail {

/// Set decomposition of [n] into `blocks` blocks with uniformly random labels.
inline SetDecomposition random_decomposition(int n, int blocks, std::mt19937_64& rng) {
  std::vector<std::uint32_t> masks(blocks, 0);
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  for (int i = 0; i < n; ++i) masks[pick(rng)] |= 1u << i;
  std::vector<Subset> out;
  for (auto m : masks) out.emplace_back(n, m);
  return SetDecomposition(n, std::move(out));
}

inline Subset random_subset_of_size(int n, int size, std::mt19937_64& rng) {
  Permutation p = random_permutation(n, rng);
  std::uint32_t m = 0;
  for (int i = 0; i < size; ++i) m |= 1u << p[i];
  return Subset(n, m);
}

template <ExactField F>
void check_leading_terms(CheckResult& c, const IdealBasis<F>& basis, const F& field) {
  const SymmetricGroup& G = SymmetricGroup::of(basis.n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis.elements[i];
    std::uint32_t lead = G.rank(basis.leading[i]);
    auto x = e.coeff_at_rank(lead);
    bool unit = field.equal(x, field.one()) || field.equal(x, field.neg(field.one()));
    bool below = basis.kind == IdealKind::kRowSum ? e.terms().back().first == lead : e.terms().front().first == lead;
    c.expect(unit && below, "leading term of element for " + basis.leading[i].to_string());
  }
}

}  // namespace detail

/// Checks the structure of the row-sum ideal I_k and antisymmetrizer ideal J_k
/// in k[S_n]: ranks, mutual annihilation, orthogonality, complementarity,
/// sampled spanning sets, quotient bases and antipode stability.
template <ExactField F>
Report verify_ideal_structure(int n, int k, const F& field, std::uint64_t seed = 1, int samples = 200) {
  Report report;
  report.name = "ideal-structure n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  auto I = row_sum_ideal_basis(n, k, field);
  auto J = antisymmetrizer_ideal_basis(n, k, field);
  SpanBasis<F> spanI = span_of(I, field);
  SpanBasis<F> spanJ = span_of(J, field);
  auto avoiders = enumerate_avoiders(n, k + 1);
  std::mt19937_64 rng(seed);

  report.run("ranks", [&](CheckResult& c) {
    c.record("rank_I", static_cast<std::int64_t>(spanI.rank()));
    c.record("rank_J", static_cast<std::int64_t>(spanJ.rank()));
    c.record("avoiders", static_cast<std::int64_t>(avoiders.size()));
    c.expect(spanI.rank() == avoiders.size(), "rank of I differs from the avoider count");
    c.expect(spanJ.rank() == G.order() - avoiders.size(), "rank of J differs from the non-avoider count");
    detail::check_leading_terms(c, I, field);
    detail::check_leading_terms(c, J, field);
  });

  report.run("mutual-annihilation", [&](CheckResult& c) {
    for (std::size_t i = 0; i < I.size(); ++i) {
      for (std::size_t j = 0; j < J.size(); ++j) {
        if (!(I.elements[i] * J.elements[j]).is_zero()) c.fail("I*J: " + I.leading[i].to_string() + " " + J.leading[j].to_string());
        if (!(J.elements[j] * I.elements[i]).is_zero()) c.fail("J*I: " + J.leading[j].to_string() + " " + I.leading[i].to_string());
      }
    }
  });

  report.run("orthogonality", [&](CheckResult& c) {
    for (std::size_t i = 0; i < I.size(); ++i) {
      for (std::size_t j = 0; j < J.size(); ++j) {
        if (!field.is_zero(dot(I.elements[i], J.elements[j]))) {
          c.fail(I.leading[i].to_string() + " . " + J.leading[j].to_string());
        }
      }
    }
    // I is the full orthogonal complement of J.
    std::vector<std::vector<typename F::value_type>> rowsJ;
    for (const auto& e : J.elements) rowsJ.push_back(e.to_dense());
    SpanBasis<F> perp(G.order(), field);
    if (rowsJ.empty()) {
      for (std::uint32_t r = 0; r < G.order(); ++r) {
        std::vector<typename F::value_type> e(G.order(), field.zero());
        e[r] = field.one();
        perp.insert(e);
      }
    } else {
      for (auto& v : nullspace(DenseMatrix<F>::from_rows(rowsJ, G.order(), field))) perp.insert(v);
    }
    c.expect(same_span(perp, spanI), "I differs from the orthogonal complement of J");
  });

  report.run("direct-sum", [&](CheckResult& c) {
    if (!factorial_invertible(field, n)) {
      c.skip("hypothesis n! invertible fails: modulus divides n!");
      return;
    }
    std::size_t joint = joint_rank(spanI, spanJ);
    c.record("rank_I_plus_J", static_cast<std::int64_t>(joint));
    c.expect(joint == G.order(), "I + J is not the whole algebra");
    c.expect(spanI.rank() + spanJ.rank() == G.order(), "dimensions do not add up to n!");
  });

  report.run("sampled-generators", [&](CheckResult& c) {
    for (int s = 0; k > 0 && s < samples; ++s) {
      int blocks = std::uniform_int_distribution<int>(1, k)(rng);
      SetDecomposition from = detail::random_decomposition(n, blocks, rng);
      SetDecomposition padded = from.padded(k);
      Permutation u = random_permutation(n, rng);
      auto x = row_sum(act(u, from), from, field);
      c.expect(spanI.contains(x.to_dense()), "row sum not in I: " + from.to_string());
      auto y = row_sum(act(u, padded), padded, field);
      c.expect(spanI.contains(y.to_dense()), "padded row sum not in I: " + padded.to_string());
    }
    if (k + 1 <= n) {
      for (int s = 0; s < samples; ++s) {
        Subset pos = detail::random_subset_of_size(n, k + 1, rng);
        Permutation v = random_permutation(n, rng);
        auto anti = antisymmetrizer(pos, field);
        c.expect(spanJ.contains(left_multiply(v, anti).to_dense()), "v*anti not in J: " + v.to_string() + " " + pos.to_string());
        c.expect(spanJ.contains(right_multiply(anti, v).to_dense()), "anti*v not in J: " + v.to_string() + " " + pos.to_string());
      }
    }
  });

  report.run("quotient-bases", [&](CheckResult& c) {
    auto unit = [&](const Permutation& w) {
      std::vector<typename F::value_type> e(G.order(), field.zero());
      e[G.rank(w)] = field.one();
      return e;
    };
    SpanBasis<F> a = spanI;
    SpanBasis<F> b = spanJ;
    for (const Permutation& w : all_permutations(n)) {
      if (avoids_increasing(w, k + 1)) {
        b.insert(unit(w));
      } else {
        a.insert(unit(w));
      }
    }
    c.expect(a.is_full(), "non-avoiders do not span A/I");
    c.expect(b.is_full(), "avoiders do not span A/J");
  });

  report.run("antipode-stable", [&](CheckResult& c) {
    for (std::size_t i = 0; i < I.size(); ++i) {
      c.expect(spanI.contains(antipode(I.elements[i]).to_dense()), "S(I) element " + I.leading[i].to_string());
    }
    for (std::size_t j = 0; j < J.size(); ++j) {
      c.expect(spanJ.contains(antipode(J.elements[j]).to_dense()), "S(J) element " + J.leading[j].to_string());
    }
  });

  report.run("two-sided-generation", [&](CheckResult& c) {
    if (k + 1 > n) {
      c.expect(spanJ.rank() == 0, "J should be zero");
      return;
    }
    auto anti = antisymmetrizer(Subset::interval(n, 0, k + 1), field);
    SpanBasis<F> generated(G.order(), field);
    int budget = 20 * static_cast<int>(spanJ.rank()) + 100;
    for (int s = 0; s < budget && generated.rank() < spanJ.rank(); ++s) {
      Permutation u = random_permutation(n, rng);
      Permutation v = random_permutation(n, rng);
      auto x = right_multiply(left_multiply(u, anti), v);
      c.expect(spanJ.contains(x.to_dense()), "u*anti*v not in J: " + u.to_string() + " " + v.to_string());
      generated.insert(x.to_dense());
    }
    c.record("generated_rank", static_cast<std::int64_t>(generated.rank()));
    c.expect(generated.rank() == spanJ.rank(), "sampled products did not reach rank of J");
  });

  return report;
}

/// The avoider counts for 12...(k+1) and (k+1)...21 agree, and the decreasing
/// avoiders index a basis of A modulo the sign twist of J_k.
template <ExactField F>
Report twin_check(int n, int k, const F& field) {
  Report report;
  report.name = "twin n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  report.run("twin", [&](CheckResult& c) {
    const SymmetricGroup& G = SymmetricGroup::of(n);
    auto inc = enumerate_avoiders(n, k + 1);
    auto dec = enumerate_decreasing_avoiders(n, k + 1);
    c.record("increasing_avoiders", static_cast<std::int64_t>(inc.size()));
    c.record("decreasing_avoiders", static_cast<std::int64_t>(dec.size()));
    c.expect(inc.size() == dec.size(), "avoider counts differ");
    auto TJ = sign_twisted(antisymmetrizer_ideal_basis(n, k, field));
    SpanBasis<F> s = span_of(TJ, field);
    c.record("rank_twisted_J", static_cast<std::int64_t>(s.rank()));
    for (const Permutation& w : dec) {
      std::vector<typename F::value_type> e(G.order(), field.zero());
      e[G.rank(w)] = field.one();
      s.insert(e);
    }
    c.expect(s.is_full(), "decreasing avoiders do not span A modulo twisted J");
  });
  return report;
}

/// Quotient of A by I_k + T_sign(J_l): its dimension equals the number of
/// permutations avoiding (l+1)...21 but containing 12...(k+1), and those
/// permutations index a basis of the quotient.
template <ExactField F>
Report mixed_quotient_check(int n, int k, int l, const F& field) {
  Report report;
  report.name = "mixed-quotient n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                " field=" + field.name();
  report.run("mixed-quotient", [&](CheckResult& c) {
    const SymmetricGroup& G = SymmetricGroup::of(n);
    SpanBasis<F> s = span_of(row_sum_ideal_basis(n, k, field), field);
    for (const auto& e : sign_twisted(antisymmetrizer_ideal_basis(n, l, field)).elements) s.insert(e.to_dense());
    std::vector<Permutation> index;
    for (const Permutation& w : all_permutations(n)) {
      if (avoids_decreasing(w, l + 1) && !avoids_increasing(w, k + 1)) index.push_back(w);
    }
    c.record("rank_sum", static_cast<std::int64_t>(s.rank()));
    c.record("quotient_index", static_cast<std::int64_t>(index.size()));
    c.expect(s.rank() + index.size() == G.order(), "quotient dimension differs from index count");
    for (const Permutation& w : index) {
      std::vector<typename F::value_type> e(G.order(), field.zero());
      e[G.rank(w)] = field.one();
      s.insert(e);
    }
    c.expect(s.is_full(), "index permutations do not span the quotient");
  });
  return report;
}

/// dim(I_2 ∩ T_sign(I_2)), the intersection of the row-sum ideal for k = 2 with
/// its sign twist.
template <ExactField F>
std::size_t cross_char_intersection(int n, const F& field) {
  auto I = row_sum_ideal_basis(n, 2, field);
  SpanBasis<F> a = span_of(I, field);
  SpanBasis<F> b = span_of(sign_twisted(I), field);
  return a.rank() + b.rank() - joint_rank(a, b);
}

/// T_sign(J_{n-k-1}) equals the span of the tuple sums over all pairs of
/// k-tuples in [n]^k.
template <ExactField F>
Report tuple_span_check(int n, int k, const F& field) {
  Report report;
  report.name = "tuple-span n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  report.run("tuple-span", [&](CheckResult& c) {
    SpanBasis<F> twisted = span_of(sign_twisted(antisymmetrizer_ideal_basis_extended(n, n - k - 1, field)), field);
    SpanBasis<F> tuples(SymmetricGroup::of(n).order(), field);
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(n);
    auto decode = [&](std::uint64_t code) {
      std::vector<int> t(k);
      for (int i = 0; i < k; ++i) {
        t[i] = static_cast<int>(code % n);
        code /= n;
      }
      return t;
    };
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t y = 0; y < count; ++y) {
        auto e = tuple_sum(n, decode(x), decode(y), field);
        c.expect(twisted.contains(e.to_dense()), "tuple sum outside twisted J");
        tuples.insert(e.to_dense());
      }
    }
    c.record("rank_twisted_J", static_cast<std::int64_t>(twisted.rank()));
    c.record("rank_tuple_span", static_cast<std::int64_t>(tuples.rank()));
    c.expect(tuples.rank() == twisted.rank(), "tuple sums span a smaller space");
  });
  return report;
}

}  // namespace rooksum
