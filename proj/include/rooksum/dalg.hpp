#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/matrix.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/report.hpp"
#include "rooksum/rook.hpp"
#include "rooksum/span.hpp"
#include "rooksum/subset.hpp"

namespace rooksum {

inline constexpr int kDeltaAlgebraCap = 5;

/// The algebra with basis D(B,A) over pairs of equal-size subsets of [n] and
/// product
///   D(D,C) D(B,A) = omega(B,C) sum_{U ⊆ D, V ⊆ A, |U| = |V|}
///                   (-1)^{|U|-|B∩C|} binom(|U|, |B∩C|) D(U,V).
/// It maps onto the span of the rook sums by D(B,A) -> nabla(B,A).
template <ExactField F>
class DeltaAlgebra {
 public:
  using value_type = typename F::value_type;
  using Element = std::vector<value_type>;
  using Sparse = std::vector<std::pair<std::uint32_t, value_type>>;

  struct Label {
    Subset to;    // B
    Subset from;  // A
  };

  DeltaAlgebra(int n, const F& field, bool unsafe_cap = false) : n_(n), field_(field) {
    check_cap("delta algebra", n, kDeltaAlgebraCap, unsafe_cap);
    if (n < 0) throw PreconditionError("n must be non-negative");
    index_.assign(std::size_t(1) << (2 * n), UINT32_MAX);
    for (int s = 0; s <= n; ++s) {
      for (const Subset& b : subsets_of_size(n, s)) {
        for (const Subset& a : subsets_of_size(n, s)) {
          index_[key(b, a)] = static_cast<std::uint32_t>(labels_.size());
          labels_.push_back({b, a});
        }
      }
    }
    std::size_t masks = std::size_t(1) << n;
    expansions_.resize(masks * masks * (n + 1));
    for (std::uint32_t d = 0; d < masks; ++d) {
      for (std::uint32_t a = 0; a < masks; ++a) {
        for (int h = 0; h <= n; ++h) expansions_[(d * masks + a) * (n + 1) + h] = expansion(d, a, h);
      }
    }
  }

  int degree() const { return n_; }
  std::size_t dim() const { return labels_.size(); }
  const F& field() const { return field_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::uint32_t index_of(const Subset& to, const Subset& from) const {
    if (to.size() != from.size()) throw PreconditionError("basis label needs equal-size subsets");
    return index_[key(to, from)];
  }
  std::string label_string(std::uint32_t i) const {
    return "D(" + labels_[i].to.to_string() + "," + labels_[i].from.to_string() + ")";
  }

  Element zero() const { return Element(dim(), field_.zero()); }
  Element basis_element(std::uint32_t i) const {
    Element e = zero();
    e.at(i) = field_.one();
    return e;
  }

  /// Product of basis elements i = D(D,C) and j = D(B,A), sparse.
  Sparse basis_product(std::uint32_t i, std::uint32_t j) const {
    const Label& x = labels_[i];
    const Label& y = labels_[j];
    int h = (y.to & x.from).size();
    value_type om = field_.from_int(omega(y.to, x.from));
    Sparse out;
    for (const auto& [idx, c] : expansion_of(x.to.mask(), y.from.mask(), h)) out.emplace_back(idx, field_.mul(om, c));
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element acc = zero();
    std::vector<std::uint32_t> sy = support(y);
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i])) continue;
      const Label& lx = labels_[i];
      for (std::uint32_t j : sy) {
        const Label& ly = labels_[j];
        int h = (ly.to & lx.from).size();
        value_type s = field_.mul(field_.mul(x[i], y[j]), field_.from_int(omega(ly.to, lx.from)));
        for (const auto& [idx, c] : expansion_of(lx.to.mask(), ly.from.mask(), h)) field_.add_mul(acc[idx], s, c);
      }
    }
    return acc;
  }

  Element add(const Element& x, const Element& y) const {
    Element r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(r[i], y[i]);
    return r;
  }
  Element sub(const Element& x, const Element& y) const {
    Element r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(r[i], y[i]);
    return r;
  }
  bool is_zero(const Element& x) const {
    for (const auto& v : x) {
      if (!field_.is_zero(v)) return false;
    }
    return true;
  }
  bool equal(const Element& x, const Element& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!field_.equal(x[i], y[i])) return false;
    }
    return true;
  }

  /// Image under D(B,A) -> nabla(B,A).
  AlgebraElement<F> to_group_algebra(const Element& x) const {
    const SymmetricGroup& G = SymmetricGroup::of(n_);
    Element acc(G.order(), field_.zero());
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i])) continue;
      auto rook = nabla(labels_[i].to, labels_[i].from, field_);
      for (const auto& [r, c] : rook.terms()) field_.add_mul(acc[r], x[i], c);
    }
    return AlgebraElement<F>::from_dense(n_, field_, acc);
  }

  /// "1/4*D({1},{1}) - 1/4*D({1},{2}) + ..." in basis order.
  std::string format(const Element& x) const {
    std::string s;
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i])) continue;
      std::string c = field_.to_string(x[i]);
      bool neg = c[0] == '-';
      if (neg) c.erase(0, 1);
      if (s.empty()) {
        s += neg ? "-" : "";
      } else {
        s += neg ? " - " : " + ";
      }
      s += (c == "1" ? "" : c + "*") + label_string(i);
    }
    return s.empty() ? "0" : s;
  }

  std::vector<std::uint32_t> support(const Element& x) const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < x.size(); ++i) {
      if (!field_.is_zero(x[i])) s.push_back(i);
    }
    return s;
  }

 private:
  std::size_t key(const Subset& b, const Subset& a) const { return (std::size_t(b.mask()) << n_) | a.mask(); }

  const Sparse& expansion_of(std::uint32_t d, std::uint32_t a, int h) const {
    std::size_t masks = std::size_t(1) << n_;
    return expansions_[(d * masks + a) * (n_ + 1) + h];
  }

  /// sum_{U ⊆ D, V ⊆ A, |U| = |V| >= h} (-1)^{|U|-h} binom(|U|, h) D(U,V).
  Sparse expansion(std::uint32_t d, std::uint32_t a, int h) const {
    Sparse out;
    for (const Subset& u : subsets_of(Subset(n_, d))) {
      if (u.size() < h) continue;
      std::int64_t c = detail::sign_power(u.size() - h) * binomial(u.size(), h);
      for (const Subset& v : subsets_of(Subset(n_, a))) {
        if (v.size() == u.size()) out.emplace_back(index_[key(u, v)], field_.from_int(c));
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(out, [&](const auto& t) { return field_.is_zero(t.second); });
    return out;
  }

  int n_;
  F field_;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> index_;
  std::vector<Sparse> expansions_;
};

/// Outcome of searching for a two-sided unity.
template <ExactField F>
struct UnityResult {
  std::optional<typename DeltaAlgebra<F>::Element> unity;
  std::string note;
};

/// Two-sided unity, if any. A unity is unique, so equations e D_j = D_j and
/// D_j e = D_j are accumulated until they determine e; the candidate is then
/// checked against every basis element.
template <ExactField F>
UnityResult<F> find_unity(const DeltaAlgebra<F>& alg) {
  using V = typename F::value_type;
  const F& f = alg.field();
  std::size_t N = alg.dim();
  UnityResult<F> result;
  if (!factorial_invertible(f, alg.degree())) result.note = "modulus divides n!";
  SpanBasis<F> system(N + 1, f);
  bool inconsistent = false;
  for (std::uint32_t j = N; j-- > 0 && !inconsistent && system.rank() < N;) {
    for (int side = 0; side < 2 && !inconsistent; ++side) {
      // rows[m][i] = coefficient of D_m in (D_i D_j) or (D_j D_i).
      std::vector<std::vector<V>> rows(N, std::vector<V>(N + 1, f.zero()));
      for (std::uint32_t i = 0; i < N; ++i) {
        auto p = side == 0 ? alg.basis_product(i, j) : alg.basis_product(j, i);
        for (const auto& [m, c] : p) rows[m][i] = c;
      }
      rows[j][N] = f.one();
      for (auto& r : rows) {
        auto red = system.reduce(r);
        std::size_t p = 0;
        while (p < N + 1 && f.is_zero(red[p])) ++p;
        if (p == N) {
          inconsistent = true;
          break;
        }
        if (p < N) system.insert(std::move(red));
      }
    }
  }
  if (inconsistent || system.rank() < N) return result;
  typename DeltaAlgebra<F>::Element e = alg.zero();
  for (std::size_t r = 0; r < system.rank(); ++r) e[system.pivots()[r]] = system.rows()[r][N];
  for (std::uint32_t j = 0; j < N; ++j) {
    auto dj = alg.basis_element(j);
    if (!alg.equal(alg.mul(e, dj), dj) || !alg.equal(alg.mul(dj, e), dj)) return result;
  }
  result.unity = std::move(e);
  return result;
}

/// Basis of the center, found by cutting the candidate space down with one
/// commutator condition [x, D_i] = 0 at a time.
template <ExactField F>
std::vector<typename DeltaAlgebra<F>::Element> center_basis(const DeltaAlgebra<F>& alg) {
  using Element = typename DeltaAlgebra<F>::Element;
  const F& f = alg.field();
  std::size_t N = alg.dim();
  std::vector<Element> kernel;
  for (std::uint32_t i = 0; i < N; ++i) kernel.push_back(alg.basis_element(i));
  for (std::uint32_t g = N; g-- > 0 && !kernel.empty();) {
    Element dg = alg.basis_element(g);
    DenseMatrix<F> m(N, kernel.size(), f);
    bool all_zero = true;
    for (std::size_t t = 0; t < kernel.size(); ++t) {
      Element c = alg.sub(alg.mul(kernel[t], dg), alg.mul(dg, kernel[t]));
      for (std::size_t r = 0; r < N; ++r) {
        m(r, t) = c[r];
        all_zero = all_zero && f.is_zero(c[r]);
      }
    }
    if (all_zero) continue;
    std::vector<Element> next;
    for (const auto& lambda : nullspace(m)) {
      Element x = alg.zero();
      for (std::size_t t = 0; t < kernel.size(); ++t) {
        if (f.is_zero(lambda[t])) continue;
        for (std::size_t r = 0; r < N; ++r) f.add_mul(x[r], lambda[t], kernel[t][r]);
      }
      next.push_back(std::move(x));
    }
    kernel = std::move(next);
  }
  return kernel;
}

/// Basis of the Jacobson radical over ℚ: the kernel of the trace form
/// (x, y) -> tr(left multiplication by xy) on the algebra with a unit adjoined,
/// intersected with the algebra itself.
inline std::vector<DeltaAlgebra<RationalField>::Element> radical_basis(const DeltaAlgebra<RationalField>& alg) {
  RationalField q;
  std::size_t N = alg.dim();
  // trace[m] = tr(L_{D_m}) on the unitalization; the adjoined unit contributes N + 1.
  std::vector<Rational> trace(N);
  for (std::uint32_t m = 0; m < N; ++m) {
    for (std::uint32_t j = 0; j < N; ++j) {
      for (const auto& [idx, c] : alg.basis_product(m, j)) {
        if (idx == j) trace[m] += c;
      }
    }
  }
  DenseMatrix<RationalField> gram(N + 1, N + 1, q);
  gram(0, 0) = Rational(static_cast<std::int64_t>(N + 1));
  for (std::uint32_t a = 0; a < N; ++a) {
    gram(0, a + 1) = trace[a];
    gram(a + 1, 0) = trace[a];
    for (std::uint32_t b = 0; b < N; ++b) {
      Rational s;
      for (const auto& [idx, c] : alg.basis_product(a, b)) s.add_mul(c, trace[idx]);
      gram(a + 1, b + 1) = s;
    }
  }
  auto kernel = nullspace(gram);
  // Eliminate the adjoined-unit coordinate using one kernel vector that has it.
  auto pivot = std::find_if(kernel.begin(), kernel.end(), [](const auto& v) { return !v[0].is_zero(); });
  std::vector<DeltaAlgebra<RationalField>::Element> out;
  for (auto it = kernel.begin(); it != kernel.end(); ++it) {
    if (it == pivot) continue;
    auto v = *it;
    if (pivot != kernel.end() && !v[0].is_zero()) {
      Rational t = v[0] / (*pivot)[0];
      for (std::size_t i = 0; i <= N; ++i) v[i] -= t * (*pivot)[i];
    }
    out.emplace_back(v.begin() + 1, v.end());
  }
  return out;
}

inline std::size_t radical_dim(const DeltaAlgebra<RationalField>& alg) { return radical_basis(alg).size(); }

/// Checks (xy)z = x(yz) on basis triples: all of them when exhaustive, else
/// `samples` seeded random ones.
template <ExactField F>
Report associativity_check(const DeltaAlgebra<F>& alg, bool exhaustive, int samples, std::uint64_t seed) {
  Report report;
  report.name = "delta-associativity n=" + std::to_string(alg.degree()) + " field=" + alg.field().name();
  report.run("associativity", [&](CheckResult& c) {
    std::uint32_t N = static_cast<std::uint32_t>(alg.dim());
    auto check = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
      auto di = alg.basis_element(i), dj = alg.basis_element(j), dk = alg.basis_element(k);
      if (!alg.equal(alg.mul(alg.mul(di, dj), dk), alg.mul(di, alg.mul(dj, dk)))) {
        c.fail(alg.label_string(i) + " " + alg.label_string(j) + " " + alg.label_string(k));
      }
    };
    std::int64_t count = 0;
    if (exhaustive) {
      for (std::uint32_t i = 0; i < N; ++i) {
        for (std::uint32_t j = 0; j < N; ++j) {
          for (std::uint32_t k = 0; k < N; ++k, ++count) check(i, j, k);
        }
      }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::uint32_t> pick(0, N - 1);
      for (int s = 0; s < samples; ++s, ++count) {
        std::uint32_t i = pick(rng), j = pick(rng), k = pick(rng);
        check(i, j, k);
      }
    }
    c.record("triples", count);
  });
  return report;
}

/// The map D(B,A) -> nabla(B,A) is multiplicative on basis pairs, and its image
/// has dimension |Av_n(3)|.
template <ExactField F>
Report quotient_map_check(const DeltaAlgebra<F>& alg, bool exhaustive, int samples, std::uint64_t seed) {
  Report report;
  report.name = "delta-quotient n=" + std::to_string(alg.degree()) + " field=" + alg.field().name();
  const F& f = alg.field();
  int n = alg.degree();
  std::uint32_t N = static_cast<std::uint32_t>(alg.dim());
  std::vector<AlgebraElement<F>> images;
  for (std::uint32_t i = 0; i < N; ++i) images.push_back(nabla(alg.labels()[i].to, alg.labels()[i].from, f));
  report.run("multiplicative", [&](CheckResult& c) {
    auto check = [&](std::uint32_t i, std::uint32_t j) {
      auto lhs = alg.to_group_algebra(alg.mul(alg.basis_element(i), alg.basis_element(j)));
      if (!(lhs == images[i] * images[j])) c.fail(alg.label_string(i) + " " + alg.label_string(j));
    };
    if (exhaustive) {
      for (std::uint32_t i = 0; i < N; ++i) {
        for (std::uint32_t j = 0; j < N; ++j) check(i, j);
      }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::uint32_t> pick(0, N - 1);
      for (int s = 0; s < samples; ++s) {
        std::uint32_t i = pick(rng), j = pick(rng);
        check(i, j);
      }
    }
  });
  report.run("image-rank", [&](CheckResult& c) {
    SpanBasis<F> s = span_of(n, f, images);
    std::size_t expected = enumerate_avoiders(n, 3).size();
    c.record("image_rank", static_cast<std::int64_t>(s.rank()));
    c.record("avoiders", static_cast<std::int64_t>(expected));
    c.expect(s.rank() == expected, "image rank differs from |Av_n(3)|");
  });
  return report;
}

/// Summary statistics of the algebra.
struct DeltaStats {
  int n;
  std::size_t dim;
  std::size_t center_dim;
  std::optional<std::size_t> radical_dim;
  std::optional<std::string> unity;
  std::string note;
};

template <ExactField F>
DeltaStats delta_stats(int n, const F& field, bool unsafe_cap = false) {
  DeltaAlgebra<F> alg(n, field, unsafe_cap);
  DeltaStats s{n, alg.dim(), center_basis(alg).size(), std::nullopt, std::nullopt, ""};
  if constexpr (std::is_same_v<F, RationalField>) {
    s.radical_dim = radical_dim(alg);
  } else {
    s.note = "radical computed over Q only";
  }
  auto u = find_unity(alg);
  if (u.unity) s.unity = alg.format(*u.unity);
  if (!u.note.empty()) s.note = s.note.empty() ? u.note : s.note + "; " + u.note;
  return s;
}

}  // namespace rooksum
