#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/ideals.hpp"
#include "rooksum/matrix.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/report.hpp"
#include "rooksum/row_sums.hpp"
#include "rooksum/span.hpp"

namespace rooksum {

/// Integer partition with weakly decreasing positive parts. Text form "4+2+1".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i && parts_[i] > parts_[i - 1])) throw PreconditionError("not a partition");
    }
  }
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    while (!text.empty()) {
      auto plus = text.find('+');
      std::string tok(text.substr(0, plus));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw PreconditionError("bad partition '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(tok));
      if (plus == std::string_view::npos) break;
      text.remove_prefix(plus + 1);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  Partition transpose() const {
    std::vector<int> t;
    for (int j = 0; j < largest(); ++j) {
      int c = 0;
      for (int p : parts_) c += p > j;
      t.push_back(c);
    }
    return Partition(std::move(t));
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse lexicographic order (n, n-1+1, ...).
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Number of standard Young tableaux of shape lambda, by the hook length formula.
inline std::uint64_t f_lambda(const Partition& lambda) {
  Partition t = lambda.transpose();
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      den *= (lambda.parts()[i] - j - 1) + (t.parts()[j] - i - 1) + 1;
    }
  }
  return mpz_class(num / den).get_ui();
}

/// Number of standard Young tableaux of shape lambda, by removing corners
/// recursively. Independent of f_lambda().
inline std::uint64_t count_syt(const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  std::function<std::uint64_t(std::vector<int>&)> rec = [&](std::vector<int>& p) -> std::uint64_t {
    bool empty = true;
    for (int x : p) empty = empty && x == 0;
    if (empty) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool corner = p[i] > 0 && (i + 1 == p.size() || p[i + 1] < p[i]);
      if (!corner) continue;
      --p[i];
      total += rec(p);
      ++p[i];
    }
    return total;
  };
  return rec(parts);
}

/// |Av_n(k+1)| = sum over lambda with at most k rows of (f^lambda)^2, and the
/// same with at most k columns.
inline Report count_identity_check(int n, int k) {
  Report report;
  report.name = "count-identity n=" + std::to_string(n) + " k=" + std::to_string(k);
  report.run("count", [&](CheckResult& c) {
    std::int64_t lhs = static_cast<std::int64_t>(enumerate_avoiders(n, k + 1).size());
    std::int64_t by_rows = 0, by_cols = 0;
    for (const Partition& p : partitions(n)) {
      std::int64_t f = static_cast<std::int64_t>(f_lambda(p));
      if (p.length() <= k) by_rows += f * f;
      if (p.largest() <= k) by_cols += f * f;
    }
    c.record("avoiders", lhs);
    c.record("sum_rows", by_rows);
    c.record("sum_cols", by_cols);
    c.expect(lhs == by_rows && lhs == by_cols, "count mismatch");
  });
  return report;
}

/// |Av_n(k+1) ∩ Av'_n(l+1)| = sum over lambda with at most k rows and at most l
/// columns of (f^lambda)^2.
inline Report two_sided_count_check(int n, int k, int l) {
  Report report;
  report.name = "two-sided-count n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
  report.run("count", [&](CheckResult& c) {
    check_cap("two-sided count", n, kEnumerationCap);
    std::int64_t lhs = 0;
    for (const Permutation& w : all_permutations(n)) lhs += avoids_increasing(w, k + 1) && avoids_decreasing(w, l + 1);
    std::int64_t rhs = 0;
    for (const Partition& p : partitions(n)) {
      std::int64_t f = static_cast<std::int64_t>(f_lambda(p));
      if (p.length() <= k && p.largest() <= l) rhs += f * f;
    }
    c.record("avoiders", lhs);
    c.record("sum", rhs);
    c.expect(lhs == rhs, "count mismatch");
  });
  return report;
}

inline constexpr int kTensorCap = 5;
inline constexpr int kTensorPowerCap = 3;
inline constexpr int kSpechtCap = 5;

/// Left S_n-module with a permutation basis, stored as the action of the
/// adjacent transpositions s_1, ..., s_{n-1} on basis indices. Arbitrary
/// permutations act through a reduced word.
class ModuleAction {
 public:
  ModuleAction(int n, std::size_t dim, std::vector<std::vector<std::uint32_t>> generators, std::string label)
      : n_(n), dim_(dim), gens_(std::move(generators)), label_(std::move(label)) {
    if (static_cast<int>(gens_.size()) != std::max(0, n - 1)) throw PreconditionError("need n-1 generators");
    for (const auto& g : gens_) {
      if (g.size() != dim_) throw PreconditionError("generator has wrong length");
    }
  }

  int degree() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<std::uint32_t>& generator(int i) const { return gens_.at(i); }

  /// Index images of the basis under w.
  std::vector<std::uint32_t> act(const Permutation& w) const {
    std::vector<std::uint32_t> img(dim_);
    for (std::size_t j = 0; j < dim_; ++j) img[j] = static_cast<std::uint32_t>(j);
    // w = s_{i_m} ... s_{i_1}, where i_1, i_2, ... are found by sorting w with
    // adjacent swaps of positions; s_{i_1} acts first.
    std::vector<std::uint8_t> cur = w.images();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < n_; ++i) {
        if (cur[i] > cur[i + 1]) {
          std::swap(cur[i], cur[i + 1]);
          for (auto& x : img) x = gens_[i][x];
          changed = true;
        }
      }
    }
    return img;
  }

  /// Generators satisfy the Coxeter relations of S_n.
  bool satisfies_coxeter_relations() const {
    auto apply = [&](const std::vector<int>& word) {
      std::vector<std::uint32_t> img(dim_);
      for (std::size_t j = 0; j < dim_; ++j) img[j] = static_cast<std::uint32_t>(j);
      for (int i : word) {
        for (auto& x : img) x = gens_[i][x];
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        if (img[j] != j) return false;
      }
      return true;
    };
    for (int i = 0; i + 1 < n_; ++i) {
      if (!apply({i, i})) return false;
      if (i + 2 < n_ && !apply({i, i + 1, i, i + 1, i, i + 1})) return false;
      for (int j = i + 2; j + 1 < n_; ++j) {
        if (!apply({i, j, i, j})) return false;
      }
    }
    return true;
  }

 private:
  int n_;
  std::size_t dim_;
  std::vector<std::vector<std::uint32_t>> gens_;
  std::string label_;
};

/// S_n permuting the tensor factors of V^{⊗n}, dim V = k:
/// sigma (v_1 ⊗ ... ⊗ v_n) = v_{sigma^{-1}(1)} ⊗ ... ⊗ v_{sigma^{-1}(n)}.
/// Basis index of e_{i_1} ⊗ ... ⊗ e_{i_n} is sum_p i_p k^p.
inline ModuleAction place_action(int n, int k, bool unsafe_cap = false) {
  check_cap("tensor module", n, kTensorCap, unsafe_cap);
  if (!unsafe_cap && k > kTensorPowerCap) throw CapExceeded("tensor module dimension", k, kTensorPowerCap);
  if (k < 1) throw PreconditionError("tensor factor dimension must be positive");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(k);
  std::vector<std::vector<std::uint32_t>> gens;
  for (int g = 0; g + 1 < n; ++g) {
    std::vector<std::uint32_t> img(dim);
    std::size_t lo = 1;
    for (int i = 0; i < g; ++i) lo *= static_cast<std::size_t>(k);
    std::size_t hi = lo * static_cast<std::size_t>(k);
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t a = (x / lo) % k, b = (x / hi) % k;
      img[x] = static_cast<std::uint32_t>(x - a * lo - b * hi + b * lo + a * hi);
    }
    gens.push_back(std::move(img));
  }
  return ModuleAction(n, dim, std::move(gens), "place n=" + std::to_string(n) + " k=" + std::to_string(k));
}

/// S_n acting diagonally on N^{⊗k}, N the natural permutation module of dim n:
/// sigma (e_{i_1} ⊗ ... ⊗ e_{i_k}) = e_{sigma(i_1)} ⊗ ... ⊗ e_{sigma(i_k)}.
inline ModuleAction entry_action(int n, int k, bool unsafe_cap = false) {
  check_cap("tensor module", n, kTensorCap, unsafe_cap);
  if (!unsafe_cap && k > kTensorPowerCap) throw CapExceeded("tensor module power", k, kTensorPowerCap);
  if (k < 0) throw PreconditionError("tensor power must be non-negative");
  std::size_t dim = 1;
  for (int i = 0; i < k; ++i) dim *= static_cast<std::size_t>(n);
  std::vector<std::vector<std::uint32_t>> gens;
  for (int g = 0; g + 1 < n; ++g) {
    std::vector<std::uint32_t> img(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t y = 0, rest = x, place = 1;
      for (int p = 0; p < k; ++p) {
        std::size_t i = rest % n;
        rest /= n;
        if (i == static_cast<std::size_t>(g)) {
          i = g + 1;
        } else if (i == static_cast<std::size_t>(g + 1)) {
          i = g;
        }
        y += i * place;
        place *= static_cast<std::size_t>(n);
      }
      img[x] = static_cast<std::uint32_t>(y);
    }
    gens.push_back(std::move(img));
  }
  return ModuleAction(n, dim, std::move(gens), "entry n=" + std::to_string(n) + " k=" + std::to_string(k));
}

/// Matrix of a in the module: column j is the image of basis vector j.
template <ExactField F>
DenseMatrix<F> apply_element(const ModuleAction& rho, const AlgebraElement<F>& a) {
  if (a.degree() != rho.degree()) throw PreconditionError("element degree does not match module");
  const F& f = a.field();
  const SymmetricGroup& G = SymmetricGroup::of(a.degree());
  DenseMatrix<F> m(rho.dim(), rho.dim(), f);
  for (const auto& [r, c] : a.terms()) {
    auto img = rho.act(G.element(r));
    for (std::size_t j = 0; j < rho.dim(); ++j) m(img[j], j) = f.add(m(img[j], j), c);
  }
  return m;
}

namespace detail {

/// Rank of {rho(w) : w in ws} inside End(M), via the index images.
template <ExactField F>
std::size_t image_rank(const ModuleAction& rho, const std::vector<Permutation>& ws, const F& field) {
  std::size_t d = rho.dim();
  SpanBasis<F> s(d * d, field);
  for (const Permutation& w : ws) {
    std::vector<typename F::value_type> v(d * d, field.zero());
    auto img = rho.act(w);
    for (std::size_t j = 0; j < d; ++j) v[img[j] * d + j] = field.one();
    s.insert(std::move(v));
    if (s.is_full()) break;
  }
  return s.rank();
}

template <ExactField F>
void check_annihilates(CheckResult& c, const ModuleAction& rho, const IdealBasis<F>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!apply_element(rho, basis.elements[i]).is_zero()) c.fail("does not annihilate: " + basis.leading[i].to_string());
  }
}

}  // namespace detail

/// J_k annihilates V^{⊗n} (dim V = k); the image of k[S_n] in End has rank
/// |Av_n(k+1)|, and both avoider families map to bases of the image.
template <ExactField F>
Report annihilator_check_place(int n, int k, const F& field, bool unsafe_cap = false) {
  Report report;
  report.name = "place-annihilator n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  ModuleAction rho = place_action(n, k, unsafe_cap);
  report.run("relations", [&](CheckResult& c) { c.expect(rho.satisfies_coxeter_relations(), "Coxeter relations fail"); });
  report.run("annihilates", [&](CheckResult& c) {
    detail::check_annihilates(c, rho, antisymmetrizer_ideal_basis(n, k, field));
  });
  report.run("image-rank", [&](CheckResult& c) {
    auto all = all_permutations(n);
    auto inc = enumerate_avoiders(n, k + 1);
    auto dec = enumerate_decreasing_avoiders(n, k + 1);
    std::size_t full = detail::image_rank(rho, all, field);
    std::size_t r_inc = detail::image_rank(rho, inc, field);
    std::size_t r_dec = detail::image_rank(rho, dec, field);
    c.record("image_rank", static_cast<std::int64_t>(full));
    c.record("avoiders", static_cast<std::int64_t>(inc.size()));
    c.record("increasing_avoider_rank", static_cast<std::int64_t>(r_inc));
    c.record("decreasing_avoider_rank", static_cast<std::int64_t>(r_dec));
    c.expect(full == inc.size(), "image rank differs from |Av_n(k+1)|");
    c.expect(r_inc == inc.size() && r_dec == dec.size(), "avoider images are not independent");
  });
  return report;
}

/// The sign twist of I_{n-k-1} annihilates N^{⊗k}; the image has rank
/// n! - |Av_n(n-k)|, spanned independently by the permutations containing
/// 12...(n-k), and also by those containing (n-k)...21.
template <ExactField F>
Report annihilator_check_entry(int n, int k, const F& field, bool unsafe_cap = false) {
  Report report;
  report.name = "entry-annihilator n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  ModuleAction rho = entry_action(n, k, unsafe_cap);
  report.run("relations", [&](CheckResult& c) { c.expect(rho.satisfies_coxeter_relations(), "Coxeter relations fail"); });
  report.run("annihilates", [&](CheckResult& c) {
    detail::check_annihilates(c, rho, sign_twisted(row_sum_ideal_basis_extended(n, n - k - 1, field)));
  });
  report.run("image-rank", [&](CheckResult& c) {
    std::vector<Permutation> all = all_permutations(n), contain_inc, contain_dec;
    std::size_t avoiders = 0;
    for (const Permutation& w : all) {
      avoiders += avoids_increasing(w, n - k);
      if (!avoids_increasing(w, n - k)) contain_inc.push_back(w);
      if (!avoids_decreasing(w, n - k)) contain_dec.push_back(w);
    }
    std::size_t expected = all.size() - avoiders;
    std::size_t full = detail::image_rank(rho, all, field);
    c.record("image_rank", static_cast<std::int64_t>(full));
    c.record("expected", static_cast<std::int64_t>(expected));
    c.expect(full == expected, "image rank differs from n! - |Av_n(n-k)|");
    c.expect(detail::image_rank(rho, contain_inc, field) == contain_inc.size(), "increasing containers dependent");
    c.expect(detail::image_rank(rho, contain_dec, field) == contain_dec.size(), "decreasing containers dependent");
  });
  return report;
}

/// Row symmetrizer and column antisymmetrizer of the row-reading tableau of
/// shape lambda (cells numbered 1..n along rows).
template <ExactField F>
std::pair<AlgebraElement<F>, AlgebraElement<F>> young_symmetrizers(const Partition& lambda, const F& field) {
  int n = lambda.size();
  std::vector<std::vector<int>> cell(lambda.length());
  int next = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) cell[i].push_back(next++);
  }
  std::vector<int> row_of(n), col_of(n);
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      row_of[cell[i][j]] = i;
      col_of[cell[i][j]] = j;
    }
  }
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<typename AlgebraElement<F>::Term> rows, cols;
  for (std::uint32_t r = 0; r < G.order(); ++r) {
    const Permutation& w = G.element(r);
    bool keeps_rows = true, keeps_cols = true;
    for (int x = 0; x < n; ++x) {
      keeps_rows = keeps_rows && row_of[w[x]] == row_of[x];
      keeps_cols = keeps_cols && col_of[w[x]] == col_of[x];
    }
    if (keeps_rows) rows.emplace_back(r, field.one());
    if (keeps_cols) cols.emplace_back(r, G.sign(r) > 0 ? field.one() : field.neg(field.one()));
  }
  return {AlgebraElement<F>::from_terms(n, field, std::move(rows)),
          AlgebraElement<F>::from_terms(n, field, std::move(cols))};
}

/// For every lambda ⊢ n: I_k kills A a_lambda b_lambda when lambda has more
/// than k rows, and J_k kills it when lambda has at most k rows. The rank of
/// A a_lambda b_lambda is recorded.
template <ExactField F>
Report specht_annihilation_check(int n, int k, const F& field, bool unsafe_cap = false) {
  check_cap("Specht check", n, kSpechtCap, unsafe_cap);
  Report report;
  report.name = "specht n=" + std::to_string(n) + " k=" + std::to_string(k) + " field=" + field.name();
  auto I = row_sum_ideal_basis(n, k, field);
  auto J = antisymmetrizer_ideal_basis(n, k, field);
  const SymmetricGroup& G = SymmetricGroup::of(n);
  for (const Partition& lambda : partitions(n)) {
    report.run(lambda.to_string(), [&](CheckResult& c) {
      auto [a, b] = young_symmetrizers(lambda, field);
      AlgebraElement<F> x = a * b;
      SpanBasis<F> module(G.order(), field);
      for (std::uint32_t r = 0; r < G.order() && module.rank() < G.order(); ++r) {
        module.insert(left_multiply(G.element(r), x).to_dense());
      }
      c.record("module_rank", static_cast<std::int64_t>(module.rank()));
      c.record("f_lambda", static_cast<std::int64_t>(f_lambda(lambda)));
      const IdealBasis<F>& killer = lambda.length() > k ? I : J;
      c.note = lambda.length() > k ? "row-sum ideal" : "antisymmetrizer ideal";
      for (std::size_t i = 0; i < killer.size(); ++i) {
        for (const auto& y : module.rows()) {
          if (!(killer.elements[i] * element_from_vector(n, field, y)).is_zero()) {
            c.fail("does not annihilate: " + killer.leading[i].to_string());
            break;
          }
        }
      }
    });
  }
  return report;
}

}  // namespace rooksum
