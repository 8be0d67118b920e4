#pragma once

#include <random>
#include <string>
#include <vector>

#include "rooksum/report.hpp"
#include "rooksum/rook.hpp"

namespace rooksum {

namespace detail {

inline Subset random_subset_with_size(int n, int size, std::mt19937_64& rng) {
  Permutation p = random_permutation(n, rng);
  std::uint32_t m = 0;
  for (int i = 0; i < size; ++i) m |= 1u << p[i];
  return Subset(n, m);
}

template <ExactField F>
void compare_product_rules(CheckResult& c, const Subset& d, const Subset& cc, const Subset& b, const Subset& a,
                           const F& field, std::int64_t& matches) {
  auto direct = nabla(d, cc, field) * nabla(b, a, field);
  std::string bad;
  if (product_rule_a(d, cc, b, a, field) != direct) bad += "a";
  if (product_rule_b(d, cc, b, a, field) != direct) bad += "b";
  if (product_rule_c(d, cc, b, a, field) != direct) bad += "c";
  if (bad.empty()) {
    ++matches;
  } else {
    c.fail("forms " + bad + " differ at D=" + d.to_string() + " C=" + cc.to_string() + " B=" + b.to_string() +
           " A=" + a.to_string());
  }
}

}  // namespace detail

/// Compares the three closed forms of nabla(D,C) nabla(B,A) with the direct
/// product, over every quadruple with |D| = |C|, |B| = |A| (exhaustive) or
/// over `trials` seeded random quadruples.
template <ExactField F>
Report product_rule_check(int n, bool exhaustive, int trials, std::uint64_t seed, const F& field) {
  check_cap("product rule", n, kProductRuleCap);
  Report report;
  report.name = "product-rules n=" + std::to_string(n);
  report.run("forms-agree", [&](CheckResult& c) {
    std::int64_t total = 0, matches = 0;
    if (exhaustive) {
      auto subs = all_subsets(n);
      for (const Subset& d : subs) {
        for (const Subset& cc : subs) {
          if (d.size() != cc.size()) continue;
          for (const Subset& b : subs) {
            for (const Subset& a : subs) {
              if (b.size() != a.size()) continue;
              ++total;
              detail::compare_product_rules(c, d, cc, b, a, field, matches);
            }
          }
        }
      }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> size(0, n);
      for (int t = 0; t < trials; ++t) {
        int s = size(rng), r = size(rng);
        Subset d = detail::random_subset_with_size(n, s, rng), cc = detail::random_subset_with_size(n, s, rng);
        Subset b = detail::random_subset_with_size(n, r, rng), a = detail::random_subset_with_size(n, r, rng);
        ++total;
        detail::compare_product_rules(c, d, cc, b, a, field, matches);
      }
    }
    c.record("quadruples", total);
    c.record("matches", matches);
  });
  return report;
}

/// For every pair (B, D) the containment product vanishes; for each D and
/// `samples` seeded random weight vectors on the |D|-subsets, both triangular
/// products vanish. Weights are integers in [-range, range] divided by 1..range.
inline Report triangularity_check(int n, int samples, std::uint64_t seed, int range = 5) {
  RationalField q;
  Report report;
  report.name = "triangularity n=" + std::to_string(n);
  auto subs = all_subsets(n);
  report.run("containment", [&](CheckResult& c) {
    std::int64_t pairs = 0;
    for (const Subset& b : subs) {
      for (const Subset& d : subs) {
        ++pairs;
        if (!containment_annihilation(b, d, q).is_zero()) c.fail("nonzero at B=" + b.to_string() + " D=" + d.to_string());
      }
    }
    c.record("pairs", pairs);
  });
  if (samples > 0) {
    report.run("weighted", [&](CheckResult& c) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> num(-range, range), den(1, range);
      std::int64_t products = 0;
      for (const Subset& d : subs) {
        auto keys = subsets_of_size(n, d.size());
        for (int s = 0; s < samples; ++s) {
          SubsetWeights<RationalField> alpha;
          for (const Subset& k : keys) {
            int x = num(rng), y = den(rng);
            if (x != 0) alpha[k] = Rational(x, y);
          }
          products += 2;
          if (!triangular_annihilation(d, alpha, q).is_zero()) c.fail("nonzero at D=" + d.to_string());
          if (!triangular_annihilation_mirrored(d, alpha, q).is_zero()) c.fail("mirrored nonzero at D=" + d.to_string());
        }
      }
      c.record("products", products);
    });
  }
  return report;
}

}  // namespace rooksum
