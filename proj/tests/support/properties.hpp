#pragma once

// Algebraic identities checked exhaustively for small n (seeded sampling where
// the exhaustive space is too large). Shared by the property test binary and
// the acceptance gate.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rooksum/rooksum.hpp"

namespace props {

using namespace rooksum;
using Q = RationalField;
using Elem = AlgebraElement<Q>;

struct Config {
  int max_n = 4;
  std::uint64_t seed = 1;
  int samples = 200;
};

inline std::string pair_string(const Subset& b, const Subset& a) { return b.to_string() + "," + a.to_string(); }

/// All length-len set decompositions of [n] (ordered, empty blocks allowed).
inline std::vector<SetDecomposition> decompositions(int n, int len) {
  std::vector<SetDecomposition> out;
  std::vector<int> label(n, 0);
  while (true) {
    std::vector<std::uint32_t> masks(len, 0);
    for (int i = 0; i < n; ++i) masks[label[i]] |= 1u << i;
    std::vector<Subset> blocks;
    for (auto m : masks) blocks.emplace_back(n, m);
    out.emplace_back(n, std::move(blocks));
    int i = 0;
    while (i < n && ++label[i] == len) label[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Elem random_element(int n, std::mt19937_64& rng) { return rooksum::random_element(n, Q{}, rng, 0.4, 4); }

inline Report antipode_involution(const Config& cfg) {
  Report r{"antipode-involution", {}};
  r.run("involution", [&](CheckResult& c) {
    std::mt19937_64 rng(cfg.seed);
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (const auto& w : all_permutations(n)) {
        Elem b = Elem::basis(w, Q{});
        c.expect(antipode(b) == Elem::basis(inverse(w), Q{}), "S(w) != w^-1 for " + w.to_string());
      }
      for (int s = 0; s < cfg.samples; ++s) {
        Elem a = random_element(n, rng);
        c.expect(antipode(antipode(a)) == a, "S(S(a)) != a at n=" + std::to_string(n));
      }
    }
  });
  return r;
}

inline Report antipode_anti_homomorphism(const Config& cfg) {
  Report r{"antipode-anti-homomorphism", {}};
  r.run("reverses-products", [&](CheckResult& c) {
    std::mt19937_64 rng(cfg.seed);
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int s = 0; s < cfg.samples; ++s) {
        Elem a = random_element(n, rng), b = random_element(n, rng);
        c.expect(antipode(a * b) == antipode(b) * antipode(a), "S(ab) != S(b)S(a) at n=" + std::to_string(n));
      }
    }
  });
  return r;
}

inline Report sign_twist_homomorphism(const Config& cfg) {
  Report r{"sign-twist-homomorphism", {}};
  r.run("multiplicative", [&](CheckResult& c) {
    std::mt19937_64 rng(cfg.seed);
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int s = 0; s < cfg.samples; ++s) {
        Elem a = random_element(n, rng), b = random_element(n, rng);
        c.expect(sign_twist(a * b) == sign_twist(a) * sign_twist(b), "T(ab) != T(a)T(b) at n=" + std::to_string(n));
        c.expect(sign_twist(sign_twist(a)) == a, "T(T(a)) != a at n=" + std::to_string(n));
      }
    }
  });
  r.run("antisymmetrizer-becomes-symmetrizer", [&](CheckResult& c) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (const Subset& u : all_subsets(n)) {
        c.expect(sign_twist(antisymmetrizer(u, Q{})) == symmetrizer(u, Q{}), u.to_string());
      }
    }
  });
  return r;
}

inline Report dot_product_identities(const Config& cfg) {
  Report r{"dot-product-identities", {}};
  std::mt19937_64 rng(cfg.seed);
  r.run("identity-coefficient-forms", [&](CheckResult& c) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int s = 0; s < cfg.samples; ++s) {
        Elem a = random_element(n, rng), b = random_element(n, rng);
        Rational d = dot(a, b);
        c.expect(d == (antipode(a) * b).coeff_one(), "<a,b> != coeff1(S(a)b)");
        c.expect(d == (b * antipode(a)).coeff_one(), "<a,b> != coeff1(bS(a))");
        c.expect(d == (antipode(b) * a).coeff_one(), "<a,b> != coeff1(S(b)a)");
        c.expect(d == (a * antipode(b)).coeff_one(), "<a,b> != coeff1(aS(b))");
      }
    }
  });
  r.run("antipode-invariant", [&](CheckResult& c) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int s = 0; s < cfg.samples; ++s) {
        Elem a = random_element(n, rng), b = random_element(n, rng);
        c.expect(dot(a, b) == dot(antipode(a), antipode(b)), "<a,b> != <S(a),S(b)>");
      }
    }
  });
  r.run("complement-commutes-with-antipode", [&](CheckResult& c) {
    // For a random family X: orthogonal complement of S(X) equals S of the complement of X.
    for (int n = 1; n <= cfg.max_n; ++n) {
      std::size_t N = factorial(n);
      for (int s = 0; s < 10; ++s) {
        std::vector<Elem> family;
        for (int i = 0; i < 3; ++i) family.push_back(random_element(n, rng));
        auto complement = [&](const std::vector<Elem>& xs) {
          std::vector<std::vector<Rational>> rows;
          for (const auto& x : xs) rows.push_back(x.to_dense());
          std::vector<Elem> out;
          for (const auto& v : nullspace(DenseMatrix<Q>::from_rows(rows, N, Q{}))) {
            out.push_back(element_from_vector(n, Q{}, v));
          }
          return out;
        };
        std::vector<Elem> twisted;
        for (const auto& x : family) twisted.push_back(antipode(x));
        std::vector<Elem> lhs = complement(twisted);
        std::vector<Elem> rhs;
        for (const auto& x : complement(family)) rhs.push_back(antipode(x));
        c.expect(same_span(span_of(n, Q{}, lhs), span_of(n, Q{}, rhs)), "complement mismatch at n=" + std::to_string(n));
      }
    }
  });
  return r;
}

/// Runs body(n, B, A) over all subset pairs for n <= max_n.
inline void for_subset_pairs(int max_n, const std::function<void(int, const Subset&, const Subset&)>& body) {
  for (int n = 1; n <= max_n; ++n) {
    auto subs = all_subsets(n);
    for (const auto& b : subs) {
      for (const auto& a : subs) body(n, b, a);
    }
  }
}

inline Report rook_zero_when_sizes_differ(const Config& cfg) {
  Report r{"rook-zero-when-sizes-differ", {}};
  r.run("exact", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      if (a.size() != b.size()) c.expect(nabla(b, a, Q{}).is_zero(), pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_containment_zero_when_too_large(const Config& cfg) {
  Report r{"rook-containment-zero-when-too-large", {}};
  r.run("containment", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      if (a.size() > b.size()) c.expect(nabla_tilde(b, a, Q{}).is_zero(), pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_containment_expands(const Config& cfg) {
  Report r{"rook-containment-expands-over-subsets", {}};
  r.run("expansion", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int n, const Subset& b, const Subset& a) {
      Elem sum(n, Q{});
      for (const Subset& u : subsets_of(b)) {
        if (u.size() == a.size()) sum = sum + nabla(u, a, Q{});
      }
      c.expect(nabla_tilde(b, a, Q{}) == sum, pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_complement_symmetry(const Config& cfg) {
  Report r{"rook-complement-symmetry", {}};
  r.run("complement", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      c.expect(nabla(b, a, Q{}) == nabla(b.complement(), a.complement(), Q{}), pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_equal_sizes_agree(const Config& cfg) {
  Report r{"rook-containment-equals-exact-for-equal-sizes", {}};
  r.run("equal-sizes", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      if (a.size() == b.size()) c.expect(nabla(b, a, Q{}) == nabla_tilde(b, a, Q{}), pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_antipode_swaps(const Config& cfg) {
  Report r{"rook-antipode-swaps-indices", {}};
  r.run("antipode", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      c.expect(antipode(nabla(b, a, Q{})) == nabla(a, b, Q{}), pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_antipode_containment(const Config& cfg) {
  Report r{"rook-antipode-of-containment-sum", {}};
  r.run("antipode", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int, const Subset& b, const Subset& a) {
      c.expect(antipode(nabla_tilde(b, a, Q{})) == nabla_tilde(a.complement(), b.complement(), Q{}),
               pair_string(b, a));
    });
  });
  return r;
}

inline Report rook_left_translation(const Config& cfg) {
  Report r{"rook-left-translation", {}};
  r.run("left", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int n, const Subset& b, const Subset& a) {
      for (const auto& u : all_permutations(n)) {
        Elem ue = Elem::basis(u, Q{});
        c.expect(ue * nabla(b, a, Q{}) == nabla(image(u, b), a, Q{}), u.to_string() + " " + pair_string(b, a));
        c.expect(ue * nabla_tilde(b, a, Q{}) == nabla_tilde(image(u, b), a, Q{}),
                 "containment " + u.to_string() + " " + pair_string(b, a));
      }
    });
  });
  return r;
}

inline Report rook_right_translation(const Config& cfg) {
  Report r{"rook-right-translation", {}};
  r.run("right", [&](CheckResult& c) {
    for_subset_pairs(cfg.max_n, [&](int n, const Subset& b, const Subset& a) {
      for (const auto& u : all_permutations(n)) {
        Elem ue = Elem::basis(u, Q{});
        Subset pre = image(inverse(u), a);
        c.expect(nabla(b, a, Q{}) * ue == nabla(b, pre, Q{}), u.to_string() + " " + pair_string(b, a));
        c.expect(nabla_tilde(b, a, Q{}) * ue == nabla_tilde(b, pre, Q{}),
                 "containment " + u.to_string() + " " + pair_string(b, a));
      }
    });
  });
  return r;
}

/// Runs body over all pairs of equal-length decompositions, lengths 1..3.
inline void for_decomposition_pairs(int max_n,
                                    const std::function<void(const SetDecomposition&, const SetDecomposition&)>& body) {
  for (int n = 1; n <= max_n; ++n) {
    for (int len = 1; len <= 3; ++len) {
      auto ds = decompositions(n, len);
      for (const auto& to : ds) {
        for (const auto& from : ds) body(to, from);
      }
    }
  }
}

inline std::string decomposition_pair(const SetDecomposition& to, const SetDecomposition& from) {
  return to.to_string() + " " + from.to_string();
}

inline Report row_sum_zero_when_sizes_differ(const Config& cfg) {
  Report r{"row-sum-zero-when-block-sizes-differ", {}};
  r.run("sizes", [&](CheckResult& c) {
    for_decomposition_pairs(cfg.max_n, [&](const SetDecomposition& to, const SetDecomposition& from) {
      if (to.block_sizes() != from.block_sizes()) {
        c.expect(row_sum(to, from, Q{}).is_zero(), decomposition_pair(to, from));
      }
    });
  });
  return r;
}

inline Report row_sum_block_permutation(const Config& cfg) {
  Report r{"row-sum-block-permutation-invariant", {}};
  r.run("permute-blocks", [&](CheckResult& c) {
    for_decomposition_pairs(cfg.max_n, [&](const SetDecomposition& to, const SetDecomposition& from) {
      Elem base = row_sum(to, from, Q{});
      for (const auto& sigma : all_permutations(to.length())) {
        std::vector<Subset> tb, fb;
        for (int i = 0; i < to.length(); ++i) {
          tb.push_back(to.block(sigma[i]));
          fb.push_back(from.block(sigma[i]));
        }
        SetDecomposition to2(to.ground_size(), tb), from2(from.ground_size(), fb);
        c.expect(row_sum(to2, from2, Q{}) == base, decomposition_pair(to, from) + " by " + sigma.to_string());
      }
    });
  });
  return r;
}

inline Report row_sum_strip_empty(const Config& cfg) {
  Report r{"row-sum-aligned-empty-blocks-removable", {}};
  r.run("strip", [&](CheckResult& c) {
    for_decomposition_pairs(cfg.max_n, [&](const SetDecomposition& to, const SetDecomposition& from) {
      std::vector<Subset> tb, fb;
      for (int i = 0; i < to.length(); ++i) {
        if (to.block(i).empty() && from.block(i).empty()) continue;
        tb.push_back(to.block(i));
        fb.push_back(from.block(i));
      }
      if (static_cast<int>(tb.size()) == to.length() || tb.empty()) return;
      SetDecomposition to2(to.ground_size(), tb), from2(from.ground_size(), fb);
      c.expect(row_sum(to2, from2, Q{}) == row_sum(to, from, Q{}), decomposition_pair(to, from));
    });
  });
  return r;
}

inline Report row_sum_antipode(const Config& cfg) {
  Report r{"row-sum-antipode-swaps", {}};
  r.run("antipode", [&](CheckResult& c) {
    for_decomposition_pairs(cfg.max_n, [&](const SetDecomposition& to, const SetDecomposition& from) {
      c.expect(antipode(row_sum(to, from, Q{})) == row_sum(from, to, Q{}), decomposition_pair(to, from));
    });
  });
  return r;
}

inline Report row_sum_two_sided_translation(const Config& cfg) {
  Report r{"row-sum-two-sided-translation", {}};
  r.run("translation", [&](CheckResult& c) {
    auto check = [&](const Permutation& u, const SetDecomposition& to, const SetDecomposition& from,
                     const Permutation& v) {
      Elem lhs = Elem::basis(u, Q{}) * row_sum(to, from, Q{}) * Elem::basis(v, Q{});
      c.expect(lhs == row_sum(act(u, to), act(inverse(v), from), Q{}),
               u.to_string() + " " + decomposition_pair(to, from) + " " + v.to_string());
    };
    for (int n = 1; n <= std::min(cfg.max_n, 3); ++n) {
      auto perms = all_permutations(n);
      for (int len = 1; len <= 3; ++len) {
        auto ds = decompositions(n, len);
        for (const auto& to : ds) {
          for (const auto& from : ds) {
            for (const auto& u : perms) {
              for (const auto& v : perms) check(u, to, from, v);
            }
          }
        }
      }
    }
    std::mt19937_64 rng(cfg.seed);
    for (int n = 4; n <= cfg.max_n; ++n) {
      for (int s = 0; s < 10 * cfg.samples; ++s) {
        int len = 1 + static_cast<int>(rng() % 3);
        auto to = detail::random_decomposition(n, len, rng);
        auto from = detail::random_decomposition(n, len, rng);
        check(random_permutation(n, rng), to, from, random_permutation(n, rng));
      }
    }
  });
  return r;
}

inline Report antisymmetrizer_conjugation(const Config& cfg) {
  Report r{"antisymmetrizer-conjugation", {}};
  r.run("conjugation", [&](CheckResult& c) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (const Subset& u : all_subsets(n)) {
        Elem anti = antisymmetrizer(u, Q{});
        for (const auto& v : all_permutations(n)) {
          Elem ve = Elem::basis(v, Q{});
          c.expect(ve * anti == antisymmetrizer(image(v, u), Q{}) * ve, v.to_string() + " " + u.to_string());
        }
        c.expect(antipode(anti) == anti, "antipode fixes " + u.to_string());
      }
    }
  });
  return r;
}

inline Report antisymmetrizer_right_ideal_containment(const Config& cfg) {
  Report r{"antisymmetrizer-right-ideal-containment", {}};
  r.run("containment", [&](CheckResult& c) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      auto perms = all_permutations(n);
      for (const Subset& u : all_subsets(n)) {
        std::vector<Elem> big;
        for (const auto& w : perms) big.push_back(antisymmetrizer(u, Q{}) * Elem::basis(w, Q{}));
        for (const Subset& v : subsets_of(u)) {
          std::vector<Elem> small;
          for (const auto& w : perms) small.push_back(antisymmetrizer(v, Q{}) * Elem::basis(w, Q{}));
          SpanBasis<Q> target = span_of(n, Q{}, small);
          for (const auto& x : big) c.expect(target.contains(x.to_dense()), u.to_string() + " over " + v.to_string());
        }
      }
    }
  });
  return r;
}

inline Report binomial_alternating_sum(const Config&) {
  Report r{"binomial-alternating-sum", {}};
  r.run("identity", [&](CheckResult& c) {
    for (int n = 0; n <= 12; ++n) {
      for (int k = 0; k <= 12; ++k) {
        std::int64_t s = 0;
        for (int r2 = 0; r2 <= n; ++r2) s += ((r2 - k) % 2 == 0 ? 1 : -1) * binomial(n, r2) * binomial(r2, k);
        c.expect(s == (n == k ? 1 : 0), "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  });
  return r;
}

struct Suite {
  const char* name;
  Report (*run)(const Config&);
};

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"antipode-involution", antipode_involution},
      {"antipode-anti-homomorphism", antipode_anti_homomorphism},
      {"sign-twist-homomorphism", sign_twist_homomorphism},
      {"dot-product-identities", dot_product_identities},
      {"rook-zero-when-sizes-differ", rook_zero_when_sizes_differ},
      {"rook-containment-zero-when-too-large", rook_containment_zero_when_too_large},
      {"rook-containment-expands-over-subsets", rook_containment_expands},
      {"rook-complement-symmetry", rook_complement_symmetry},
      {"rook-containment-equals-exact-for-equal-sizes", rook_equal_sizes_agree},
      {"rook-antipode-swaps-indices", rook_antipode_swaps},
      {"rook-antipode-of-containment-sum", rook_antipode_containment},
      {"rook-left-translation", rook_left_translation},
      {"rook-right-translation", rook_right_translation},
      {"row-sum-zero-when-block-sizes-differ", row_sum_zero_when_sizes_differ},
      {"row-sum-block-permutation-invariant", row_sum_block_permutation},
      {"row-sum-aligned-empty-blocks-removable", row_sum_strip_empty},
      {"row-sum-antipode-swaps", row_sum_antipode},
      {"row-sum-two-sided-translation", row_sum_two_sided_translation},
      {"antisymmetrizer-conjugation", antisymmetrizer_conjugation},
      {"antisymmetrizer-right-ideal-containment", antisymmetrizer_right_ideal_containment},
      {"binomial-alternating-sum", binomial_alternating_sum},
  };
  return suites;
}

}  // namespace props
