#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/set_decomposition.hpp"
#include "rooksum/subset.hpp"

namespace rooksum {

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw PreconditionError("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bijection of [n] = {0, ..., n-1}. Stored 0-based; text is 1-based one-line
/// notation ("2413" for n <= 9, "2,4,1,3" when n >= 10).
class Permutation {
 public:
  static constexpr int kMaxN = 255;

  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (img_.size() > kMaxN) throw PreconditionError("permutation too long");
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw PreconditionError("not a permutation");
      seen[v] = true;
    }
  }
  /// From 1-based one-line notation.
  static Permutation from_one_line(const std::vector<int>& one_based) {
    std::vector<std::uint8_t> img;
    img.reserve(one_based.size());
    for (int v : one_based) {
      if (v < 1 || v > kMaxN) throw PreconditionError("one-line entry out of range");
      img.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return Permutation(std::move(img));
  }
  static Permutation identity(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(Unchecked{}, std::move(img));
  }
  /// The order-reversing permutation i -> n-1-i.
  static Permutation longest(int n) {
    std::vector<std::uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(n - 1 - i);
    return Permutation(Unchecked{}, std::move(img));
  }
  /// Transposition of 0-based positions i and j.
  static Permutation transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.img_.at(i), p.img_.at(j));
    return p;
  }

  /// Parses "2413" or "2,4,1,3". Digit strings are only accepted for n <= 9.
  static Permutation parse(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
      while (true) {
        auto comma = text.find(',');
        std::string tok(text.substr(0, comma));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 3) {
          throw PreconditionError("bad permutation token '" + tok + "'");
        }
        vals.push_back(std::stoi(tok));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
      }
    } else {
      if (text.size() > 9) throw PreconditionError("permutations with n >= 10 must be comma-separated");
      for (char c : text) {
        if (c < '1' || c > '9') throw PreconditionError("bad permutation digit");
        vals.push_back(c - '0');
      }
    }
    return from_one_line(vals);
  }

  int size() const { return static_cast<int>(img_.size()); }
  /// 0-based image of 0-based position i.
  int operator[](int i) const { return img_[i]; }
  const std::vector<std::uint8_t>& images() const { return img_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    bool commas = size() >= 10;
    for (int i = 0; i < size(); ++i) {
      if (commas && i) s += ',';
      s += std::to_string(img_[i] + 1);
    }
    return s;
  }

  /// Lexicographic order of one-line notation.
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation unrank(int, std::uint64_t);

  std::vector<std::uint8_t> img_;
};

/// (u v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw PreconditionError("compose: size mismatch");
  std::vector<std::uint8_t> img(u.size());
  for (int i = 0; i < u.size(); ++i) img[i] = static_cast<std::uint8_t>(u[v[i]]);
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<std::uint8_t> img(w.size());
  for (int i = 0; i < w.size(); ++i) img[w[i]] = static_cast<std::uint8_t>(i);
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

/// +1 for even permutations, -1 for odd ones.
inline int sign(const Permutation& w) {
  std::vector<bool> seen(w.size(), false);
  int parity = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= (len + 1) & 1;
  }
  return parity ? -1 : 1;
}

inline int inversions(const Permutation& w) {
  int c = 0;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  }
  return c;
}

/// Index of w among all permutations of its size in lexicographic order.
inline std::uint64_t lex_rank(const Permutation& w) {
  int n = w.size();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_unused = w[i] - std::popcount(used & ((1u << w[i]) - 1));
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << w[i];
  }
  return r;
}

inline Permutation unrank(int n, std::uint64_t rank) {
  if (n > 20 || rank >= factorial(n)) throw PreconditionError("rank out of range");
  std::vector<std::uint8_t> img(n);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    img[i] = static_cast<std::uint8_t>(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

/// All permutations of [n] in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = Permutation::identity(n);
  std::vector<std::uint8_t> img = p.images();
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Entry j is the length of the longest increasing subsequence ending at j.
inline std::vector<int> lis_ending_at(const Permutation& w) {
  std::vector<int> len(w.size(), 1);
  for (int j = 0; j < w.size(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (w[i] < w[j]) len[j] = std::max(len[j], len[i] + 1);
    }
  }
  return len;
}

/// Entry j is the length of the longest increasing subsequence starting at j.
inline std::vector<int> lis_starting_at(const Permutation& w) {
  std::vector<int> len(w.size(), 1);
  for (int j = w.size() - 1; j >= 0; --j) {
    for (int i = j + 1; i < w.size(); ++i) {
      if (w[j] < w[i]) len[j] = std::max(len[j], len[i] + 1);
    }
  }
  return len;
}

/// Longest increasing subsequence length (patience sorting).
inline int lis_length(const Permutation& w) {
  std::vector<int> tails;
  for (int i = 0; i < w.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), w[i]);
    if (it == tails.end()) {
      tails.push_back(w[i]);
    } else {
      *it = w[i];
    }
  }
  return static_cast<int>(tails.size());
}

inline int lds_length(const Permutation& w) {
  std::vector<int> tails;
  for (int i = 0; i < w.size(); ++i) {
    int v = -w[i];
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

/// w avoids the increasing pattern 12...m. Nothing avoids a pattern of length <= 0.
inline bool avoids_increasing(const Permutation& w, int m) { return m > 0 && lis_length(w) < m; }
/// w avoids the decreasing pattern m...21.
inline bool avoids_decreasing(const Permutation& w, int m) { return m > 0 && lds_length(w) < m; }

inline constexpr int kEnumerationCap = 8;

/// Permutations of [n] avoiding 12...m, in lexicographic order.
inline std::vector<Permutation> enumerate_avoiders(int n, int m, int cap = kEnumerationCap) {
  check_cap("pattern-avoider enumeration", n, cap);
  std::vector<Permutation> out;
  for (Permutation& w : all_permutations(n)) {
    if (avoids_increasing(w, m)) out.push_back(std::move(w));
  }
  return out;
}

/// Permutations of [n] avoiding m...21, in lexicographic order.
inline std::vector<Permutation> enumerate_decreasing_avoiders(int n, int m, int cap = kEnumerationCap) {
  check_cap("pattern-avoider enumeration", n, cap);
  std::vector<Permutation> out;
  for (Permutation& w : all_permutations(n)) {
    if (avoids_decreasing(w, m)) out.push_back(std::move(w));
  }
  return out;
}

/// w(S) as a subset.
inline Subset image(const Permutation& w, const Subset& s) {
  if (s.ground_size() != w.size()) throw PreconditionError("image: size mismatch");
  std::uint32_t m = 0;
  for (int e : s.elements()) m |= 1u << w[e];
  return Subset(w.size(), m);
}

/// Blockwise image (w(A_1), ..., w(A_l)).
inline SetDecomposition act(const Permutation& w, const SetDecomposition& d) {
  std::vector<Subset> blocks;
  for (const Subset& b : d.blocks()) blocks.push_back(image(w, b));
  return SetDecomposition(d.ground_size(), std::move(blocks));
}

/// Splits the positions of v into k blocks on each of which v is decreasing:
/// block i (0-based) holds the positions j where the longest increasing
/// subsequence ending at j has length i + 1. Requires v to avoid 12...(k+1).
inline SetDecomposition erdos_szekeres_decomposition(const Permutation& v, int k) {
  if (k < 0) throw PreconditionError("block count must be non-negative");
  int n = v.size();
  std::vector<int> len = lis_ending_at(v);
  std::vector<std::uint32_t> masks(k, 0);
  for (int j = 0; j < n; ++j) {
    if (len[j] > k) throw PreconditionError("permutation " + v.to_string() + " does not avoid the increasing pattern");
    masks[len[j] - 1] |= 1u << j;
  }
  std::vector<Subset> blocks;
  for (auto m : masks) blocks.emplace_back(n, m);
  return SetDecomposition(n, std::move(blocks));
}

/// Lexicographically smallest set of m positions on which v is increasing.
/// Requires lis(v) >= m.
inline Subset smallest_increasing_positions(const Permutation& v, int m) {
  int n = v.size();
  std::vector<int> from = lis_starting_at(v);
  std::vector<int> chosen;
  int prev_pos = -1, prev_val = -1;
  for (int need = m; need > 0; --need) {
    int pick = -1;
    for (int j = prev_pos + 1; j < n; ++j) {
      if (v[j] > prev_val && from[j] >= need) {
        pick = j;
        break;
      }
    }
    if (pick < 0) throw PreconditionError("permutation " + v.to_string() + " has no increasing subsequence of that length");
    chosen.push_back(pick);
    prev_pos = pick;
    prev_val = v[pick];
  }
  return Subset::from_elements(n, chosen);
}

}  // namespace rooksum
