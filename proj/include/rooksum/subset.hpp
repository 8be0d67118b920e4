#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rooksum/errors.hpp"

namespace rooksum {

/// Subset of [n] = {0, ..., n-1}, stored as a bit mask. Text form is 1-based,
/// e.g. "{1,3}".
class Subset {
 public:
  static constexpr int kMaxN = 32;

  Subset() = default;
  Subset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxN) throw PreconditionError("subset ground set size out of range");
    if (n < kMaxN && (mask >> n) != 0) throw PreconditionError("subset element outside ground set");
  }
  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, n == kMaxN ? ~0u : (1u << n) - 1); }
  /// {first, ..., first + count - 1}, 0-based.
  static Subset interval(int n, int first, int count) {
    if (count == 0) return empty(n);
    if (first < 0 || first + count > n) throw PreconditionError("interval outside ground set");
    return Subset(n, ((count == kMaxN ? ~0u : (1u << count) - 1)) << first);
  }
  static Subset from_elements(int n, const std::vector<int>& zero_based) {
    std::uint32_t m = 0;
    for (int e : zero_based) {
      if (e < 0 || e >= n) throw PreconditionError("subset element outside ground set");
      m |= 1u << e;
    }
    return Subset(n, m);
  }

  int ground_size() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return i >= 0 && i < n_ && ((mask_ >> i) & 1u); }
  bool is_subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  Subset complement() const { return Subset(n_, full(n_).mask_ & ~mask_); }
  friend Subset operator&(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ & b.mask_); }
  friend Subset operator|(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ | b.mask_); }
  friend Subset operator-(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ & ~b.mask_); }

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Orders by ground size, then by the sorted element list lexicographically.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return lex_compare(a.mask_, b.mask_);
  }

  /// "{1,3}" with 1-based elements.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e + 1);
      first = false;
    }
    return s + "}";
  }
  static Subset parse(int n, std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw PreconditionError("bad subset '" + std::string(text) + "'");
    }
    std::vector<int> elems;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string tok(body.substr(0, comma));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw PreconditionError("bad subset '" + std::string(text) + "'");
      }
      elems.push_back(std::stoi(tok) - 1);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    Subset s = from_elements(n, elems);
    if (s.size() != static_cast<int>(elems.size())) throw PreconditionError("repeated subset element");
    return s;
  }

 private:
  static std::strong_ordering lex_compare(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x <=> y;
      a &= a - 1;
      b &= b - 1;
    }
    return (a != 0) <=> (b != 0);
  }

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// All k-subsets of [n] in lexicographic order.
inline std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(Subset::from_elements(n, idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// All subsets of [n], by size then lexicographically.
inline std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = subsets_of_size(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// All subsets of s (including empty and s itself), as masks.
inline std::vector<Subset> subsets_of(const Subset& s) {
  std::vector<Subset> out;
  std::uint32_t m = s.mask();
  std::uint32_t sub = m;
  while (true) {
    out.push_back(Subset(s.ground_size(), sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
  return out;
}

}  // namespace rooksum
