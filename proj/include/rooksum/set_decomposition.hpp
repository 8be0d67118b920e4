#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rooksum/subset.hpp"

namespace rooksum {

/// Ordered tuple of pairwise disjoint subsets of [n]. Empty blocks are allowed.
/// Text form: "({1,3}|{}|{2})".
class SetDecomposition {
 public:
  SetDecomposition() = default;
  SetDecomposition(int n, std::vector<Subset> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::uint32_t seen = 0;
    for (const Subset& b : blocks_) {
      if (b.ground_size() != n_) throw PreconditionError("block ground size mismatch");
      if (seen & b.mask()) throw PreconditionError("blocks of a set decomposition must be disjoint");
      seen |= b.mask();
    }
  }

  int ground_size() const { return n_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block(int i) const { return blocks_.at(i); }

  Subset support() const {
    std::uint32_t m = 0;
    for (const Subset& b : blocks_) m |= b.mask();
    return Subset(n_, m);
  }
  /// Blocks cover [n].
  bool covers() const { return support() == Subset::full(n_); }
  /// Blocks cover [n] and none is empty.
  bool is_composition() const {
    if (!covers()) return false;
    for (const Subset& b : blocks_) {
      if (b.empty()) return false;
    }
    return true;
  }
  std::vector<int> block_sizes() const {
    std::vector<int> s;
    for (const Subset& b : blocks_) s.push_back(b.size());
    return s;
  }

  SetDecomposition strip_empty() const {
    std::vector<Subset> kept;
    for (const Subset& b : blocks_) {
      if (!b.empty()) kept.push_back(b);
    }
    return SetDecomposition(n_, std::move(kept));
  }
  /// Appends empty blocks until the length is at least len.
  SetDecomposition padded(int len) const {
    std::vector<Subset> b = blocks_;
    while (static_cast<int>(b.size()) < len) b.push_back(Subset::empty(n_));
    return SetDecomposition(n_, std::move(b));
  }

  friend bool operator==(const SetDecomposition&, const SetDecomposition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      s += blocks_[i].to_string();
    }
    return s + ")";
  }
  static SetDecomposition parse(int n, std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw PreconditionError("bad set decomposition '" + std::string(text) + "'");
    }
    std::vector<Subset> blocks;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto bar = body.find('|');
      blocks.push_back(Subset::parse(n, body.substr(0, bar)));
      if (bar == std::string_view::npos) break;
      body.remove_prefix(bar + 1);
    }
    return SetDecomposition(n, std::move(blocks));
  }

 private:
  int n_ = 0;
  std::vector<Subset> blocks_;
};

}  // namespace rooksum
