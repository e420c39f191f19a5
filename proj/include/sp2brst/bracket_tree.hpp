#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sp2brst {

/// Binary bracket tree over leaf labels 0..m-1. Children are unordered:
/// the canonical key sorts them, so <<X1,X2>,X3> and <X3,<X2,X1>> coincide.
class BracketTree {
 public:
  static BracketTree leaf(int label);
  static BracketTree join(BracketTree left, BracketTree right);

  bool is_leaf() const { return !left_; }
  int label() const { return label_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }

  const std::string& key() const { return key_; }
  int leaf_count() const { return leaves_; }

  friend bool operator==(const BracketTree& a, const BracketTree& b) {
    return a.key_ == b.key_;
  }

 private:
  int label_ = -1;
  int leaves_ = 1;
  std::shared_ptr<const BracketTree> left_;
  std::shared_ptr<const BracketTree> right_;
  std::string key_;
};

/// All descendants of (X_0..X_{m-1}): every chain of pair contractions
/// P^m_{ij}, ..., P^2_{12} is followed and structurally equal trees are
/// merged. Returned in canonical-key order.
std::vector<BracketTree> enumerate_descendants(int m);

/// Number of contraction chains before deduplication: prod_{k=2}^m C(k,2).
std::uint64_t contraction_chain_count(int m);

/// (2m-3)!! for m >= 2, 1 for m = 1.
std::uint64_t double_factorial_odd(int m);

}  // namespace sp2brst
