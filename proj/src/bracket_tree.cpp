#include "sp2brst/bracket_tree.hpp"

#include <map>
#include <stdexcept>

namespace sp2brst {

BracketTree BracketTree::leaf(int label) {
  BracketTree t;
  t.label_ = label;
  t.key_ = std::to_string(label);
  return t;
}

BracketTree BracketTree::join(BracketTree left, BracketTree right) {
  if (right.key_ < left.key_) std::swap(left, right);
  BracketTree t;
  t.leaves_ = left.leaves_ + right.leaves_;
  t.key_ = "<" + left.key_ + "," + right.key_ + ">";
  t.left_ = std::make_shared<const BracketTree>(std::move(left));
  t.right_ = std::make_shared<const BracketTree>(std::move(right));
  return t;
}

namespace {

void contract(const std::vector<BracketTree>& items,
              std::map<std::string, BracketTree>& out) {
  if (items.size() == 1) {
    out.emplace(items.front().key(), items.front());
    return;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      std::vector<BracketTree> next;
      next.reserve(items.size() - 1);
      next.push_back(BracketTree::join(items[i], items[j]));
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (k != i && k != j) next.push_back(items[k]);
      }
      contract(next, out);
    }
  }
}

}  // namespace

std::vector<BracketTree> enumerate_descendants(int m) {
  if (m < 1) throw std::invalid_argument("descendants need m >= 1");
  std::vector<BracketTree> leaves;
  for (int i = 0; i < m; ++i) leaves.push_back(BracketTree::leaf(i));
  std::map<std::string, BracketTree> unique;
  contract(leaves, unique);
  std::vector<BracketTree> out;
  out.reserve(unique.size());
  for (auto& [key, tree] : unique) out.push_back(std::move(tree));
  return out;
}

std::uint64_t contraction_chain_count(int m) {
  std::uint64_t n = 1;
  for (std::uint64_t k = 2; k <= static_cast<std::uint64_t>(m); ++k) {
    n *= k * (k - 1) / 2;
  }
  return n;
}

std::uint64_t double_factorial_odd(int m) {
  std::uint64_t n = 1;
  for (int k = 2 * m - 3; k > 1; k -= 2) n *= static_cast<std::uint64_t>(k);
  return n;
}

}  // namespace sp2brst
