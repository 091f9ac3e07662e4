#pragma once
// Balanced binary trees of outcomes: a depth-n tree is a list of 2^n
// leaves and denotes the dyadic distribution giving each leaf mass 2^-n.

#include <cstdint>
#include <string>
#include <vector>

#include "finstoch/dist.hpp"

namespace finstoch {

class BTree {
public:
  BTree(FinSpace space, unsigned depth, std::vector<std::uint32_t> leaf_indices);

  static BTree leaf(const FinSpace& space, const std::string& label);
  static BTree from_leaves(const FinSpace& space, const std::vector<std::string>& leaves);

  const FinSpace& space() const { return space_; }
  unsigned depth() const { return depth_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::uint32_t leaf_index(std::size_t i) const { return leaves_.at(i); }
  const std::string& leaf_label(std::size_t i) const { return space_.label(leaves_.at(i)); }
  const std::vector<std::uint32_t>& leaf_indices() const { return leaves_; }
  std::vector<std::string> leaf_labels() const;

  friend bool operator==(const BTree& a, const BTree& b) {
    return a.space_ == b.space_ && a.depth_ == b.depth_ && a.leaves_ == b.leaves_;
  }
  friend bool operator!=(const BTree& a, const BTree& b) { return !(a == b); }

private:
  FinSpace space_;
  unsigned depth_;
  std::vector<std::uint32_t> leaves_;
};

// Each leaf contributes 2^-depth to its label.
Dist tree_dist(const BTree& t);

// Joins two trees at a new root, first repeating the shallower tree's
// leaf list blockwise until the depths agree. Satisfies
// tree_dist(glue(t1,t2)) = mid(tree_dist(t1), tree_dist(t2)).
BTree glue(const BTree& t1, const BTree& t2);

}  // namespace finstoch
