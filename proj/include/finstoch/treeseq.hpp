#pragma once
// Eventually periodic sequences of balanced trees: the normal form of a
// distribution. A sequence nu_0, nu_1, ... denotes
//   sum_i 2^-(i+1) tree_dist(nu_i),
// which is exactly computable when a cycle is present. A truncated
// sequence (no cycle detected) carries exact residual mass 2^-k after
// its k recorded trees.

#include <optional>
#include <vector>

#include "finstoch/btree.hpp"
#include "finstoch/rational.hpp"

namespace finstoch {

class TreeSeq {
public:
  // cycle may be empty, in which case the sequence is a truncation.
  TreeSeq(FinSpace space, std::vector<BTree> preamble, std::vector<BTree> cycle);

  const FinSpace& space() const { return space_; }
  const std::vector<BTree>& preamble() const { return preamble_; }
  const std::vector<BTree>& cycle() const { return cycle_; }
  bool truncated() const { return cycle_.empty(); }

  // i-th tree; nullopt when the truncated sequence ends before i.
  std::optional<BTree> at(std::size_t i) const;

  friend bool operator==(const TreeSeq& a, const TreeSeq& b) {
    return a.space_ == b.space_ && a.preamble_ == b.preamble_ && a.cycle_ == b.cycle_;
  }
  friend bool operator!=(const TreeSeq& a, const TreeSeq& b) { return !(a == b); }

private:
  FinSpace space_;
  std::vector<BTree> preamble_;
  std::vector<BTree> cycle_;
};

// Exact denotation: (mass vector, residual). Residual is 0 for cyclic
// sequences and 2^-k for a truncation after k trees.
std::pair<SubDist, Rational> seq_dist(const TreeSeq& s);

}  // namespace finstoch
