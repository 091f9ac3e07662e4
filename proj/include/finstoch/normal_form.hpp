#pragma once
// The normal form of a rational distribution: the canonical sequence of
// dyadic trees nu_0, nu_1, ... with mu = sum_i 2^-(i+1) nu_i. At each
// step the level N is the smallest for which some dyadic distribution
// nu at level N has nu/2 strictly below the remainder everywhere on its
// support; among those nu the leaf multiset is the lexicographically
// least in the space's label order (equivalently: greedy, pushing as
// much mass as possible onto the earliest labels). The remainder then
// updates to 2(mu - nu/2).
//
// Remainders are exact rationals, so recurrence is decidable and cycles
// are found by memoization. No claim is made that every input cycles
// within a step budget; truncation with exact residual 2^-k is the
// fallback contract.

#include <map>
#include <optional>

#include "finstoch/treeseq.hpp"

namespace finstoch {

// Smallest feasible level for the strict-domination condition.
unsigned minimal_feasible_level(const Dist& mu);

// All count vectors (aligned to the space's labels, zero off support)
// with sum 2^level and k_i/2^level < 2 mu_i on the support. Used to
// verify minimality and lexicographic choice by enumeration.
std::vector<std::vector<BigInt>> strict_dyadic_candidates(const Dist& mu, unsigned level);

// The tree for a count vector: depth = level, leaves in label order.
BTree tree_from_counts(const FinSpace& space, unsigned level,
                       const std::vector<BigInt>& counts);

// One step of the algorithm: the chosen tree and the next remainder.
std::pair<BTree, Dist> normal_form_step(const Dist& mu);

struct NormalFormStep {
  unsigned level;
  BTree tree;
  Dist remainder;  // remainder after this step
};

struct NormalFormTrace {
  Dist input;
  std::vector<NormalFormStep> steps;
  std::optional<std::size_t> cycle_start;  // index where the cycle begins

  TreeSeq to_tree_seq() const;
};

// Runs at most max_steps steps (max_steps >= 1), memoizing remainders.
NormalFormTrace normal_form_trace(const Dist& mu, unsigned max_steps);

TreeSeq normal_form(const Dist& mu, unsigned max_steps);

// Lazily extended normal form, for streaming consumers that must not
// commit to a step budget up front.
class NormalFormStream {
public:
  explicit NormalFormStream(Dist mu) : remainder_(std::move(mu)) {}
  const BTree& tree(std::size_t i);

private:
  Dist remainder_;
  std::vector<BTree> trees_;
};

}  // namespace finstoch
