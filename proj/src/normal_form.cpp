#include "finstoch/normal_form.hpp"

namespace finstoch {

namespace {

// Largest k with k/2^level < 2 mu_i, i.e. ceil(2^(level+1) mu_i) - 1.
// Zero for labels outside the support.
std::vector<BigInt> strict_upper_bounds(const Dist& mu, unsigned level) {
  std::vector<BigInt> ub(mu.space().size(), 0);
  Rational scale = pow2(static_cast<long>(level) + 1);
  for (std::size_t i = 0; i < ub.size(); ++i)
    if (!mu.weight(i).is_zero()) ub[i] = ceil_of(scale * mu.weight(i)) - 1;
  return ub;
}

bool feasible_at(const Dist& mu, unsigned level) {
  BigInt budget = BigInt(1) << level;
  BigInt cap = 0;
  for (const auto& u : strict_upper_bounds(mu, level)) cap += u;
  return cap >= budget;
}

}  // namespace

unsigned minimal_feasible_level(const Dist& mu) {
  // Feasibility is guaranteed once 2^level >= |support|, so this loop
  // terminates well below the guard.
  for (unsigned level = 0; level <= 40; ++level)
    if (feasible_at(mu, level)) return level;
  throw std::logic_error("no feasible level found; distribution invariant broken");
}

std::vector<std::vector<BigInt>> strict_dyadic_candidates(const Dist& mu, unsigned level) {
  std::vector<BigInt> ub = strict_upper_bounds(mu, level);
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> cur(ub.size(), 0);
  BigInt budget = BigInt(1) << level;
  auto rec = [&](auto&& self, std::size_t i, BigInt remaining) -> void {
    if (i == ub.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    BigInt tail_cap = 0;
    for (std::size_t j = i; j < ub.size(); ++j) tail_cap += ub[j];
    if (tail_cap < remaining) return;
    BigInt hi = std::min(ub[i], remaining, std::less<BigInt>());
    for (BigInt k = hi; k >= 0; --k) {  // descending: lex-least multiset first
      cur[i] = k;
      self(self, i + 1, remaining - k);
    }
    cur[i] = 0;
  };
  rec(rec, 0, budget);
  return out;
}

BTree tree_from_counts(const FinSpace& space, unsigned level,
                       const std::vector<BigInt>& counts) {
  std::vector<std::uint32_t> leaves;
  leaves.reserve(std::size_t{1} << level);
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (BigInt c = 0; c < counts[i]; ++c) leaves.push_back(static_cast<std::uint32_t>(i));
  return BTree(space, level, std::move(leaves));
}

std::pair<BTree, Dist> normal_form_step(const Dist& mu) {
  unsigned level = minimal_feasible_level(mu);
  std::vector<BigInt> ub = strict_upper_bounds(mu, level);

  // Greedy in label order: the lexicographically least leaf multiset
  // puts the most mass on the earliest labels.
  std::vector<BigInt> counts(ub.size(), 0);
  BigInt remaining = BigInt(1) << level;
  for (std::size_t i = 0; i < ub.size() && remaining > 0; ++i) {
    counts[i] = std::min(ub[i], remaining, std::less<BigInt>());
    remaining -= counts[i];
  }
  if (remaining != 0) throw std::logic_error("greedy fill failed at a feasible level");

  BTree tree = tree_from_counts(mu.space(), level, counts);
  // remainder' = 2 mu - nu; strictness keeps it a distribution with the
  // same support.
  Rational unit = pow2(-static_cast<long>(level));
  std::vector<Rational> next(mu.space().size());
  for (std::size_t i = 0; i < next.size(); ++i)
    next[i] = Rational(2) * mu.weight(i) - Rational(counts[i], 1) * unit;
  return {std::move(tree), Dist(mu.space(), std::move(next))};
}

TreeSeq NormalFormTrace::to_tree_seq() const {
  std::vector<BTree> trees;
  trees.reserve(steps.size());
  for (const auto& s : steps) trees.push_back(s.tree);
  if (!cycle_start) return TreeSeq(input.space(), std::move(trees), {});
  std::vector<BTree> preamble(trees.begin(), trees.begin() + static_cast<long>(*cycle_start));
  std::vector<BTree> cycle(trees.begin() + static_cast<long>(*cycle_start), trees.end());
  return TreeSeq(input.space(), std::move(preamble), std::move(cycle));
}

NormalFormTrace normal_form_trace(const Dist& mu, unsigned max_steps) {
  if (max_steps == 0) throw std::invalid_argument("normal_form: max_steps must be positive");
  NormalFormTrace trace{mu, {}, std::nullopt};
  std::map<std::vector<Rational>, std::size_t> seen;
  Dist current = mu;
  for (std::size_t step = 0; step < max_steps; ++step) {
    auto [it, fresh] = seen.emplace(current.weights(), step);
    if (!fresh) {
      // trees[cycle_start .. step) repeat forever
      trace.cycle_start = it->second;
      return trace;
    }
    auto [tree, next] = normal_form_step(current);
    trace.steps.push_back({tree.depth(), tree, next});
    current = std::move(next);
  }
  // One more lookup: the remainder after the last step may close a cycle.
  auto it = seen.find(current.weights());
  if (it != seen.end()) trace.cycle_start = it->second;
  return trace;
}

TreeSeq normal_form(const Dist& mu, unsigned max_steps) {
  return normal_form_trace(mu, max_steps).to_tree_seq();
}

const BTree& NormalFormStream::tree(std::size_t i) {
  while (trees_.size() <= i) {
    auto [tree, next] = normal_form_step(remainder_);
    trees_.push_back(std::move(tree));
    remainder_ = std::move(next);
  }
  return trees_[i];
}

}  // namespace finstoch
