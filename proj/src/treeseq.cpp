#include "finstoch/treeseq.hpp"

namespace finstoch {

TreeSeq::TreeSeq(FinSpace space, std::vector<BTree> preamble, std::vector<BTree> cycle)
    : space_(std::move(space)), preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
  for (const auto& t : preamble_)
    if (t.space() != space_) throw std::invalid_argument("preamble tree over the wrong space");
  for (const auto& t : cycle_)
    if (t.space() != space_) throw std::invalid_argument("cycle tree over the wrong space");
}

std::optional<BTree> TreeSeq::at(std::size_t i) const {
  if (i < preamble_.size()) return preamble_[i];
  if (cycle_.empty()) return std::nullopt;
  return cycle_[(i - preamble_.size()) % cycle_.size()];
}

std::pair<SubDist, Rational> seq_dist(const TreeSeq& s) {
  SubDist acc = SubDist::zero(s.space());
  const std::size_t k = s.preamble().size();
  for (std::size_t i = 0; i < k; ++i)
    acc.add_scaled(tree_dist(s.preamble()[i]), pow2(-static_cast<long>(i + 1)));
  if (s.truncated()) return {acc, pow2(-static_cast<long>(k))};

  const std::size_t m = s.cycle().size();
  Rational tail_scale = pow2(-static_cast<long>(k)) / (pow2(static_cast<long>(m)) - Rational(1));
  for (std::size_t r = 0; r < m; ++r)
    acc.add_scaled(tree_dist(s.cycle()[r]), tail_scale * pow2(static_cast<long>(m - 1 - r)));
  return {acc, Rational(0)};
}

}  // namespace finstoch
