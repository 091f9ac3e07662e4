#include "finstoch/btree.hpp"

namespace finstoch {

BTree::BTree(FinSpace space, unsigned depth, std::vector<std::uint32_t> leaf_indices)
    : space_(std::move(space)), depth_(depth), leaves_(std::move(leaf_indices)) {
  if (depth_ > 30) throw std::invalid_argument("tree depth out of range");
  if (leaves_.size() != (std::size_t{1} << depth_))
    throw std::invalid_argument("leaf count must be exactly 2^depth");
  for (auto ix : leaves_)
    if (ix >= space_.size()) throw std::invalid_argument("leaf index outside the space");
}

BTree BTree::leaf(const FinSpace& space, const std::string& label) {
  return BTree(space, 0, {static_cast<std::uint32_t>(space.index(label))});
}

BTree BTree::from_leaves(const FinSpace& space, const std::vector<std::string>& leaves) {
  std::vector<std::uint32_t> ix;
  ix.reserve(leaves.size());
  for (const auto& l : leaves) ix.push_back(static_cast<std::uint32_t>(space.index(l)));
  unsigned depth = 0;
  while ((std::size_t{1} << depth) < leaves.size()) ++depth;
  return BTree(space, depth, std::move(ix));
}

std::vector<std::string> BTree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (auto ix : leaves_) out.push_back(space_.label(ix));
  return out;
}

Dist tree_dist(const BTree& t) {
  std::vector<Rational> w(t.space().size(), Rational(0));
  Rational share = pow2(-static_cast<long>(t.depth()));
  for (std::size_t i = 0; i < t.leaf_count(); ++i) w[t.leaf_index(i)] += share;
  return Dist(t.space(), std::move(w));
}

BTree glue(const BTree& t1, const BTree& t2) {
  if (t1.space() != t2.space()) throw std::invalid_argument("glue: trees over different spaces");
  unsigned depth = std::max(t1.depth(), t2.depth());
  std::vector<std::uint32_t> leaves;
  leaves.reserve(std::size_t{2} << depth);
  auto append_duplicated = [&](const BTree& t) {
    std::size_t copies = std::size_t{1} << (depth - t.depth());
    for (std::size_t c = 0; c < copies; ++c)
      leaves.insert(leaves.end(), t.leaf_indices().begin(), t.leaf_indices().end());
  };
  append_duplicated(t1);
  append_duplicated(t2);
  return BTree(t1.space(), depth + 1, std::move(leaves));
}

}  // namespace finstoch
