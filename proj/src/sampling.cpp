#include "finstoch/sampling.hpp"

#include "finstoch/normal_form.hpp"

namespace finstoch {

namespace {

const std::string& walk_tree(const BTree& t, BitSource& branch_bits) {
  std::size_t index = 0;
  for (unsigned d = 0; d < t.depth(); ++d) index = index * 2 + branch_bits.next();
  return t.leaf_label(index);
}

}  // namespace

std::string sample(const TreeSeq& s, BitSource& index_bits, BitSource& branch_bits) {
  std::size_t zeros = 0;
  while (index_bits.next() == 0) ++zeros;
  auto tree = s.at(zeros);
  if (!tree) throw std::domain_error("sample: index points past a truncated sequence");
  return walk_tree(*tree, branch_bits);
}

std::pair<SubDist, Rational> sampler_dist(const TreeSeq& s, unsigned prefix_len) {
  if (prefix_len == 0) throw std::invalid_argument("sampler_dist: prefix length must be >= 1");
  if (prefix_len > 20) throw std::invalid_argument("sampler_dist: prefix length too large to enumerate");
  SubDist acc = SubDist::zero(s.space());
  Rational unreached;
  const Rational string_mass = pow2(-static_cast<long>(prefix_len));
  const std::size_t total = std::size_t{1} << prefix_len;
  for (std::size_t bits = 0; bits < total; ++bits) {
    // First 1, scanning from the most significant of the prefix_len bits.
    std::size_t zeros = 0;
    while (zeros < prefix_len && ((bits >> (prefix_len - 1 - zeros)) & 1) == 0) ++zeros;
    if (zeros == prefix_len) {
      unreached += string_mass;
      continue;
    }
    auto tree = s.at(zeros);
    if (!tree) {
      unreached += string_mass;
      continue;
    }
    // All branch strings, exhaustively; each leaf path has mass 2^-depth.
    Rational leaf_mass = string_mass * pow2(-static_cast<long>(tree->depth()));
    for (std::size_t leaf = 0; leaf < tree->leaf_count(); ++leaf)
      acc.add(tree->leaf_index(leaf), leaf_mass);
  }
  return {acc, unreached};
}

DrawResult draw(const Dist& mu, BitSource& entropy) {
  const std::size_t start = entropy.consumed();
  NormalFormStream stream(mu);
  std::size_t zeros = 0;
  while (entropy.next() == 0) ++zeros;
  const BTree& tree = stream.tree(zeros);
  std::string label = walk_tree(tree, entropy);
  return {std::move(label), entropy.consumed() - start};
}

}  // namespace finstoch
