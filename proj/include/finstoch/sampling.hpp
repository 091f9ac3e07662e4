#pragma once
// Exact sampling from tree sequences and distributions. The index
// stream selects the sequence position as the position of the first 1
// (so the no-1 prefix has mass exactly 2^-N after N bits); the branch
// stream then walks the selected tree, bit 0 taking the left half.

#include <string>

#include "finstoch/bitsource.hpp"
#include "finstoch/dist.hpp"
#include "finstoch/treeseq.hpp"

namespace finstoch {

// One draw from a tree sequence. Throws InsufficientEntropy when a
// source runs dry and std::domain_error when the index points past a
// truncated sequence.
std::string sample(const TreeSeq& s, BitSource& index_bits, BitSource& branch_bits);

// Brute-force oracle for sample(): enumerates every index-bit prefix of
// the given length and all needed branch bits exactly. Returns the
// reached sub-distribution; the unreached mass (2^-L for a cyclic
// sequence) is the second component.
std::pair<SubDist, Rational> sampler_dist(const TreeSeq& s, unsigned prefix_len);

struct DrawResult {
  std::string label;
  std::size_t bits_used;
};

// Streaming exact sampler: extends the normal form of mu lazily while
// consuming index bits, then walks the selected tree. One physical
// source supplies index and branch bits in that deterministic order.
DrawResult draw(const Dist& mu, BitSource& entropy);

}  // namespace finstoch
