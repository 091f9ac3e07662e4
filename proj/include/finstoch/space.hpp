#pragma once
// Finite labeled outcome spaces. Labels are distinct strings and their
// order is part of the space's identity: it doubles as the total order
// used by the normal-form algorithm, and it fixes the layout of tensor
// and coproduct spaces so structural isomorphisms are concrete
// permutation matrices.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace finstoch {

class FinSpace {
public:
  FinSpace() = default;
  explicit FinSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_label(const std::string& l) const { return index_.count(l) != 0; }
  std::size_t index(const std::string& l) const;

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const FinSpace& a, const FinSpace& b) { return !(a == b); }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The monoidal unit: a single outcome "*".
FinSpace unit_space();

// Labels "(a,b)" ordered lexicographically by (index in A, index in B).
FinSpace tensor_space(const FinSpace& a, const FinSpace& b);

// Labels "inl(a)" for all of A, then "inr(b)" for all of B.
FinSpace coproduct_space(const FinSpace& a, const FinSpace& b);

// I + I, the codomain of the coinflip.
FinSpace two_space();

std::string tensor_label(const std::string& a, const std::string& b);
std::string inl_label(const std::string& a);
std::string inr_label(const std::string& b);

}  // namespace finstoch
