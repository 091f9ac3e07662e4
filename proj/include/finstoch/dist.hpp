#pragma once
// Finitely supported exact probability distributions over a FinSpace,
// and sub-probability mass vectors for truncated sums.

#include <vector>

#include "finstoch/rational.hpp"
#include "finstoch/space.hpp"

namespace finstoch {

class Dist {
public:
  // Weights aligned with the space's label order; must be >= 0 and sum to 1.
  Dist(FinSpace space, std::vector<Rational> weights);

  static Dist point(const FinSpace& space, const std::string& label);
  static Dist uniform(const FinSpace& space);

  const FinSpace& space() const { return space_; }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  const Rational& weight(const std::string& label) const {
    return weights_.at(space_.index(label));
  }
  const std::vector<Rational>& weights() const { return weights_; }

  // Labels with nonzero weight, in space order.
  std::vector<std::string> support() const;

  friend bool operator==(const Dist& a, const Dist& b) {
    return a.space_ == b.space_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }

private:
  FinSpace space_;
  std::vector<Rational> weights_;
};

// A deficient mass vector: weights >= 0 with total <= 1. The missing
// mass is the residual of a truncated sum.
class SubDist {
public:
  SubDist(FinSpace space, std::vector<Rational> weights);
  static SubDist zero(const FinSpace& space);

  const FinSpace& space() const { return space_; }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational total() const;

  void add(std::size_t i, const Rational& w);
  void add_scaled(const Dist& d, const Rational& scale);

  Dist to_dist() const;  // requires total == 1

  friend bool operator==(const SubDist& a, const SubDist& b) {
    return a.space_ == b.space_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const SubDist& a, const SubDist& b) { return !(a == b); }

private:
  FinSpace space_;
  std::vector<Rational> weights_;
};

}  // namespace finstoch
