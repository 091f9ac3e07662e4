#include "finstoch/dist.hpp"

namespace finstoch {

Dist::Dist(FinSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size())
    throw std::invalid_argument("distribution weight count does not match space size");
  Rational total;
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw std::invalid_argument("negative probability weight");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("probability weights must sum to 1");
}

Dist Dist::point(const FinSpace& space, const std::string& label) {
  std::vector<Rational> w(space.size(), Rational(0));
  w[space.index(label)] = Rational(1);
  return Dist(space, std::move(w));
}

Dist Dist::uniform(const FinSpace& space) {
  std::vector<Rational> w(space.size(), rat(1, static_cast<long long>(space.size())));
  return Dist(space, std::move(w));
}

std::vector<std::string> Dist::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!weights_[i].is_zero()) out.push_back(space_.label(i));
  return out;
}

SubDist::SubDist(FinSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size())
    throw std::invalid_argument("mass vector size does not match space size");
  Rational total;
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw std::invalid_argument("negative mass");
    total += w;
  }
  if (total > Rational(1)) throw std::invalid_argument("mass vector exceeds total mass 1");
}

SubDist SubDist::zero(const FinSpace& space) {
  return SubDist(space, std::vector<Rational>(space.size(), Rational(0)));
}

Rational SubDist::total() const {
  Rational t;
  for (const auto& w : weights_) t += w;
  return t;
}

void SubDist::add(std::size_t i, const Rational& w) { weights_.at(i) += w; }

void SubDist::add_scaled(const Dist& d, const Rational& scale) {
  if (d.space() != space_) throw std::invalid_argument("mass vector space mismatch");
  for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] += d.weight(i) * scale;
}

Dist SubDist::to_dist() const { return Dist(space_, weights_); }

}  // namespace finstoch
