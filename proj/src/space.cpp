#include "finstoch/space.hpp"

namespace finstoch {

FinSpace::FinSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("a space needs at least one label");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) throw std::invalid_argument("duplicate label: " + labels_[i]);
  }
}

std::size_t FinSpace::index(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw std::out_of_range("label not in space: " + l);
  return it->second;
}

FinSpace unit_space() { return FinSpace({"*"}); }

std::string tensor_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}
std::string inl_label(const std::string& a) { return "inl(" + a + ")"; }
std::string inr_label(const std::string& b) { return "inr(" + b + ")"; }

FinSpace tensor_space(const FinSpace& a, const FinSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(tensor_label(la, lb));
  return FinSpace(std::move(labels));
}

FinSpace coproduct_space(const FinSpace& a, const FinSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& la : a.labels()) labels.push_back(inl_label(la));
  for (const auto& lb : b.labels()) labels.push_back(inr_label(lb));
  return FinSpace(std::move(labels));
}

FinSpace two_space() { return coproduct_space(unit_space(), unit_space()); }

}  // namespace finstoch
