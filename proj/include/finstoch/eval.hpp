#pragma once
// Evaluation of a distribution in any midpoint carrier: the unique
// homomorphic extension of a labelwise assignment. The route is the
// constructive one: normal-form the distribution into an eventually
// periodic tree sequence, evaluate each dyadic tree by nested midpoints,
// and collapse the sequence with the countable operator.

#include <map>

#include "finstoch/midpoint.hpp"
#include "finstoch/normal_form.hpp"

namespace finstoch {

template <class T>
struct Assignment {
  FinSpace source;
  std::map<std::string, T> values;

  const T& at(const std::string& label) const {
    auto it = values.find(label);
    if (it == values.end()) throw std::invalid_argument("assignment missing label: " + label);
    return it->second;
  }

  void check_total() const {
    for (const auto& l : source.labels()) (void)at(l);
  }
};

template <class T>
T eval_tree(const BTree& t, const Assignment<T>& assign) {
  auto fold = [&](auto&& self, std::size_t lo, std::size_t hi) -> T {
    if (hi - lo == 1) return assign.at(t.leaf_label(lo));
    std::size_t half = lo + (hi - lo) / 2;
    return mid(self(self, lo, half), self(self, half, hi));
  };
  return fold(fold, 0, t.leaf_count());
}

template <class T>
T eval_tree_seq(const TreeSeq& s, const Assignment<T>& assign) {
  if (s.truncated())
    throw std::domain_error("cannot evaluate a truncated tree sequence: no cycle to sum");
  std::vector<T> preamble, cycle;
  for (const auto& t : s.preamble()) preamble.push_back(eval_tree(t, assign));
  for (const auto& t : s.cycle()) cycle.push_back(eval_tree(t, assign));
  return big_mid(EventuallyPeriodicSeq<T>(std::move(preamble), std::move(cycle)));
}

template <class T>
T eval_dist(const Dist& d, const Assignment<T>& assign, unsigned max_steps = 256) {
  if (d.space() != assign.source)
    throw std::invalid_argument("eval_dist: distribution is not over the assignment's source");
  assign.check_total();
  TreeSeq seq = normal_form(d, max_steps);
  if (seq.truncated())
    throw std::domain_error("eval_dist: normal form found no cycle within the step budget");
  return eval_tree_seq(seq, assign);
}

}  // namespace finstoch
