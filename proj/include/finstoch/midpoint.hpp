#pragma once
// Midpoint algebras over three carriers: unit-interval rationals,
// distributions over a fixed space, and kernel hom-sets. Eventually
// periodic sequences give the countable midpoint operator a finite
// representation on which it is exactly computable: the periodic tail
// collapses by the geometric identity
//   sum_{t>=0} 2^-(r+1+tm) = 2^(m-1-r) / (2^m - 1).

#include <utility>
#include <vector>

#include "finstoch/dist.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/rational.hpp"

namespace finstoch {

// Exact convex combination; weights must be >= 0 and sum to 1.
Rational convex_mix(const std::vector<std::pair<Rational, Rational>>& terms);
Dist convex_mix(const std::vector<std::pair<Rational, Dist>>& terms);
Kernel convex_mix(const std::vector<std::pair<Rational, Kernel>>& terms);

// The binary midpoint on each carrier. On [0,1] this is average(); on
// distributions and kernels it is the pointwise half/half mix, which
// coincides with the coinflip-then-copair composite (asserted by tests,
// not assumed).
Rational mid(const Rational& a, const Rational& b);
Dist mid(const Dist& a, const Dist& b);
Kernel mid(const Kernel& a, const Kernel& b);

// preamble ++ cycle ++ cycle ++ ...; cycle must be nonempty.
template <class T>
class EventuallyPeriodicSeq {
public:
  EventuallyPeriodicSeq(std::vector<T> preamble, std::vector<T> cycle)
      : preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw std::invalid_argument("cycle must be nonempty");
  }

  const std::vector<T>& preamble() const { return preamble_; }
  const std::vector<T>& cycle() const { return cycle_; }

  const T& at(std::size_t i) const {
    if (i < preamble_.size()) return preamble_[i];
    return cycle_[(i - preamble_.size()) % cycle_.size()];
  }

  EventuallyPeriodicSeq tail() const {
    if (!preamble_.empty())
      return EventuallyPeriodicSeq(std::vector<T>(preamble_.begin() + 1, preamble_.end()),
                                   cycle_);
    std::vector<T> rotated(cycle_.begin() + 1, cycle_.end());
    rotated.push_back(cycle_.front());
    return EventuallyPeriodicSeq({}, std::move(rotated));
  }

private:
  std::vector<T> preamble_;
  std::vector<T> cycle_;
};

// The countable operator M((a_i)_{i>=1}) = sum_i 2^-i a_i in closed form.
template <class T>
T big_mid(const EventuallyPeriodicSeq<T>& seq) {
  std::vector<std::pair<Rational, T>> terms;
  const std::size_t k = seq.preamble().size();
  const std::size_t m = seq.cycle().size();
  for (std::size_t i = 0; i < k; ++i)
    terms.emplace_back(pow2(-static_cast<long>(i + 1)), seq.preamble()[i]);
  // Tail weight of cycle slot r: 2^-k * 2^(m-1-r) / (2^m - 1).
  Rational tail_scale = pow2(-static_cast<long>(k)) / (pow2(static_cast<long>(m)) - Rational(1));
  for (std::size_t r = 0; r < m; ++r)
    terms.emplace_back(tail_scale * pow2(static_cast<long>(m - 1 - r)), seq.cycle()[r]);
  return convex_mix(terms);
}

// M applied to (a_{b1}, ..., a_{bk}, a0, a0, ...): trailing zeros.
template <class T>
T eval_bits(const T& a0, const T& a1, std::string_view bits) {
  std::vector<T> preamble;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
    preamble.push_back(c == '1' ? a1 : a0);
  }
  return big_mid(EventuallyPeriodicSeq<T>(std::move(preamble), {a0}));
}

// The iteration fixpoint of s: X -> X(x)A: the unique u: X -> A with
//   u = mid(u . pi_X . s, pi_A . s),
// obtained by the exact solve (I - P/2) u = q/2 where P = pi_X . s and
// q = pi_A . s. I - P/2 is strictly diagonally dominant, so the system
// cannot be singular; the postcondition is re-checked by substitution.
Kernel iterate(const Kernel& s, const FinSpace& x, const FinSpace& a);

}  // namespace finstoch
