#include "finstoch/midpoint.hpp"

#include "finstoch/linalg.hpp"

namespace finstoch {

namespace {

void check_weights(const std::vector<Rational>& ws) {
  Rational total;
  for (const auto& w : ws) {
    if (w < Rational(0)) throw std::invalid_argument("convex_mix: negative weight");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("convex_mix: weights must sum to 1");
}

}  // namespace

Rational convex_mix(const std::vector<std::pair<Rational, Rational>>& terms) {
  std::vector<Rational> ws;
  for (const auto& [w, _] : terms) ws.push_back(w);
  check_weights(ws);
  Rational out;
  for (const auto& [w, v] : terms) out += w * v;
  return out;
}

Dist convex_mix(const std::vector<std::pair<Rational, Dist>>& terms) {
  if (terms.empty()) throw std::invalid_argument("convex_mix: empty combination");
  std::vector<Rational> ws;
  for (const auto& [w, _] : terms) ws.push_back(w);
  check_weights(ws);
  const FinSpace& space = terms.front().second.space();
  std::vector<Rational> weights(space.size(), Rational(0));
  for (const auto& [w, d] : terms) {
    if (d.space() != space) throw std::invalid_argument("convex_mix: distribution space mismatch");
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += w * d.weight(i);
  }
  return Dist(space, std::move(weights));
}

Kernel convex_mix(const std::vector<std::pair<Rational, Kernel>>& terms) {
  if (terms.empty()) throw std::invalid_argument("convex_mix: empty combination");
  std::vector<Rational> ws;
  for (const auto& [w, _] : terms) ws.push_back(w);
  check_weights(ws);
  const Kernel& first = terms.front().second;
  std::vector<Rational> entries(first.entries().size(), Rational(0));
  for (const auto& [w, k] : terms) {
    if (k.dom() != first.dom() || k.cod() != first.cod())
      throw std::invalid_argument("convex_mix: kernels must share a hom-set");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += w * k.entries()[i];
  }
  return Kernel(first.dom(), first.cod(), std::move(entries));
}

Rational mid(const Rational& a, const Rational& b) { return average(a, b); }

Dist mid(const Dist& a, const Dist& b) {
  return convex_mix({{rat(1, 2), a}, {rat(1, 2), b}});
}

Kernel mid(const Kernel& a, const Kernel& b) {
  return convex_mix({{rat(1, 2), a}, {rat(1, 2), b}});
}

Kernel iterate(const Kernel& s, const FinSpace& x, const FinSpace& a) {
  if (s.dom() != x || s.cod() != tensor_space(x, a))
    throw std::invalid_argument("iterate: s must map X to the declared tensor X(x)A");
  Kernel p = marginal(s, x, a, Side::Left);   // X -> X
  Kernel q = marginal(s, x, a, Side::Right);  // X -> A
  const std::size_t n = x.size(), m = a.size();

  Matrix lhs(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    lhs[i][i] = Rational(1);
    for (std::size_t j = 0; j < n; ++j) lhs[i][j] -= rat(1, 2) * p.at(i, j);
  }
  Matrix rhs(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) rhs[i][j] = rat(1, 2) * q.at(i, j);

  Matrix sol = solve_linear_multi(lhs, rhs);  // singular is impossible for stochastic s
  std::vector<Rational> entries;
  entries.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) entries.push_back(sol[i][j]);
  Kernel u(x, a, std::move(entries));

  // Defining equation, re-checked by substitution.
  if (u != mid(compose(u, p), q)) throw std::logic_error("iterate: fixpoint equation violated");
  return u;
}

}  // namespace finstoch
