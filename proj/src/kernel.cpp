#include "finstoch/kernel.hpp"

#include "finstoch/linalg.hpp"

namespace finstoch {

namespace {

// Deterministic kernel from an index map; validates nothing beyond range.
Kernel from_index_map(const FinSpace& dom, const FinSpace& cod,
                      const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Rational> e(dom.size() * cod.size(), Rational(0));
  for (std::size_t i = 0; i < dom.size(); ++i) e[i * cod.size() + f(i)] = Rational(1);
  return Kernel(dom, cod, std::move(e));
}

}  // namespace

Kernel::Kernel(FinSpace dom, FinSpace cod, std::vector<Rational> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.size() != dom_.size() * cod_.size())
    throw std::invalid_argument("kernel entry count does not match space sizes");
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    Rational sum;
    for (std::size_t j = 0; j < cod_.size(); ++j) {
      const Rational& p = at(i, j);
      if (!p.in_unit_interval())
        throw std::invalid_argument("kernel entry outside [0,1] at row " + dom_.label(i));
      sum += p;
    }
    if (sum != Rational(1))
      throw std::invalid_argument("kernel row does not sum to 1 at " + dom_.label(i));
  }
}

Kernel Kernel::identity(const FinSpace& x) {
  return from_index_map(x, x, [](std::size_t i) { return i; });
}

Kernel Kernel::from_rows(const FinSpace& dom, const FinSpace& cod,
                         const std::vector<std::vector<Rational>>& rows) {
  if (rows.size() != dom.size()) throw std::invalid_argument("row count mismatch");
  std::vector<Rational> e;
  e.reserve(dom.size() * cod.size());
  for (const auto& r : rows) {
    if (r.size() != cod.size()) throw std::invalid_argument("row length mismatch");
    e.insert(e.end(), r.begin(), r.end());
  }
  return Kernel(dom, cod, std::move(e));
}

Kernel Kernel::deterministic(const FinSpace& dom, const FinSpace& cod,
                             const std::function<std::string(const std::string&)>& f) {
  return from_index_map(dom, cod,
                        [&](std::size_t i) { return cod.index(f(dom.label(i))); });
}

Kernel Kernel::from_dist(const Dist& d) {
  return Kernel(unit_space(), d.space(), d.weights());
}

Dist Kernel::row(std::size_t i) const {
  std::vector<Rational> w(entries_.begin() + i * cod_.size(),
                          entries_.begin() + (i + 1) * cod_.size());
  return Dist(cod_, std::move(w));
}

Kernel compose(const Kernel& g, const Kernel& f) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("compose: codomain of the first stage must match domain of the second");
  const std::size_t n = f.dom().size(), k = f.cod().size(), m = g.cod().size();
  std::vector<Rational> e(n * m, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const Rational& p = f.at(i, t);
      if (p.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Rational& q = g.at(t, j);
        if (!q.is_zero()) e[i * m + j] += p * q;
      }
    }
  return Kernel(f.dom(), g.cod(), std::move(e));
}

Kernel tensor(const Kernel& f, const Kernel& g) {
  FinSpace dom = tensor_space(f.dom(), g.dom());
  FinSpace cod = tensor_space(f.cod(), g.cod());
  const std::size_t cf = f.cod().size(), cg = g.cod().size();
  std::vector<Rational> e(dom.size() * cod.size(), Rational(0));
  for (std::size_t i1 = 0; i1 < f.dom().size(); ++i1)
    for (std::size_t i2 = 0; i2 < g.dom().size(); ++i2)
      for (std::size_t j1 = 0; j1 < cf; ++j1)
        for (std::size_t j2 = 0; j2 < cg; ++j2) {
          const Rational& p = f.at(i1, j1);
          const Rational& q = g.at(i2, j2);
          if (!p.is_zero() && !q.is_zero())
            e[(i1 * g.dom().size() + i2) * cod.size() + (j1 * cg + j2)] = p * q;
        }
  return Kernel(std::move(dom), std::move(cod), std::move(e));
}

Kernel copy_map(const FinSpace& x) {
  const std::size_t n = x.size();
  return from_index_map(x, tensor_space(x, x), [n](std::size_t i) { return i * n + i; });
}

Kernel del_map(const FinSpace& x) {
  return from_index_map(x, unit_space(), [](std::size_t) { return 0; });
}

Kernel swap_map(const FinSpace& a, const FinSpace& b) {
  const std::size_t nb = b.size(), na = a.size();
  return from_index_map(tensor_space(a, b), tensor_space(b, a), [nb, na](std::size_t i) {
    std::size_t ia = i / nb, ib = i % nb;
    return ib * na + ia;
  });
}

Kernel associator(const FinSpace& a, const FinSpace& b, const FinSpace& c) {
  const std::size_t nb = b.size(), nc = c.size();
  return from_index_map(tensor_space(tensor_space(a, b), c),
                        tensor_space(a, tensor_space(b, c)), [nb, nc](std::size_t i) {
                          std::size_t ic = i % nc, iab = i / nc;
                          std::size_t ib = iab % nb, ia = iab / nb;
                          return ia * (nb * nc) + ib * nc + ic;
                        });
}

Kernel associator_inv(const FinSpace& a, const FinSpace& b, const FinSpace& c) {
  const std::size_t nb = b.size(), nc = c.size();
  return from_index_map(tensor_space(a, tensor_space(b, c)),
                        tensor_space(tensor_space(a, b), c), [nb, nc](std::size_t i) {
                          std::size_t ibc = i % (nb * nc), ia = i / (nb * nc);
                          std::size_t ib = ibc / nc, ic = ibc % nc;
                          return (ia * nb + ib) * nc + ic;
                        });
}

Kernel left_unitor(const FinSpace& x) {
  return from_index_map(tensor_space(unit_space(), x), x, [](std::size_t i) { return i; });
}
Kernel left_unitor_inv(const FinSpace& x) {
  return from_index_map(x, tensor_space(unit_space(), x), [](std::size_t i) { return i; });
}
Kernel right_unitor(const FinSpace& x) {
  return from_index_map(tensor_space(x, unit_space()), x, [](std::size_t i) { return i; });
}
Kernel right_unitor_inv(const FinSpace& x) {
  return from_index_map(x, tensor_space(x, unit_space()), [](std::size_t i) { return i; });
}

Kernel middle_four(const FinSpace& a, const FinSpace& b, const FinSpace& c,
                   const FinSpace& d) {
  const std::size_t nb = b.size(), nc = c.size(), nd = d.size();
  return from_index_map(
      tensor_space(tensor_space(a, b), tensor_space(c, d)),
      tensor_space(tensor_space(a, c), tensor_space(b, d)), [nb, nc, nd](std::size_t i) {
        std::size_t icd = i % (nc * nd), iab = i / (nc * nd);
        std::size_t ia = iab / nb, ib = iab % nb;
        std::size_t ic = icd / nd, id = icd % nd;
        return (ia * nc + ic) * (nb * nd) + (ib * nd + id);
      });
}

Kernel projection_left(const FinSpace& a, const FinSpace& b) {
  const std::size_t nb = b.size();
  return from_index_map(tensor_space(a, b), a, [nb](std::size_t i) { return i / nb; });
}

Kernel projection_right(const FinSpace& a, const FinSpace& b) {
  const std::size_t nb = b.size();
  return from_index_map(tensor_space(a, b), b, [nb](std::size_t i) { return i % nb; });
}

Kernel coinflip() {
  return Kernel(unit_space(), two_space(), {rat(1, 2), rat(1, 2)});
}

Kernel point_mass(const FinSpace& x, const std::string& label) {
  return Kernel::from_dist(Dist::point(x, label));
}

Kernel inject_left(const FinSpace& a, const FinSpace& b) {
  return from_index_map(a, coproduct_space(a, b), [](std::size_t i) { return i; });
}

Kernel inject_right(const FinSpace& a, const FinSpace& b) {
  const std::size_t na = a.size();
  return from_index_map(b, coproduct_space(a, b), [na](std::size_t i) { return na + i; });
}

Kernel copair(const Kernel& f, const Kernel& g) {
  if (f.cod() != g.cod()) throw std::invalid_argument("copair: codomains must match");
  FinSpace dom = coproduct_space(f.dom(), g.dom());
  std::vector<Rational> e;
  e.reserve(dom.size() * f.cod().size());
  e.insert(e.end(), f.entries().begin(), f.entries().end());
  e.insert(e.end(), g.entries().begin(), g.entries().end());
  return Kernel(std::move(dom), f.cod(), std::move(e));
}

Kernel coproduct_map(const Kernel& f, const Kernel& g) {
  return copair(compose(inject_left(f.cod(), g.cod()), f),
                compose(inject_right(f.cod(), g.cod()), g));
}

Kernel coproduct_swap(const FinSpace& a, const FinSpace& b) {
  const std::size_t na = a.size(), nb = b.size();
  return from_index_map(coproduct_space(a, b), coproduct_space(b, a),
                        [na, nb](std::size_t i) { return i < na ? nb + i : i - na; });
}

Kernel distribute(const FinSpace& a, const FinSpace& b, const FinSpace& c) {
  const std::size_t na = a.size(), nb = b.size(), nc = c.size();
  return from_index_map(
      tensor_space(a, coproduct_space(b, c)),
      coproduct_space(tensor_space(a, b), tensor_space(a, c)), [na, nb, nc](std::size_t i) {
        std::size_t ia = i / (nb + nc), ibc = i % (nb + nc);
        if (ibc < nb) return ia * nb + ibc;
        return na * nb + ia * nc + (ibc - nb);
      });
}

Kernel undistribute(const FinSpace& a, const FinSpace& b, const FinSpace& c) {
  const std::size_t nb = b.size(), nc = c.size();
  const std::size_t na = a.size();
  return from_index_map(
      coproduct_space(tensor_space(a, b), tensor_space(a, c)),
      tensor_space(a, coproduct_space(b, c)), [na, nb, nc](std::size_t i) {
        if (i < na * nb) {
          std::size_t ia = i / nb, ib = i % nb;
          return ia * (nb + nc) + ib;
        }
        std::size_t j = i - na * nb;
        std::size_t ia = j / nc, ic = j % nc;
        return ia * (nb + nc) + nb + ic;
      });
}

bool is_deterministic(const Kernel& f) {
  return compose(copy_map(f.cod()), f) == compose(tensor(f, f), copy_map(f.dom()));
}

bool rows_are_point_masses(const Kernel& f) {
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    bool seen_one = false;
    for (std::size_t j = 0; j < f.cod().size(); ++j) {
      const Rational& p = f.at(i, j);
      if (p == Rational(1)) {
        if (seen_one) return false;
        seen_one = true;
      } else if (!p.is_zero()) {
        return false;
      }
    }
    if (!seen_one) return false;
  }
  return true;
}

Kernel marginal(const Kernel& h, const FinSpace& a, const FinSpace& b, Side side) {
  if (h.cod() != tensor_space(a, b))
    throw std::invalid_argument("marginal: codomain is not the declared tensor");
  return side == Side::Left ? compose(projection_left(a, b), h)
                            : compose(projection_right(a, b), h);
}

Kernel independent_pairing(const Kernel& f, const Kernel& g) {
  if (f.dom() != g.dom()) throw std::invalid_argument("pairing: domains must match");
  return compose(tensor(f, g), copy_map(f.dom()));
}

bool is_independent(const Kernel& h, const FinSpace& a, const FinSpace& b) {
  Kernel ma = marginal(h, a, b, Side::Left);
  Kernel mb = marginal(h, a, b, Side::Right);
  return h == independent_pairing(ma, mb);
}

std::vector<Kernel> solve_coinflips() {
  // Unknown row (p0, p1) in hom(I, 2). Stochasticity: p0 + p1 = 1.
  // Symmetry tau . f = f: p1 = p0. Both affine, so one exact solve.
  Matrix a = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  std::vector<Rational> rhs = {Rational(1), Rational(0)};
  std::vector<Rational> sol = solve_linear(a, rhs);
  Kernel f(unit_space(), two_space(), {sol[0], sol[1]});

  // Interchange is verified for the solution, not assumed.
  auto [lhs, rhs_k] = interchange_sides(f);
  if (lhs != rhs_k) throw std::logic_error("coinflip solution fails interchange");
  if (compose(coproduct_swap(unit_space(), unit_space()), f) != f)
    throw std::logic_error("coinflip solution fails symmetry");
  return {f};
}

std::pair<Kernel, Kernel> interchange_sides(const Kernel& f) {
  if (f.dom() != unit_space() || f.cod() != two_space())
    throw std::invalid_argument("interchange_sides expects a candidate I -> I+I");
  Kernel ff = coproduct_map(f, f);            // 2 -> 2+2
  Kernel lhs = compose(ff, f);                // I -> 2+2, four outcomes
  // (I + tau + I) on the flattened four-way coproduct swaps the middle two.
  FinSpace four = ff.cod();
  Kernel mid_swap = Kernel::deterministic(four, four, [&](const std::string& l) {
    std::size_t i = four.index(l);
    std::size_t perm[4] = {0, 2, 1, 3};
    return four.label(perm[i]);
  });
  return {lhs, compose(mid_swap, lhs)};
}

Kernel homset_midpoint_composite(const Kernel& f, const Kernel& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw std::invalid_argument("midpoint composite needs a common hom-set");
  const FinSpace& x = f.dom();
  FinSpace i = unit_space();
  Kernel step1 = right_unitor_inv(x);                    // X -> X(x)I
  Kernel step2 = tensor(Kernel::identity(x), coinflip());  // X(x)I -> X(x)(I+I)
  Kernel step3 = distribute(x, i, i);                    // -> X(x)I + X(x)I
  // X(x)I + X(x)I -> X + X by unitors, then copair(f, g).
  Kernel step4 = coproduct_map(right_unitor(x), right_unitor(x));
  Kernel step5 = copair(f, g);
  return compose(step5, compose(step4, compose(step3, compose(step2, step1))));
}

}  // namespace finstoch
