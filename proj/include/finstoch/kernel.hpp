#pragma once
// The category of finite spaces and exact row-stochastic kernels:
// composition, tensor, the copy/delete comonoids, coproducts with
// distributivity, the fair coinflip, and the determinism and
// independence predicates. All equalities are exact.

#include <functional>
#include <vector>

#include "finstoch/dist.hpp"
#include "finstoch/rational.hpp"
#include "finstoch/space.hpp"

namespace finstoch {

class Kernel {
public:
  // Row-major entries; every row must sum to exactly 1, entries in [0,1].
  Kernel(FinSpace dom, FinSpace cod, std::vector<Rational> entries);

  static Kernel identity(const FinSpace& x);
  static Kernel from_rows(const FinSpace& dom, const FinSpace& cod,
                          const std::vector<std::vector<Rational>>& rows);
  // Point-mass rows given by a label function dom -> cod.
  static Kernel deterministic(const FinSpace& dom, const FinSpace& cod,
                              const std::function<std::string(const std::string&)>& f);
  static Kernel from_dist(const Dist& d);  // I -> space

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cod_.size() + j];
  }
  const Rational& at(const std::string& x, const std::string& y) const {
    return at(dom_.index(x), cod_.index(y));
  }
  const std::vector<Rational>& entries() const { return entries_; }

  Dist row(std::size_t i) const;

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Kernel& a, const Kernel& b) { return !(a == b); }

private:
  FinSpace dom_;
  FinSpace cod_;
  std::vector<Rational> entries_;
};

// g after f (Chapman-Kolmogorov); requires cod(f) == dom(g).
Kernel compose(const Kernel& g, const Kernel& f);

// Kronecker-style product on tensor spaces, row-major pairing order.
Kernel tensor(const Kernel& f, const Kernel& g);

// Comonoid structure.
Kernel copy_map(const FinSpace& x);   // X -> X (x) X, point mass at (x,x)
Kernel del_map(const FinSpace& x);    // X -> I

// Structural isomorphisms (deterministic permutations).
Kernel swap_map(const FinSpace& a, const FinSpace& b);        // A(x)B -> B(x)A
Kernel associator(const FinSpace& a, const FinSpace& b, const FinSpace& c);      // (A(x)B)(x)C -> A(x)(B(x)C)
Kernel associator_inv(const FinSpace& a, const FinSpace& b, const FinSpace& c);
Kernel left_unitor(const FinSpace& x);       // I(x)X -> X
Kernel left_unitor_inv(const FinSpace& x);
Kernel right_unitor(const FinSpace& x);      // X(x)I -> X
Kernel right_unitor_inv(const FinSpace& x);
// ((a,b),(c,d)) |-> ((a,c),(b,d)) : (A(x)B)(x)(C(x)D) -> (A(x)C)(x)(B(x)D)
Kernel middle_four(const FinSpace& a, const FinSpace& b, const FinSpace& c, const FinSpace& d);
// A(x)B -> A and A(x)B -> B, i.e. (id (x) del) and (del (x) id) up to unitors.
Kernel projection_left(const FinSpace& a, const FinSpace& b);
Kernel projection_right(const FinSpace& a, const FinSpace& b);

// The fair coinflip I -> I + I, row (1/2, 1/2).
Kernel coinflip();
// I -> X, the point mass at a label.
Kernel point_mass(const FinSpace& x, const std::string& label);

// Coproduct structure.
Kernel inject_left(const FinSpace& a, const FinSpace& b);   // A -> A+B
Kernel inject_right(const FinSpace& a, const FinSpace& b);  // B -> A+B
Kernel copair(const Kernel& f, const Kernel& g);            // A+B -> C from A->C, B->C
Kernel coproduct_map(const Kernel& f, const Kernel& g);     // f+g : A+B -> C+D
Kernel coproduct_swap(const FinSpace& a, const FinSpace& b);  // tau: A+B -> B+A
// A(x)(B+C) -> A(x)B + A(x)C and its inverse.
Kernel distribute(const FinSpace& a, const FinSpace& b, const FinSpace& c);
Kernel undistribute(const FinSpace& a, const FinSpace& b, const FinSpace& c);

// True iff copy . f == (f (x) f) . copy, computed exactly.
bool is_deterministic(const Kernel& f);
// The concrete criterion; agreement with is_deterministic is a test, not
// an assumption.
bool rows_are_point_masses(const Kernel& f);

enum class Side { Left, Right };

// Marginal of h: X -> A(x)B on the declared factorization, via the
// projection (A (x) del_B) resp. (del_A (x) B).
Kernel marginal(const Kernel& h, const FinSpace& a, const FinSpace& b, Side side);
// (f (x) g) . copy : X -> A(x)B.
Kernel independent_pairing(const Kernel& f, const Kernel& g);
// True iff h equals the independent pairing of its own marginals.
bool is_independent(const Kernel& h, const FinSpace& a, const FinSpace& b);

// Solves the stochasticity + symmetry constraints over hom(I, 2) by exact
// linear solving, then verifies interchange for each solution by block
// matrices. Returns all solutions (provably a singleton).
std::vector<Kernel> solve_coinflips();

// The midpoint of a hom-set built from the coinflip:
//   X ~ X(x)I -> X(x)(I+I) -> X(x)I + X(x)I ~ X+X -> Y  via copair(f,g).
Kernel homset_midpoint_composite(const Kernel& f, const Kernel& g);

// Both sides of the coinflip interchange law, as explicit composites on
// the left-associated four-way coproduct: (f+f).f and (I+tau+I).(f+f).f.
std::pair<Kernel, Kernel> interchange_sides(const Kernel& f);

}  // namespace finstoch
