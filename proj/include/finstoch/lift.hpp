#pragma once
// The initial-functor construction at desk scale: a kernel's image in a
// coinflip target is determined row by row, each row sent to the convex
// combination of the assigned target points. Computed through eval_dist,
// so every lift exercises the normal-form and countable-midpoint path.

#include "finstoch/eval.hpp"
#include "finstoch/laws.hpp"

namespace finstoch {

// A bijective relabeling of a source space onto a target space: the
// deterministic object part of a functor into kernels.
struct ObjectMap {
  FinSpace source;
  FinSpace target;
  std::map<std::string, std::string> to_target;

  static ObjectMap identity(const FinSpace& s);
  ObjectMap(FinSpace source, FinSpace target, std::map<std::string, std::string> to_target);

  const std::string& operator()(const std::string& label) const;
};

// The morphism part: row x of the result, at the relabeled index, is
// eval_dist of the corresponding row of k against the point masses of
// the relabeled codomain.
Kernel lift_kernel(const Kernel& k, const ObjectMap& dom_map, const ObjectMap& cod_map,
                   unsigned max_steps = 256);

// Convenience: identity assignment on both sides.
Kernel lift_kernel(const Kernel& k);

// Functor-law harness: identities, composition, tensor, copy/del,
// coproducts, coinflip, checked on the samples through a pluggable lift
// (tests inject corrupted lifts to see violations reported).
struct FunctorCheckConfig {
  std::function<Kernel(const Kernel&)> lift;
  std::size_t max_pairs = 200;
};

LawReport check_functoriality(const std::vector<Kernel>& samples,
                              const FunctorCheckConfig& config);
LawReport check_functoriality(const std::vector<Kernel>& samples);

}  // namespace finstoch
