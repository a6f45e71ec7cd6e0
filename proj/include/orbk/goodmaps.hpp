#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbk/fingroup.hpp"

namespace orbk {

/// Data of the inclusion H^g / C(g) -> C^n / G.
struct SplittingProblem {
  ElementIndex element = 0;
  std::vector<ElementIndex> centralizer;
  /// K_g: elements of C(g) acting trivially on H^g.
  std::vector<ElementIndex> kernel;
  std::size_t quotient_order = 1;
  /// Basis of H^g as column vectors.
  std::vector<std::vector<Cyclotomic>> fixed_basis;
};

/// A homomorphism s: C(g)/K_g -> C(g) with pi o s = id, given by the images
/// of the chosen quotient generators, plus its image subgroup.
struct Splitting {
  std::vector<ElementIndex> generator_images;
  std::vector<ElementIndex> image;
};

struct GoodnessVerdict {
  bool good = false;
  SplittingProblem problem;
  /// Elements of C(g) whose cosets generate the quotient.
  std::vector<ElementIndex> quotient_generators;
  std::vector<Splitting> splittings;
  /// Splittings up to conjugation by K_g.
  std::size_t classes = 0;
};

/// Throws IdentityElement for g = 1, TrivialFixedSpace when H^g = 0.
SplittingProblem splitting_problem(const FiniteMatrixGroup& group, ElementIndex g);

/// Exhaustive search for splittings: generator images range over their
/// cosets, pruned whenever the partial image meets K_g nontrivially.
GoodnessVerdict fixed_locus_goodness(const FiniteMatrixGroup& group, ElementIndex g);

/// A coordinate subspace W with a prescribed scalar action zeta_m^k.
struct LiftProblem {
  std::vector<std::size_t> axes;
  std::size_t order = 2;
  std::int64_t character = 1;
  /// Restrict candidate images to these elements (all of G when empty).
  std::vector<ElementIndex> within;
};

struct CompatibleSystemSet {
  /// Generator images of the monomorphisms Z_m -> G, ascending.
  std::vector<ElementIndex> lifts;
  /// Partition of lifts under conjugation by the pointwise stabilizer of W.
  std::vector<std::vector<ElementIndex>> classes;
  std::vector<ElementIndex> stabilizer;
};

/// All lifts, possibly none. Throws InvalidArgument on a malformed problem.
CompatibleSystemSet find_equivariant_lifts(const FiniteMatrixGroup& group, const LiftProblem& problem);

/// As find_equivariant_lifts, but throws NoLifts when there are none.
CompatibleSystemSet enumerate_equivariant_lifts(const FiniteMatrixGroup& group, const LiftProblem& problem);

/// The same goodness question answered through the lift scan inside C(g).
/// Applies only when C(g)/K_g is cyclic, H^g is a coordinate subspace and a
/// generator of the quotient acts on it by a scalar; otherwise nullopt.
std::optional<bool> goodness_via_lifts(const FiniteMatrixGroup& group, ElementIndex g);

/// Nodal matching lambda_nu(x) * lambda_omega(x) = 1. Throws OrderMismatch.
bool nodal_check(const FiniteMatrixGroup& group, ElementIndex lam_nu, ElementIndex lam_omega);

}  // namespace orbk
