#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/torus.hpp"

namespace burnside {

class Ctx;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short context: what was covered, or the first failure
};

// Degree-by-degree equality of the two class routes.
CheckResult check_torus_identity(Ctx& ctx, int max_n);
// Formula evaluations against the product oracle for every cycle type.
CheckResult check_point_counts(Ctx& ctx, int max_n);
// Signed power classes: recursion, exponential route and the alternating
// subset operation agree through max_i.
CheckResult check_minus_one_agreement(Ctx& ctx, int max_i);
// exp(P + Q) = exp(P) * exp(Q) on random integer polynomials.
CheckResult check_exp_homomorphism(Ctx& ctx, int trials, int truncation, uint64_t seed);
// Tuple-set stratification: the full function set equals the star-n-th power
// of the base class (via exp) for trivially-acted bases.
CheckResult check_power_stratification(Ctx& ctx, int max_points, int max_n);
// Induction commutes with the chain invariant on random invariant orders.
CheckResult check_induce_lefschetz(Ctx& ctx, int trials, uint64_t seed);
// Induced small subset posets match the flag posets equivariantly.
CheckResult check_flag_isomorphisms(Ctx& ctx, int max_n);
// Chain-level differences of the subset posets are effective.
CheckResult check_chain_effectivity(Ctx& ctx, int max_n);
// Class counts of the symmetric-group tables against known values.
CheckResult check_subgroup_class_counts(Ctx& ctx, int max_n);
// Triangularity, diagonal and first-column identities of the mark matrices.
CheckResult check_marks_structure(Ctx& ctx, int max_n);
// Marks are ring homomorphisms on random products.
CheckResult check_ghost_multiplicativity(Ctx& ctx, int per_degree, int max_n, uint64_t seed);
// Orbit-decomposition products against the double-coset oracle, all pairs.
CheckResult check_mackey_products(Ctx& ctx, int max_n);
// induce(restrict(y) * x) = y * induce(x) on random elements.
CheckResult check_projection_formula(Ctx& ctx, int trials, uint64_t seed);
// Vanishing above the set size, top value, and binomial fixed-point counts of
// the alternating subset operations.
CheckResult check_lambda_sanity(Ctx& ctx, int max_n);
// Reduced invariant of the augmented subset poset equals the difference of
// consecutive bounded ones.
CheckResult check_subset_poset_recursion(Ctx& ctx, int max_size);
// Explicit comparison maps between the two-label poset (opposed) and the
// bounded subset poset of the augmented point set: the forward map is an
// equivariant morphism with the backward map as a section, the round trip is
// pointwise comparable to the identity, and the invariants agree. The
// backward map itself is order preserving only in degrees 0 and 1; the check
// pins that boundary.
CheckResult check_homotopy_maps(Ctx& ctx, int max_n);

// suite: "torus", "lemmas", "series" or "all".
std::vector<CheckResult> run_suite(Ctx& ctx, const std::string& suite, int max_n,
                                   uint64_t seed);

}  // namespace burnside
