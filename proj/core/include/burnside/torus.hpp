#pragma once

#include <cstdint>
#include <vector>

#include "burnside/poset.hpp"
#include "burnside/series.hpp"

namespace burnside {

class Ctx;

// Alternating-subset operation: +/- the reduced invariant of the bounded
// subset poset of s with one fixed point adjoined. Vanishes beyond |s|;
// i = 0 gives 1.
BurnsideElement lambda_power(Ctx& ctx, const GSet& s, int i);

// Degree-n class as a binomial-style sum of induced signed power classes
// weighted by L-powers; cross-checked internally against the T^n coefficient
// of the exponential of L - 1.
LPolynomial torus_class_binomial(Ctx& ctx, int n);

// Same class computed through the alternating-subset operations of s.
LPolynomial torus_class_lambda(Ctx& ctx, const GSet& s);

// Coefficientwise restriction to a subgroup of the ambient group.
LPolynomial restrict_class(Ctx& ctx, const GroupPtr& gamma, const LPolynomial& x);

// Evaluate at q using the fixed-point count of each L-coefficient at the full
// ambient group; sigma must generate that group.
int64_t point_count(const LPolynomial& x, const Permutation& sigma, int64_t q);

// Product of (q^d - 1) over the parts d of the cycle type.
int64_t torus_point_oracle(const CycleType& t, int64_t q);

struct PointCountCheck {
  CycleType type;
  int64_t q = 0;
  int64_t formula = 0;
  int64_t oracle = 0;
  bool pass = false;
};

struct TorusClassReport {
  int n = 0;
  LPolynomial class_binomial;
  LPolynomial class_lambda;
  bool routes_equal = false;
  std::vector<PointCountCheck> point_counts;
  bool effectivity_pass = false;
  bool flag_iso_pass = false;

  bool all_pass() const;
};

// Chain-level check for one degree: for 0 <= i <= n and every chain length,
// the flag-poset chain difference equals the subset-poset chain difference
// and is effective.
bool chain_effectivity_holds(Ctx& ctx, int n);
// Induced first-block subset posets are isomorphic to the flag posets for
// all inner <= i <= n.
bool flag_isomorphisms_hold(Ctx& ctx, int n);

// Full battery for one degree: both routes and their equality, point counts
// against the oracle for every cycle type, chain-level effectivity of the
// subset-poset differences, and the induced flag-poset isomorphisms.
TorusClassReport verify_theorem(Ctx& ctx, int n);

}  // namespace burnside
