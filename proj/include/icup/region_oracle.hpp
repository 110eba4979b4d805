#pragma once

// Brute-force LP over the 3-variable common/cooperative rate polytope,
// used as an independent check of the closed-form sum bounds.

#include <array>
#include <vector>

#include "icup/channel_model.hpp"
#include "icup/weak_scheme.hpp"

namespace icup {

/// Variable order everywhere: (R_w1, R_w2, R_v).
using RateVector = std::array<double, 3>;

/// coeffs . x <= rhs
struct LinearConstraint {
  RateVector coeffs{};
  double rhs = 0.0;
};

struct PolytopeResult {
  double optimum = 0.0;
  RateVector vertex{};
};

/// Seven constraints per receiver MAC (14 total, duplicates kept) followed by
/// the three nonnegativity constraints -x_k <= 0.
std::vector<LinearConstraint> build_constraints(const PowerAllocation& pa,
                                                const ChannelParams& params);

/// Exact maximum of objective . x over the polytope by enumerating every
/// vertex (intersection of three constraint planes). Ties are broken towards
/// the lexicographically smallest vertex. Throws PreconditionError when the
/// feasible set is empty or the objective is unbounded.
PolytopeResult maximize(const std::vector<LinearConstraint>& constraints,
                        const RateVector& objective);

/// Largest violation coeffs . x - rhs over all constraints (<= 0 if feasible).
double max_violation(const std::vector<LinearConstraint>& constraints,
                     const RateVector& x);

}  // namespace icup
