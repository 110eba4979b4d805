#include "icup/region_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "icup/errors.hpp"

namespace icup {

namespace {

constexpr double kFeasibilityTolerance = 1e-9;
constexpr double kSingularTolerance = 1e-12;
constexpr double kTieTolerance = 1e-12;

double dot(const RateVector& u, const RateVector& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

RateVector cross(const RateVector& u, const RateVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

// Solves the 3x3 system whose rows are the constraint normals, by Cramer's
// rule expressed through cross products.
std::optional<RateVector> intersect(const LinearConstraint& c0,
                                    const LinearConstraint& c1,
                                    const LinearConstraint& c2) {
  const RateVector n12 = cross(c1.coeffs, c2.coeffs);
  const double det = dot(c0.coeffs, n12);
  if (std::abs(det) < kSingularTolerance) return std::nullopt;
  const RateVector n20 = cross(c2.coeffs, c0.coeffs);
  const RateVector n01 = cross(c0.coeffs, c1.coeffs);
  RateVector x{};
  for (int k = 0; k < 3; ++k) {
    x[k] = (c0.rhs * n12[k] + c1.rhs * n20[k] + c2.rhs * n01[k]) / det;
  }
  return x;
}

void add_mac(std::vector<LinearConstraint>& out, const MacConstraints& m,
             int own, int other) {
  auto row = [](std::initializer_list<int> idx) {
    RateVector c{};
    for (int i : idx) c[i] = 1.0;
    return c;
  };
  constexpr int v = 2;
  out.push_back({row({v}), m.v});
  out.push_back({row({own}), m.own});
  out.push_back({row({other}), m.other});
  out.push_back({row({own, other}), m.own_other});
  out.push_back({row({own, v}), m.own_v});
  out.push_back({row({other, v}), m.other_v});
  out.push_back({row({own, other, v}), m.own_other_v});
}

// The recession cone {d : A d <= 0} of a 3-D polyhedron with a vertex is
// pointed, so its extreme rays lie on pairwise plane intersections.
bool unbounded_along(const std::vector<LinearConstraint>& cs, const RateVector& objective) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const RateVector d = cross(cs[i].coeffs, cs[j].coeffs);
      for (double sign : {1.0, -1.0}) {
        const RateVector ray{sign * d[0], sign * d[1], sign * d[2]};
        if (dot(objective, ray) <= kSingularTolerance) continue;
        const bool recedes = std::all_of(cs.begin(), cs.end(), [&](const LinearConstraint& c) {
          return dot(c.coeffs, ray) <= kSingularTolerance;
        });
        if (recedes) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<LinearConstraint> build_constraints(const PowerAllocation& pa,
                                                const ChannelParams& params) {
  const MacConstraints m = mac_region(pa, params);
  std::vector<LinearConstraint> out;
  out.reserve(17);
  add_mac(out, m, 0, 1);
  add_mac(out, m, 1, 0);
  for (int k = 0; k < 3; ++k) {
    RateVector c{};
    c[k] = -1.0;
    out.push_back({c, 0.0});
  }
  return out;
}

double max_violation(const std::vector<LinearConstraint>& constraints, const RateVector& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& c : constraints) worst = std::max(worst, dot(c.coeffs, x) - c.rhs);
  return worst;
}

PolytopeResult maximize(const std::vector<LinearConstraint>& constraints,
                        const RateVector& objective) {
  if (constraints.size() < 3) {
    throw PreconditionError("maximize needs at least three constraints");
  }
  std::optional<PolytopeResult> best;
  const std::size_t n = constraints.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto x = intersect(constraints[i], constraints[j], constraints[k]);
        if (!x) continue;
        if (max_violation(constraints, *x) > kFeasibilityTolerance) continue;
        const double value = dot(objective, *x);
        if (!best || value > best->optimum + kTieTolerance) {
          best = PolytopeResult{value, *x};
        } else if (value >= best->optimum - kTieTolerance) {
          best->optimum = std::max(best->optimum, value);
          best->vertex = std::min(best->vertex, *x);
        }
      }
    }
  }
  if (!best) throw PreconditionError("maximize: feasible set has no vertex");
  if (unbounded_along(constraints, objective)) {
    throw PreconditionError("maximize: objective is unbounded over the polytope");
  }
  return *best;
}

}  // namespace icup
