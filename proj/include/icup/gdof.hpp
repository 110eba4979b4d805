#pragma once

#include <optional>
#include <vector>

namespace icup {

/// Sum-rate normalized by C(P) at a finite P, from both directions.
struct GdofSandwich {
  double achievable = 0.0;  ///< best achievable rate / C(P)
  double bound = 0.0;       ///< best upper bound / C(P)

  double width() const { return bound - achievable; }
};

struct GdofPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double d_formula = 0.0;
  std::optional<GdofSandwich> numeric;
};

/// Generalized degrees of freedom with interference exponent alpha and
/// cooperation exponent beta (C12 = beta C(P)):
///
///   2 - 2a + min(a, b)              a < 1/2
///   min(2 - a, 2a + min(a, b))      1/2 <= a < 2/3
///   2 - a                           2/3 <= a < 1
///   a                               1 <= a < 2
///   min(2 + b, a)                   2 <= a
///
/// Throws DomainError for negative or non-finite inputs.
double gdof_formula(double alpha, double beta);

/// Evaluates the rate machinery at a = P^(alpha - 1), C12 = beta C(P).
/// Throws DomainError unless P > 1.
GdofSandwich gdof_numeric(double alpha, double beta, double power);

/// alpha = alpha_min + k step for k = 0, 1, ... while alpha <= alpha_max
/// (with 1e-9 step slack). alpha_min == alpha_max yields one point.
std::vector<GdofPoint> gdof_curve(double beta, double alpha_min, double alpha_max,
                                  double step, std::optional<double> numeric_power = {});

}  // namespace icup
