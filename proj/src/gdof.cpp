#include "icup/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icup/channel_model.hpp"
#include "icup/errors.hpp"
#include "icup/gap_analysis.hpp"
#include "icup/upper_bounds.hpp"

namespace icup {

namespace {

void require_exponent(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

double gdof_formula(double alpha, double beta) {
  require_exponent(alpha, "alpha");
  require_exponent(beta, "beta");
  const double coop = std::min(alpha, beta);
  if (alpha < 0.5) return 2.0 - 2.0 * alpha + coop;
  if (alpha < 2.0 / 3.0) return std::min(2.0 - alpha, 2.0 * alpha + coop);
  if (alpha < 1.0) return 2.0 - alpha;
  if (alpha < 2.0) return alpha;
  return std::min(2.0 + beta, alpha);
}

GdofSandwich gdof_numeric(double alpha, double beta, double power) {
  require_exponent(alpha, "alpha");
  require_exponent(beta, "beta");
  if (!std::isfinite(power) || power <= 1.0) {
    throw DomainError("gdof_numeric needs finite P > 1, got " + std::to_string(power));
  }
  const double c_p = cap(power);
  const ChannelParams params{power, std::pow(power, alpha - 1.0), beta * c_p};
  const RateReport report = gap_report(params);
  return {report.achievable / c_p, report.upper / c_p};
}

std::vector<GdofPoint> gdof_curve(double beta, double alpha_min, double alpha_max,
                                  double step, std::optional<double> numeric_power) {
  require_exponent(beta, "beta");
  require_exponent(alpha_min, "alpha_min");
  require_exponent(alpha_max, "alpha_max");
  if (alpha_max < alpha_min) {
    throw DomainError("alpha_max must be >= alpha_min");
  }
  if (!std::isfinite(step) || step <= 0.0) {
    throw DomainError("step must be finite and > 0");
  }
  if (numeric_power && !(std::isfinite(*numeric_power) && *numeric_power > 1.0)) {
    throw DomainError("numeric P must be finite and > 1");
  }

  const auto count = static_cast<std::size_t>(std::floor((alpha_max - alpha_min) / step + 1e-9)) + 1;
  std::vector<GdofPoint> curve;
  curve.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GdofPoint pt;
    pt.alpha = alpha_min + static_cast<double>(k) * step;
    pt.beta = beta;
    pt.d_formula = gdof_formula(pt.alpha, beta);
    if (numeric_power) pt.numeric = gdof_numeric(pt.alpha, beta, *numeric_power);
    curve.push_back(pt);
  }
  return curve;
}

}  // namespace icup
