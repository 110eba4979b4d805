#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icup/channel_model.hpp"
#include "icup/strong_scheme.hpp"

namespace icup {

struct RateReport {
  ChannelParams params;
  Regime regime = Regime::NoiseLimited;
  double achievable = 0.0;
  SchemeLabel scheme = SchemeLabel::TreatAsNoise;
  double upper = 0.0;
  std::string bound_label;
  double gap = 0.0;
};

/// Achievable rate, best bound and gap at one operating point.
///
/// With no scheme the choice follows the regime: treat-as-noise when aP <= 1,
/// the best of the universal, full-cooperation and optimized-gamma
/// allocations in the weak regime, and strong_rate otherwise. An explicit
/// weak-family label requires a <= 1 and aP >= 1; any strong-family label
/// (FullCoopOnly, CommonOnly, CommonPlusCoop, ExactCapacity) selects
/// strong_rate. Mismatches throw PreconditionError.
RateReport gap_report(const ChannelParams& params,
                      std::optional<SchemeLabel> scheme = std::nullopt);

/// An operating-point grid, iterated P outer, a middle, C12 inner.
struct Grid {
  std::string name;
  std::vector<ChannelParams> points;
};

/// `default`: P log-spaced on [1e-2, 1e6] (25 points), a log-spaced on
/// [1e-3, 1e4] (25 points), C12 in {0, 0.1, 0.5, 1, 2, 5, 10, 1.01 C(bP)}.
/// `dense`: 15 points per decade in P and a, extra boundary points P = 1/a,
/// and per-point C12 values at C(bP) and at the full-cooperation threshold
/// C(b(aP-1)/(2a+1)).
Grid make_grid(std::string_view name);

/// n values from lo to hi, both included.
std::vector<double> log_space(double lo, double hi, std::size_t n);
std::vector<double> lin_space(double lo, double hi, std::size_t n);

enum class Suite {
  Theorem1,
  Theorem2,
  Strong,
  NoiseLimited,
  Appendix,
  Oracle,
  Soundness,
  Gdof,
};

std::string_view to_string(Suite suite);

/// Accepts the suite names above in kebab case, plus "all". Throws
/// UsageError for anything else.
std::vector<Suite> parse_suites(std::string_view name);

struct Violation {
  ChannelParams params;
  double claimed_bound = 0.0;
  double observed_gap = 0.0;
  std::string suite;  ///< "<suite>/<check>"
};

struct CheckResult {
  std::string name;
  double claimed = 0.0;
  double tolerance = 0.0;
  std::optional<double> max_observed;
  std::size_t samples = 0;
  std::size_t violations = 0;
};

struct SuiteResult {
  Suite suite = Suite::Theorem1;
  std::size_t grid_points = 0;
  std::size_t in_hypotheses = 0;  ///< points satisfying at least one check's hypotheses
  std::vector<CheckResult> checks;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  double gdof_power = 1e9;           ///< P for the GDOF sandwich
  double gdof_alpha_step = 0.05;     ///< alpha grid on [0, 3]
  std::vector<double> gdof_betas{0.0, 0.25, 0.5, 1.0, 5.0};
  double gdof_sandwich_width = 0.05;
};

/// Runs one suite over the grid (the gdof suite uses its own alpha/beta grid
/// from the options). Each recorded violation exceeds its claimed constant by
/// more than the check tolerance (1e-6 bits for the gap theorems).
SuiteResult verify_suite(Suite suite, const Grid& grid, const VerifyOptions& options = {});

}  // namespace icup
