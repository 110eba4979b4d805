#include "icup/gap_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "icup/errors.hpp"
#include "icup/gdof.hpp"
#include "icup/parallel.hpp"
#include "icup/region_oracle.hpp"
#include "icup/upper_bounds.hpp"
#include "icup/weak_scheme.hpp"

namespace icup {

namespace {

constexpr double kClaimTolerance = 1e-6;
constexpr double kSoundnessTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-9;
constexpr double kExactCapacityTolerance = 1e-12;

bool is_weak_family(SchemeLabel s) {
  return s == SchemeLabel::UniversalPA || s == SchemeLabel::FullCoopPA ||
         s == SchemeLabel::OptimalGamma;
}

bool weak_scheme_applies(const ChannelParams& p) {
  return p.gain > 0.0 && p.gain <= 1.0 && p.gain * p.power >= 1.0;
}

bool strong_applies(const ChannelParams& p) {
  return p.gain > 1.0 && p.gain * p.power > 1.0;
}

SchemeRate best_weak(const ChannelParams& params) {
  SchemeRate best{universal_sum_rate(params), SchemeLabel::UniversalPA};
  const double fc = full_coop_rate(params);
  if (fc > best.rate) best = {fc, SchemeLabel::FullCoopPA};
  const double opt = optimize_gamma(params).rate;
  if (opt > best.rate) best = {opt, SchemeLabel::OptimalGamma};
  return best;
}

SchemeRate weak_rate(const ChannelParams& params, SchemeLabel label) {
  switch (label) {
    case SchemeLabel::UniversalPA: return {universal_sum_rate(params), label};
    case SchemeLabel::FullCoopPA: return {full_coop_rate(params), label};
    default: return {optimize_gamma(params).rate, SchemeLabel::OptimalGamma};
  }
}

// ---------------------------------------------------------------------------
// Suites. Each suite declares its checks and a per-point evaluator producing
// (check index, observed value) samples; points outside every hypothesis
// produce no samples.

struct CheckSpec {
  const char* name;
  double claimed;
  double tolerance;
};

struct Sample {
  std::size_t check;
  double observed;
};

using Evaluator = std::function<std::vector<Sample>(const ChannelParams&)>;

struct SuiteDef {
  std::vector<CheckSpec> checks;
  Evaluator evaluate;
};

SuiteDef theorem1_suite() {
  return {{{"min(ub1,ub2)-universal", 2.0, kClaimTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (!weak_scheme_applies(p)) return {};
            const double ub = std::min(ub_weak_enlarged(p), ub_genie(p));
            return {{0, ub - universal_sum_rate(p)}};
          }};
}

SuiteDef theorem2_suite() {
  return {{{"case1:ub2-full_coop", 1.0, kClaimTolerance},
           {"case2:ub1-full_coop", 1.5, kClaimTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (!weak_scheme_applies(p)) return {};
            const double a = p.gain;
            const double threshold =
                cap(coherent_gain(a) * (a * p.power - 1.0) / (2.0 * a + 1.0));
            const double fc = full_coop_rate(p);
            std::vector<Sample> out;
            if (p.c12 <= threshold && a * a * a * p.power * p.power <= a + 1.0) {
              out.push_back({0, ub_genie(p) - fc});
            }
            if (p.c12 >= threshold) out.push_back({1, ub_weak_enlarged(p) - fc});
            return out;
          }};
}

SuiteDef strong_suite() {
  return {{{"ub3-strong_rate", 1.0, kClaimTolerance},
           {"case2:C(bP)-strong_rate", 0.5, kClaimTolerance},
           {"exact_capacity:gap", 0.0, kExactCapacityTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (!strong_applies(p)) return {};
            const double rate = strong_rate(p).rate;
            std::vector<Sample> out{{0, ub_strong(p) - rate}};
            if (classify(p) == Regime::StrongCase2) {
              out.push_back({1, cap(coherent_gain(p.gain) * p.power) - rate});
            }
            if (capacity_condition_holds(p)) out.push_back({2, gap_report(p).gap});
            return out;
          }};
}

SuiteDef noise_limited_suite() {
  return {{{"bound-treat_as_noise", 1.0, kClaimTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (p.gain * p.power > 1.0) return {};
            const double bound = p.gain <= 1.0
                                     ? ub_weak_enlarged(p)
                                     : cap(coherent_gain(p.gain) * p.power);
            return {{0, bound - noise_limited_rate(p)}};
          }};
}

SuiteDef appendix_suite() {
  return {{{"R1-R3", 0.5, kClaimTolerance},
           {"R1-R4", 0.5, kClaimTolerance},
           {"R1-R5", 0.5, kClaimTolerance},
           {"delta1:ub1-R1'", 1.2, kClaimTolerance},
           {"delta2:ub2-R2'", 2.0, kClaimTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (!weak_scheme_applies(p)) return {};
            const UniversalRateTerms t = universal_rates(p);
            const double private_rate = 2.0 * cap(universal_pa(p).p_u / 2.0);
            return {{0, t.r[0] - t.r[2]},
                    {1, t.r[0] - t.r[3]},
                    {2, t.r[0] - t.r[4]},
                    {3, ub_weak_enlarged(p) - (t.r[0] + private_rate)},
                    {4, ub_genie(p) - (t.r[1] + private_rate)}};
          }};
}

SuiteDef oracle_suite() {
  return {{{"|LP-min(RB)|", 0.0, kOracleTolerance},
           {"|LP_symmetric-LP|", 0.0, kOracleTolerance},
           {"Rmin-min(R6,R7)", 0.0, kOracleTolerance},
           {"|universal-weak_sum_rate(gamma*)|", 0.0, kOracleTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            if (!weak_scheme_applies(p)) return {};
            std::vector<Sample> out;
            const double g_univ = universal_gamma(p);
            for (double gamma : {0.0, 0.5, g_univ, 1.0}) {
              const PowerAllocation pa = gamma_pa(p, gamma);
              auto constraints = build_constraints(pa, p);
              const PolytopeResult lp = maximize(constraints, {1.0, 1.0, 1.0});
              out.push_back({0, std::abs(lp.optimum - sum_bounds(pa, p).min())});
              constraints.push_back({{1.0, -1.0, 0.0}, 0.0});
              constraints.push_back({{-1.0, 1.0, 0.0}, 0.0});
              const PolytopeResult sym = maximize(constraints, {1.0, 1.0, 1.0});
              out.push_back({1, std::abs(sym.optimum - lp.optimum)});
            }
            const UniversalRateTerms t = universal_rates(p);
            out.push_back({2, t.r_min - std::min(t.r[5], t.r[6])});
            out.push_back({3, std::abs(universal_sum_rate(p) - weak_sum_rate(p, g_univ))});
            return out;
          }};
}

SuiteDef soundness_suite() {
  return {{{"max(rate)-min(bound)", 0.0, kSoundnessTolerance}},
          [](const ChannelParams& p) -> std::vector<Sample> {
            double bound = ub_genie(p);
            if (p.gain <= 1.0) {
              bound = std::min({bound, ub_weak_enlarged(p), ub_cgrc_exact(p)});
            }
            if (p.gain >= 1.0) bound = std::min(bound, ub_strong(p));

            double rate = noise_limited_rate(p);
            if (weak_scheme_applies(p)) {
              rate = std::max({rate, universal_sum_rate(p), full_coop_rate(p),
                               optimize_gamma(p).rate, weak_sum_rate(p, 0.0)});
            }
            if (strong_applies(p)) rate = std::max(rate, strong_rate(p).rate);
            return {{0, rate - bound}};
          }};
}

SuiteDef make_suite(Suite suite) {
  switch (suite) {
    case Suite::Theorem1: return theorem1_suite();
    case Suite::Theorem2: return theorem2_suite();
    case Suite::Strong: return strong_suite();
    case Suite::NoiseLimited: return noise_limited_suite();
    case Suite::Appendix: return appendix_suite();
    case Suite::Oracle: return oracle_suite();
    case Suite::Soundness: return soundness_suite();
    case Suite::Gdof: break;
  }
  throw UsageError("suite has no grid evaluator");
}

void record(SuiteResult& result, const CheckSpec& spec, std::size_t index,
            const ChannelParams& params, double observed) {
  CheckResult& check = result.checks[index];
  ++check.samples;
  check.max_observed = check.max_observed ? std::max(*check.max_observed, observed) : observed;
  if (observed > spec.claimed + spec.tolerance) {
    ++check.violations;
    result.violations.push_back({params, spec.claimed, observed,
                                 std::string(to_string(result.suite)) + "/" + spec.name});
  }
}

SuiteResult run_grid_suite(Suite suite, const Grid& grid) {
  const SuiteDef def = make_suite(suite);
  SuiteResult result;
  result.suite = suite;
  result.grid_points = grid.points.size();
  for (const auto& spec : def.checks) {
    result.checks.push_back({spec.name, spec.claimed, spec.tolerance, std::nullopt, 0, 0});
  }
  const auto samples = parallel_map(grid.points.size(), [&](std::size_t i) {
    return def.evaluate(grid.points[i]);
  });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].empty()) ++result.in_hypotheses;
    for (const Sample& s : samples[i]) {
      record(result, def.checks[s.check], s.check, grid.points[i], s.observed);
    }
  }
  return result;
}

// The GDOF suite checks the closed-form formula and the finite-P sandwich.
// Violation params carry (P, a = P^(alpha-1), C12 = beta C(P)) for the
// numeric checks and (alpha, 0, beta) for the formula-only checks.
SuiteResult run_gdof_suite(const VerifyOptions& options) {
  const std::vector<CheckSpec> checks{
      {"continuity@breakpoints", 0.0, 1e-5},
      {"beta_monotone", 0.0, 0.0},
      {"1-d", 0.0, 0.0},
      {"d-(2+beta)", 0.0, 0.0},
      {"|d(beta)-d(1/2)|,beta>=1/2,alpha<=2", 0.0, 0.0},
      {"achievable-bound", 0.0, kSoundnessTolerance},
      {"sandwich_width", options.gdof_sandwich_width, 0.0},
      {"bracket:achievable-d", options.gdof_sandwich_width, 0.0},
      {"bracket:d-bound", options.gdof_sandwich_width, 0.0},
  };
  SuiteResult result;
  result.suite = Suite::Gdof;
  for (const auto& spec : checks) {
    result.checks.push_back({spec.name, spec.claimed, spec.tolerance, std::nullopt, 0, 0});
  }
  auto add = [&](std::size_t index, const ChannelParams& where, double observed) {
    record(result, checks[index], index, where, observed);
  };

  const double eps = 1e-6;
  const std::vector<double> betas_dense = lin_space(0.0, 3.0, 61);
  for (double beta : betas_dense) {
    for (double bp : {0.5, 2.0 / 3.0, 1.0, 2.0}) {
      add(0, {bp, 0.0, beta}, std::abs(gdof_formula(bp - eps, beta) - gdof_formula(bp + eps, beta)));
    }
  }

  const auto alphas = lin_space(0.0, 3.0, static_cast<std::size_t>(std::llround(3.0 / options.gdof_alpha_step)) + 1);
  for (double alpha : alphas) {
    double previous = -std::numeric_limits<double>::infinity();
    for (double beta : betas_dense) {
      const double d = gdof_formula(alpha, beta);
      add(1, {alpha, 0.0, beta}, previous - d);
      previous = d;
      add(2, {alpha, 0.0, beta}, 1.0 - d);
      add(3, {alpha, 0.0, beta}, d - (2.0 + beta));
      if (beta >= 0.5 && alpha <= 2.0) {
        add(4, {alpha, 0.0, beta}, std::abs(d - gdof_formula(alpha, 0.5)));
      }
    }
  }

  struct NumericPoint {
    double alpha;
    double beta;
  };
  std::vector<NumericPoint> numeric_points;
  for (double beta : options.gdof_betas) {
    for (double alpha : alphas) numeric_points.push_back({alpha, beta});
  }
  const double p = options.gdof_power;
  const auto sandwiches = parallel_map(numeric_points.size(), [&](std::size_t i) {
    return gdof_numeric(numeric_points[i].alpha, numeric_points[i].beta, p);
  });
  for (std::size_t i = 0; i < numeric_points.size(); ++i) {
    const auto [alpha, beta] = numeric_points[i];
    const GdofSandwich& s = sandwiches[i];
    const double d = gdof_formula(alpha, beta);
    const ChannelParams where{p, std::pow(p, alpha - 1.0), beta * cap(p)};
    add(5, where, s.achievable - s.bound);
    add(6, where, s.width());
    add(7, where, s.achievable - d);
    add(8, where, d - s.bound);
  }
  result.grid_points = numeric_points.size();
  result.in_hypotheses = numeric_points.size();
  return result;
}

}  // namespace

RateReport gap_report(const ChannelParams& params, std::optional<SchemeLabel> scheme) {
  validate(params);
  RateReport r;
  r.params = params;
  r.regime = classify(params);

  SchemeRate chosen;
  if (!scheme) {
    if (r.regime == Regime::NoiseLimited) {
      chosen = {noise_limited_rate(params), SchemeLabel::TreatAsNoise};
    } else if (r.regime == Regime::Weak) {
      chosen = best_weak(params);
    } else {
      chosen = strong_rate(params);
    }
  } else if (*scheme == SchemeLabel::TreatAsNoise) {
    chosen = {noise_limited_rate(params), SchemeLabel::TreatAsNoise};
  } else if (is_weak_family(*scheme)) {
    if (!weak_scheme_applies(params)) {
      throw PreconditionError(std::string(to_string(*scheme)) +
                              " needs 0 < a <= 1 and aP >= 1 (regime is " +
                              std::string(to_string(r.regime)) + ")");
    }
    chosen = weak_rate(params, *scheme);
  } else {
    chosen = strong_rate(params);
  }

  const BoundReport bounds = best_bound(params);
  r.achievable = chosen.rate;
  r.scheme = chosen.scheme;
  r.upper = bounds.best;
  r.bound_label = bounds.best_label;
  r.gap = r.upper - r.achievable;
  return r;
}

std::vector<double> log_space(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  const double l0 = std::log10(lo);
  const double l1 = std::log10(hi);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> lin_space(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

Grid make_grid(std::string_view name) {
  const std::vector<double> base_c12{0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  Grid grid;
  grid.name = std::string(name);

  if (name == "default") {
    for (double p : log_space(1e-2, 1e6, 25)) {
      for (double a : log_space(1e-3, 1e4, 25)) {
        for (double c : base_c12) grid.points.push_back({p, a, c});
        grid.points.push_back({p, a, 1.01 * cap(coherent_gain(a) * p)});
      }
    }
    return grid;
  }

  if (name == "dense") {
    const auto gains = log_space(1e-3, 1e4, 106);
    auto powers = log_space(1e-2, 1e6, 121);
    for (double a : gains) powers.push_back(1.0 / a);
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    for (double p : powers) {
      for (double a : gains) {
        const double b = coherent_gain(a);
        for (double c : base_c12) grid.points.push_back({p, a, c});
        grid.points.push_back({p, a, cap(b * p)});
        grid.points.push_back({p, a, 1.01 * cap(b * p)});
        if (a <= 1.0 && a * p >= 1.0) {
          grid.points.push_back({p, a, cap(b * (a * p - 1.0) / (2.0 * a + 1.0))});
        }
      }
    }
    return grid;
  }

  throw UsageError("unknown grid '" + std::string(name) + "' (expected default or dense)");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Theorem1: return "theorem1";
    case Suite::Theorem2: return "theorem2";
    case Suite::Strong: return "strong";
    case Suite::NoiseLimited: return "noise-limited";
    case Suite::Appendix: return "appendix";
    case Suite::Oracle: return "oracle";
    case Suite::Soundness: return "soundness";
    case Suite::Gdof: return "gdof";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
  static constexpr Suite kAll[] = {Suite::Theorem1, Suite::Theorem2,  Suite::Strong,
                                   Suite::NoiseLimited, Suite::Appendix, Suite::Oracle,
                                   Suite::Soundness, Suite::Gdof};
  if (name == "all") return {std::begin(kAll), std::end(kAll)};
  for (Suite s : kAll) {
    if (to_string(s) == name) return {s};
  }
  throw UsageError("unknown suite '" + std::string(name) +
                   "' (expected theorem1, theorem2, strong, noise-limited, appendix, "
                   "oracle, soundness, gdof or all)");
}

SuiteResult verify_suite(Suite suite, const Grid& grid, const VerifyOptions& options) {
  if (suite == Suite::Gdof) return run_gdof_suite(options);
  return run_grid_suite(suite, grid);
}

}  // namespace icup
