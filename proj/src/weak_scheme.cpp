#include "icup/weak_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icup/errors.hpp"

namespace icup {

namespace {

constexpr int kGammaGridPoints = 2001;
constexpr int kTrisectionRounds = 3;

void require_weak_allocation(const ChannelParams& params) {
  validate(params);
  if (params.gain <= 0.0) {
    throw PreconditionError("weak scheme needs a > 0 (private power is 1/a)");
  }
  if (params.gain * params.power < 1.0) {
    throw PreconditionError("weak scheme needs aP >= 1, got aP = " +
                            std::to_string(params.gain * params.power));
  }
}

// Private power is 1/a, capped at P so that aP == 1 up to rounding does not
// leave a tiny negative budget.
double private_power(const ChannelParams& params) {
  return std::min(params.power, 1.0 / params.gain);
}

double residual_power(const ChannelParams& params) {
  return std::max(0.0, params.power - 1.0 / params.gain);
}

}  // namespace

double SumBounds::min() const { return std::min({r_b1, r_b2, r_b3}); }

PowerAllocation gamma_pa(const ChannelParams& params, double gamma) {
  require_weak_allocation(params);
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
  const double rest = residual_power(params);
  PowerAllocation pa;
  pa.p_u = private_power(params);
  pa.p_v = gamma * rest;
  pa.p_w = rest - pa.p_v;
  pa.p_V = coherent_gain(params.gain) * pa.p_v;
  return pa;
}

PowerAllocation universal_pa(const ChannelParams& params) {
  require_weak_allocation(params);
  const double b = coherent_gain(params.gain);
  const double rest = residual_power(params);
  PowerAllocation pa;
  pa.p_u = private_power(params);
  pa.p_w = rest / (1.0 + 1.0 / b);
  pa.p_v = pa.p_w / b;
  pa.p_V = pa.p_w;
  return pa;
}

double universal_gamma(const ChannelParams& params) {
  require_weak_allocation(params);
  // P_v / (P - 1/a) = (1/b) / (1 + 1/b) = 1 / (1 + b), independent of P.
  return 1.0 / (1.0 + coherent_gain(params.gain));
}

MacConstraints mac_region(const PowerAllocation& pa, const ChannelParams& params) {
  validate(params);
  const double a = params.gain;
  const double noise = pa.p_u + 2.0;
  MacConstraints m;
  m.v = std::min(cap(pa.p_V / noise), params.c12);
  m.own = cap(pa.p_w / noise);
  m.other = cap(a * pa.p_w / noise);
  m.own_other = cap(pa.p_w * (1.0 + a) / noise);
  m.own_v = cap((pa.p_w + pa.p_V) / noise);
  m.other_v = cap((a * pa.p_w + pa.p_V) / noise);
  m.own_other_v = cap((pa.p_w + a * pa.p_w + pa.p_V) / noise);
  return m;
}

SumBounds sum_bounds(const PowerAllocation& pa, const ChannelParams& params) {
  const MacConstraints m = mac_region(pa, params);
  SumBounds s;
  s.r_tilde_w = std::min(m.other, 0.5 * m.own_other);
  s.r_b1 = m.own_other_v;
  s.r_b2 = 2.0 * s.r_tilde_w + m.v;
  s.r_b3 = m.other_v + s.r_tilde_w;
  return s;
}

double weak_sum_rate(const ChannelParams& params, double gamma) {
  const PowerAllocation pa = gamma_pa(params, gamma);
  return 2.0 * cap(pa.p_u / 2.0) + sum_bounds(pa, params).min();
}

UniversalRateTerms universal_rates(const ChannelParams& params) {
  const PowerAllocation pa = universal_pa(params);
  const double a = params.gain;
  const double noise = pa.p_u + 2.0;
  const double own = cap(pa.p_w / noise);
  const double cross = cap(a * pa.p_w / noise);
  const double pair = cap((1.0 + a) * pa.p_w / noise);

  UniversalRateTerms t;
  t.r[0] = cap((2.0 + a) * pa.p_w / noise);
  t.r[1] = 2.0 * cross + params.c12;
  t.r[2] = pair + params.c12;
  t.r[3] = pair + cross;
  t.r[4] = 1.5 * pair;
  t.r[5] = 2.0 * cross + own;
  t.r[6] = pair + own;
  t.r_min = *std::min_element(t.r.begin(), t.r.begin() + 5);
  return t;
}

double universal_sum_rate(const ChannelParams& params) {
  const PowerAllocation pa = universal_pa(params);
  return universal_rates(params).r_min + 2.0 * cap(pa.p_u / 2.0);
}

GammaOptimum optimize_gamma(const ChannelParams& params) {
  require_weak_allocation(params);

  GammaOptimum best{0.0, weak_sum_rate(params, 0.0)};
  auto consider = [&](double gamma) {
    gamma = std::clamp(gamma, 0.0, 1.0);
    const double rate = weak_sum_rate(params, gamma);
    if (rate > best.rate) best = {gamma, rate};
  };

  const double step = 1.0 / (kGammaGridPoints - 1);
  for (int i = 1; i < kGammaGridPoints; ++i) consider(i * step);
  consider(universal_gamma(params));

  double lo = std::max(0.0, best.gamma - step);
  double hi = std::min(1.0, best.gamma + step);
  for (int round = 0; round < kTrisectionRounds; ++round) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double f1 = weak_sum_rate(params, m1);
    const double f2 = weak_sum_rate(params, m2);
    consider(m1);
    consider(m2);
    if (f1 < f2) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return best;
}

double full_coop_rate(const ChannelParams& params) {
  require_weak_allocation(params);
  const double a = params.gain;
  const double coop = cap(coherent_gain(a) * std::max(0.0, a * params.power - 1.0) /
                          (2.0 * a + 1.0));
  return std::min(params.c12, coop) + 2.0 * cap(1.0 / (2.0 * a));
}

}  // namespace icup
