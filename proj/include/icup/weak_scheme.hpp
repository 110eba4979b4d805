#pragma once

// Weak-interference achievability: Han-Kobayashi private/common splitting plus
// a cooperative codeword relayed over the C12 link and sent coherently by both
// encoders. Private power is pinned at P_u = 1/a so the interfering private
// signal arrives at the noise level.

#include <array>

#include "icup/channel_model.hpp"

namespace icup {

/// Per-transmitter power split (symmetric across both users).
struct PowerAllocation {
  double p_u = 0.0;  ///< private
  double p_w = 0.0;  ///< common
  double p_v = 0.0;  ///< cooperative, per transmitter
  double p_V = 0.0;  ///< cooperative power received at either decoder
};

/// Right-hand sides of the seven rate constraints of one receiver's MAC over
/// (R_v, R_w_own, R_w_other), with the private signals treated as noise.
struct MacConstraints {
  double v = 0.0;             ///< R_v
  double own = 0.0;           ///< R_w_i
  double other = 0.0;         ///< R_w_j
  double own_other = 0.0;     ///< R_w_i + R_w_j
  double own_v = 0.0;         ///< R_w_i + R_v
  double other_v = 0.0;       ///< R_w_j + R_v
  double own_other_v = 0.0;   ///< R_w_i + R_w_j + R_v
};

/// The three ways of bounding 2 R_w + R_v.
struct SumBounds {
  double r_b1 = 0.0;
  double r_b2 = 0.0;
  double r_b3 = 0.0;
  double r_tilde_w = 0.0;

  double min() const;
};

/// Rate terms of the universal allocation (P_w = P_V). r6 and r7 never bind.
struct UniversalRateTerms {
  std::array<double, 7> r{};  ///< r[0] .. r[6] hold R_1 .. R_7
  double r_min = 0.0;         ///< min over R_1 .. R_5
};

struct GammaOptimum {
  double gamma = 0.0;
  double rate = 0.0;
};

/// P_u = 1/a, P_v = gamma (P - 1/a), P_w = (1 - gamma)(P - 1/a).
/// Throws PreconditionError when a == 0 or aP < 1, DomainError for gamma
/// outside [0, 1].
PowerAllocation gamma_pa(const ChannelParams& params, double gamma);

/// The allocation with P_w = P_V.
PowerAllocation universal_pa(const ChannelParams& params);

/// gamma that reproduces universal_pa through gamma_pa.
double universal_gamma(const ChannelParams& params);

MacConstraints mac_region(const PowerAllocation& pa, const ChannelParams& params);

SumBounds sum_bounds(const PowerAllocation& pa, const ChannelParams& params);

/// 2 C(P_u / 2) + min(R_B1, R_B2, R_B3) at the given gamma.
double weak_sum_rate(const ChannelParams& params, double gamma);

UniversalRateTerms universal_rates(const ChannelParams& params);

/// r_min + 2 C(P_u / 2).
double universal_sum_rate(const ChannelParams& params);

/// Deterministic derivative-free maximization of weak_sum_rate over gamma:
/// 2001-point grid plus the seeds {0, universal gamma, 1}, then three rounds
/// of trisection around the incumbent.
GammaOptimum optimize_gamma(const ChannelParams& params);

/// gamma = 1: all power beyond 1/a goes to the cooperative codeword.
double full_coop_rate(const ChannelParams& params);

}  // namespace icup
