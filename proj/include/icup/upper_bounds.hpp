#pragma once

#include <optional>
#include <string>

#include "icup/channel_model.hpp"

namespace icup {

/// Every sum-capacity upper bound that applies at a point; fields for
/// families that do not apply are empty.
struct BoundReport {
  std::optional<double> ub1;            ///< enlarged cognitive-radio bound, a <= 1
  std::optional<double> ub_cgrc_exact;  ///< cognitive-radio sum-capacity, a <= 1
  double ub2 = 0.0;                     ///< genie-aided bound plus C12
  std::optional<double> ub3;            ///< cut-set / strong cognitive bound, a >= 1
  double best = 0.0;
  std::string best_label;
};

/// Sum-capacity of the weak-interference cognitive radio channel:
///   1/2 max_eta [log(1 + aP + 2 sqrt((1-eta) a) P + P) + log((1+eta P)/(1+eta aP))]
/// Grid of 1001 points, then golden-section to an argument width of 1e-10.
double ub_cgrc_exact(const ChannelParams& params);

/// Argmax eta of the objective above.
double cgrc_best_eta(const ChannelParams& params);

double ub_weak_enlarged(const ChannelParams& params);

double ub_genie(const ChannelParams& params);

/// min{C12 + 2 C(P), C(bP)}; requires a >= 1.
double ub_strong(const ChannelParams& params);

/// a < 1: {ub1, exact, ub2}; a > 1: {ub2, ub3}; a == 1: all four.
BoundReport best_bound(const ChannelParams& params);

}  // namespace icup
