#pragma once

#include <string_view>

#include "icup/channel_model.hpp"

namespace icup {

enum class SchemeLabel {
  FullCoopOnly,    ///< strong case 1: all power on the cooperative codeword
  CommonOnly,      ///< strong case 2: all power on common codewords
  CommonPlusCoop,  ///< strong case 3: P_w = P - 1, P_V = b
  TreatAsNoise,
  UniversalPA,
  FullCoopPA,
  OptimalGamma,
  ExactCapacity,   ///< C12 >= C(bP): full coherent cooperation hits the bound
};

std::string_view to_string(SchemeLabel label);

struct SchemeRate {
  double rate = 0.0;
  SchemeLabel scheme = SchemeLabel::ExactCapacity;
};

/// Strong-interference (a > 1, aP > 1) sum-rate. The exact-capacity branch
/// takes precedence over the per-case schemes. Throws PreconditionError
/// outside the strong regime.
SchemeRate strong_rate(const ChannelParams& params);

/// Treat interference as noise with all power private and the cooperative
/// link unused: log2(1 + P / (1 + aP)).
double noise_limited_rate(const ChannelParams& params);

/// C12 >= C(bP).
bool capacity_condition_holds(const ChannelParams& params);

}  // namespace icup
