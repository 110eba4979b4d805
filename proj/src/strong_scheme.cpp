#include "icup/strong_scheme.hpp"

#include <algorithm>
#include <cmath>

#include "icup/errors.hpp"

namespace icup {

std::string_view to_string(SchemeLabel label) {
  switch (label) {
    case SchemeLabel::FullCoopOnly: return "FullCoopOnly";
    case SchemeLabel::CommonOnly: return "CommonOnly";
    case SchemeLabel::CommonPlusCoop: return "CommonPlusCoop";
    case SchemeLabel::TreatAsNoise: return "TreatAsNoise";
    case SchemeLabel::UniversalPA: return "UniversalPA";
    case SchemeLabel::FullCoopPA: return "FullCoopPA";
    case SchemeLabel::OptimalGamma: return "OptimalGamma";
    case SchemeLabel::ExactCapacity: return "ExactCapacity";
  }
  return "?";
}

bool capacity_condition_holds(const ChannelParams& params) {
  validate(params);
  return params.c12 >= cap(coherent_gain(params.gain) * params.power);
}

SchemeRate strong_rate(const ChannelParams& params) {
  const Regime regime = classify(params);
  if (!is_strong(regime)) {
    throw PreconditionError("strong_rate needs a > 1 and aP > 1, regime is " +
                            std::string(to_string(regime)));
  }
  const double p = params.power;
  const double a = params.gain;
  const double b = coherent_gain(a);
  const double full_coherent = cap(b * p);

  if (params.c12 >= full_coherent) return {full_coherent, SchemeLabel::ExactCapacity};

  switch (regime) {
    case Regime::StrongCase1:
      return {std::min(params.c12, full_coherent), SchemeLabel::FullCoopOnly};
    case Regime::StrongCase2:
      return {cap((1.0 + a) * p), SchemeLabel::CommonOnly};
    case Regime::StrongCase3: {
      // Receiver i decodes (w_j, v) jointly, then w_i. P_w = P - 1, P_V = b.
      const double common = cap(p - 1.0);
      const double coop = std::min(params.c12, cap(b / p)) + common;
      const double joint = cap((a * p + 1.0 + 2.0 * std::sqrt(a)) / p);
      return {std::min(coop, joint) + common, SchemeLabel::CommonPlusCoop};
    }
    default:
      break;
  }
  throw PreconditionError("unreachable strong regime");
}

double noise_limited_rate(const ChannelParams& params) {
  validate(params);
  return std::log2(1.0 + params.power / (1.0 + params.gain * params.power));
}

}  // namespace icup
