#include "icup/channel_model.hpp"

#include <cmath>
#include <string>

#include "icup/errors.hpp"

namespace icup {

namespace {

void require_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

void validate(const ChannelParams& params) {
  require_nonnegative(params.power, "P");
  require_nonnegative(params.gain, "a");
  require_nonnegative(params.c12, "C12");
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::NoiseLimited: return "NoiseLimited";
    case Regime::Weak: return "Weak";
    case Regime::StrongCase1: return "StrongCase1";
    case Regime::StrongCase2: return "StrongCase2";
    case Regime::StrongCase3: return "StrongCase3";
  }
  return "?";
}

double cap(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("cap: argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
  return 0.5 * std::log2(1.0 + x);
}

DerivedParams derive(const ChannelParams& params) {
  validate(params);
  DerivedParams d;
  d.snr = params.power;
  d.inr = params.gain * params.power;
  if (params.power > 1.0) {
    // INR = 0 gives alpha = -inf; leave it to callers to treat a = 0.
    d.alpha = std::log(d.inr) / std::log(d.snr);
  }
  const double c_p = cap(params.power);
  d.beta = c_p > 0.0 ? params.c12 / c_p : 0.0;
  d.b = coherent_gain(params.gain);
  return d;
}

Regime classify(const ChannelParams& params) {
  validate(params);
  const double p = params.power;
  const double a = params.gain;
  if (a * p <= 1.0) return Regime::NoiseLimited;
  if (a <= 1.0) return Regime::Weak;
  if (p <= 1.0) return Regime::StrongCase1;
  if (a <= p) return Regime::StrongCase2;
  return Regime::StrongCase3;
}

}  // namespace icup
