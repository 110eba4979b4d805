#pragma once

#include <cmath>
#include <optional>
#include <string_view>

namespace icup {

/// Symmetric two-user Gaussian interference channel in standard form with a
/// noiseless link of capacity `c12` from encoder 1 to encoder 2.
///
///   y1 = x1 + sqrt(a) x2 + z1
///   y2 = sqrt(a) x1 + x2 + z2,   z_i ~ N(0, 1),  E[x_i^2] <= P
struct ChannelParams {
  double power = 0.0;  ///< P, per-transmitter average power (linear)
  double gain = 0.0;   ///< a, interference link power gain (linear)
  double c12 = 0.0;    ///< cooperative link capacity, bits per channel use
};

/// Throws DomainError unless P, a, C12 are finite and nonnegative.
void validate(const ChannelParams& params);

struct DerivedParams {
  double snr = 0.0;
  double inr = 0.0;
  std::optional<double> alpha;  ///< log INR / log SNR; empty when P <= 1
  double beta = 0.0;            ///< C12 / C(P); 0 when C(P) == 0
  double b = 1.0;               ///< (1 + sqrt a)^2
};

enum class Regime { NoiseLimited, Weak, StrongCase1, StrongCase2, StrongCase3 };

std::string_view to_string(Regime regime);

/// C(x) = 1/2 log2(1 + x), bits per real dimension.
double cap(double x);

/// (1 + sqrt a)^2, the coherent combining gain of the cooperative codeword.
inline double coherent_gain(double gain) {
  const double s = 1.0 + std::sqrt(gain);
  return s * s;
}

DerivedParams derive(const ChannelParams& params);

/// Precedence on ties: NoiseLimited > Weak > StrongCase1 > StrongCase2 >
/// StrongCase3.
Regime classify(const ChannelParams& params);

inline bool is_strong(Regime regime) {
  return regime == Regime::StrongCase1 || regime == Regime::StrongCase2 ||
         regime == Regime::StrongCase3;
}

}  // namespace icup

