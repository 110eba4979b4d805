#include "icup/upper_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "icup/errors.hpp"

namespace icup {

namespace {

constexpr int kEtaGridPoints = 1001;
constexpr double kEtaTolerance = 1e-10;

void require_weak_gain(const ChannelParams& params, const char* who) {
  validate(params);
  if (params.gain > 1.0) {
    throw PreconditionError(std::string(who) + " needs a <= 1, got a = " +
                            std::to_string(params.gain));
  }
}

// Bracketed objective in bits (before halving).
double cgrc_objective(double p, double a, double eta) {
  const double eta_bar = 1.0 - eta;
  const double coherent = std::log2(1.0 + a * p + 2.0 * std::sqrt(eta_bar * a) * p + p);
  const double cognitive = std::log2((1.0 + eta * p) / (1.0 + eta * a * p));
  return coherent + cognitive;
}

std::pair<double, double> maximize_cgrc(const ChannelParams& params) {
  const double p = params.power;
  const double a = params.gain;
  const double step = 1.0 / (kEtaGridPoints - 1);

  int best_i = 0;
  double best_f = cgrc_objective(p, a, 0.0);
  for (int i = 1; i < kEtaGridPoints; ++i) {
    const double f = cgrc_objective(p, a, i * step);
    if (f > best_f) {
      best_f = f;
      best_i = i;
    }
  }

  double lo = std::max(0.0, (best_i - 1) * step);
  double hi = std::min(1.0, (best_i + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = cgrc_objective(p, a, x1);
  double f2 = cgrc_objective(p, a, x2);
  while (hi - lo > kEtaTolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = cgrc_objective(p, a, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = cgrc_objective(p, a, x1);
    }
  }
  double eta = best_i * step;
  for (double x : {x1, x2, lo, hi}) {
    const double f = cgrc_objective(p, a, x);
    if (f > best_f) {
      best_f = f;
      eta = x;
    }
  }
  return {eta, 0.5 * best_f};
}

}  // namespace

double ub_cgrc_exact(const ChannelParams& params) {
  require_weak_gain(params, "ub_cgrc_exact");
  return maximize_cgrc(params).second;
}

double cgrc_best_eta(const ChannelParams& params) {
  require_weak_gain(params, "cgrc_best_eta");
  return maximize_cgrc(params).first;
}

double ub_weak_enlarged(const ChannelParams& params) {
  require_weak_gain(params, "ub_weak_enlarged");
  const double p = params.power;
  const double a = params.gain;
  return 0.5 * std::log2(1.0 + coherent_gain(a) * p) +
         0.5 * std::log2((1.0 + p) / (1.0 + a * p));
}

double ub_genie(const ChannelParams& params) {
  validate(params);
  const double p = params.power;
  const double inr1 = params.gain * p + 1.0;
  return params.c12 + std::log2((p + inr1 * inr1) / inr1);
}

double ub_strong(const ChannelParams& params) {
  validate(params);
  if (params.gain < 1.0) {
    throw PreconditionError("ub_strong needs a >= 1, got a = " +
                            std::to_string(params.gain));
  }
  const double p = params.power;
  return std::min(params.c12 + 2.0 * cap(p), cap(coherent_gain(params.gain) * p));
}

BoundReport best_bound(const ChannelParams& params) {
  validate(params);
  BoundReport r;
  r.ub2 = ub_genie(params);
  r.best = r.ub2;
  r.best_label = "ub2";
  auto offer = [&r](double value, const char* label) {
    if (value < r.best) {
      r.best = value;
      r.best_label = label;
    }
  };
  if (params.gain <= 1.0) {
    r.ub1 = ub_weak_enlarged(params);
    r.ub_cgrc_exact = ub_cgrc_exact(params);
    offer(*r.ub1, "ub1");
    offer(*r.ub_cgrc_exact, "cgrc_exact");
  }
  if (params.gain >= 1.0) {
    r.ub3 = ub_strong(params);
    offer(*r.ub3, "ub3");
  }
  return r;
}

}  // namespace icup
