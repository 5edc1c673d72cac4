#include "cvt/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace cvt::schemes {

namespace {

constexpr double kSlack = 1e-12;

void check_open_unit_interval(double transmittance) {
  if (!(transmittance > 0.0 && transmittance < 1.0)) {
    throw std::domain_error("transmittance must lie strictly inside (0, 1)");
  }
}

}  // namespace

NoiseBudget::NoiseBudget(double gain, double added_state_noise,
                         double added_measurement_noise)
    : g(gain), var_n(added_state_noise), var_m(added_measurement_noise) {
  if (!(g > 0.0)) {
    throw std::domain_error("gain must be positive");
  }
  if (var_m < 1.0 - kSlack) {
    throw std::domain_error("measurement noise below one shot-noise unit");
  }
  const double floor_n = std::abs(1.0 - g * g) / (g * g);
  if (var_n < floor_n - kSlack) {
    throw std::domain_error("state noise below the gain floor");
  }
  if (var_n * var_m < 1.0 - kSlack) {
    throw std::domain_error("noise product below the tradeoff bound");
  }
}

FeedForwardScheme::FeedForwardScheme(double transmittance, double detector_eff,
                                     double vis)
    : T(transmittance), detector_efficiency(detector_eff), visibility(vis) {
  check_open_unit_interval(transmittance);
  if (!(detector_efficiency > 0.0 && detector_efficiency <= 1.0) ||
      !(visibility > 0.0 && visibility <= 1.0)) {
    throw std::domain_error("detector efficiency and visibility must lie in (0, 1]");
  }
  const double root_t = std::sqrt(T);
  lambda = std::sqrt(2.0) * (1.0 - root_t) / std::sqrt(1.0 - T);
  kappa = std::sqrt(2.0) / std::sqrt(1.0 - T);
}

TeleportationScheme::TeleportationScheme(double squeezing) : r(squeezing) {
  if (!(r >= 0.0)) {
    throw std::domain_error("squeezing must be >= 0");
  }
}

NoiseBudget feedforward_noises(double transmittance) {
  check_open_unit_interval(transmittance);
  const double root_t = std::sqrt(transmittance);
  const double var_n = 2.0 * (1.0 - root_t) * (1.0 - root_t) / (1.0 - transmittance);
  const double var_m = (1.0 + transmittance) / (1.0 - transmittance);
  return {1.0, var_n, var_m};
}

Fidelities fidelities_from_budget(const NoiseBudget& budget) {
  if (std::abs(budget.g - 1.0) > kSlack) {
    throw std::logic_error("fidelity maps are defined only at unity gain");
  }
  return {2.0 / (3.0 + budget.var_m), 2.0 / (2.0 + budget.var_n)};
}

double tradeoff_bound(double estimation_fidelity) {
  const double g = estimation_fidelity;
  if (!(g > 0.0 && g <= 0.5 + kSlack)) {
    throw std::domain_error("estimation fidelity must lie in (0, 1/2]");
  }
  const double radicand = std::max(0.0, (1.0 - g) * (1.0 - 2.0 * g));
  // Rationalized form of G / (2(1 - G - sqrt((1-G)(1-2G)))); avoids the
  // cancellation near G = 0.
  return (1.0 - g + std::sqrt(radicand)) / (2.0 * (1.0 - g));
}

double unity_gain_noise_bound(double var_m) {
  if (var_m < 1.0 - kSlack) {
    throw std::domain_error("measurement noise must be >= 1");
  }
  const double radicand = std::max(0.0, var_m * var_m - 1.0);
  return 2.0 * (var_m - std::sqrt(radicand));
}

TradeoffPoint feedforward_point(double transmittance) {
  const NoiseBudget budget = feedforward_noises(transmittance);
  const Fidelities f = fidelities_from_budget(budget);
  return {transmittance, budget, f.G, f.F};
}

TradeoffPoint teleportation_point(double squeezing) {
  if (!(squeezing >= 0.0)) {
    throw std::domain_error("squeezing must be >= 0");
  }
  const NoiseBudget budget{1.0, 2.0 * std::exp(-2.0 * squeezing),
                           std::cosh(2.0 * squeezing)};
  const Fidelities f = fidelities_from_budget(budget);
  return {squeezing, budget, f.G, f.F};
}

TradeoffPoint degraded_feedforward_point(double transmittance,
                                         double detector_efficiency,
                                         double visibility) {
  const FeedForwardScheme scheme(transmittance, detector_efficiency, visibility);
  const double eta = detector_efficiency * visibility * visibility;
  const double t = transmittance;
  const double root_t = std::sqrt(t);
  // Loss eta in front of the in-loop detection: the re-tuned feed-forward
  // gain is lambda/sqrt(eta), the estimation scale kappa/sqrt(eta).
  const double var_n = 2.0 * (1.0 - root_t) * (1.0 - root_t) / ((1.0 - t) * eta);
  const double var_m = (eta * t + 2.0 - eta) / (eta * (1.0 - t));
  const NoiseBudget budget{1.0, var_n, var_m};
  const Fidelities f = fidelities_from_budget(budget);
  return {transmittance, budget, f.G, f.F};
}

}  // namespace cvt::schemes
