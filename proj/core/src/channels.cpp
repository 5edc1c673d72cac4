#include "cvt/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "cvt/optimize.hpp"

namespace cvt::channels {

LossyChannelSpec::LossyChannelSpec(double transmission) : eta(transmission) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::domain_error("channel transmission must lie in (0, 1]");
  }
}

ErasureChannelSpec::ErasureChannelSpec(double success_probability)
    : p(success_probability) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("success probability must lie in [0, 1]");
  }
}

AdditiveNoiseSpec::AdditiveNoiseSpec(double added_noise) : chi(added_noise) {
  if (!(chi >= 0.0)) {
    throw std::domain_error("added noise must be >= 0");
  }
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Classical: return "classical";
    case Strategy::Hybrid: return "hybrid";
    case Strategy::Quantum: return "quantum";
  }
  return "";
}

std::string to_string(NoiseVerdict v) {
  switch (v) {
    case NoiseVerdict::Classical: return "classical";
    case NoiseVerdict::Quantum: return "quantum";
    case NoiseVerdict::Tie: return "tie";
  }
  return "";
}

double lossy_amplifier_fidelity(const LossyChannelSpec& channel) {
  return channel.eta;
}

schemes::NoiseBudget lossy_hybrid_noise(const LossyChannelSpec& channel,
                                        double transmittance) {
  const double eta = channel.eta;
  const double t = transmittance;
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("tap transmittance must lie in [0, 1)");
  }
  const double root_et = std::sqrt(eta * t);
  const double tap = std::sqrt(eta * (1.0 - t)) -
                     std::sqrt(t) * (1.0 - root_et) / std::sqrt(1.0 - t);
  const double var_n = tap * tap + (1.0 - eta) +
                       (1.0 - root_et) * (1.0 - root_et) / (1.0 - t);
  const double var_m = (1.0 + t) / (1.0 - t);
  return {1.0, var_n, var_m};
}

double lossy_hybrid_fidelity(const LossyChannelSpec& channel, double transmittance) {
  return 2.0 / (2.0 + lossy_hybrid_noise(channel, transmittance).var_n);
}

OptimizationResult lossy_hybrid_optimize(const LossyChannelSpec& channel) {
  const double baseline = lossy_amplifier_fidelity(channel);
  if (channel.eta == 1.0) {
    // Lossless channel: keep everything quantum (T -> 1 boundary).
    return {1.0, 1.0, baseline, 0.0, Strategy::Quantum};
  }
  const auto best = maximize_scalar(
      [&](double t) { return lossy_hybrid_fidelity(channel, t); }, 0.0,
      1.0 - 1e-9, 1000, 1e-9);
  return {best.x, best.value, baseline, best.value - baseline, Strategy::Hybrid};
}

double erasure_fidelity(const ErasureChannelSpec& channel, double transmittance) {
  const double t = transmittance;
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("tap transmittance must lie in [0, 1)");
  }
  const double transfer = (1.0 - t) / (2.0 - 2.0 * std::sqrt(t));
  const double estimation = (1.0 - t) / (2.0 - t);
  return channel.p * transfer + (1.0 - channel.p) * estimation;
}

OptimizationResult erasure_optimize(const ErasureChannelSpec& channel) {
  const double p = channel.p;
  const double baseline = std::max(p, 0.5);
  const auto interior = maximize_scalar(
      [&](double t) { return erasure_fidelity(channel, t); }, 0.0, 1.0 - 1e-9,
      1000, 1e-9);
  // Pure quantum transmission is the T -> 1 boundary with fidelity p.
  if (p >= interior.value - 1e-12) {
    return {1.0, p, baseline, p - baseline, Strategy::Quantum};
  }
  if (interior.x < 1e-9) {
    // Full estimation, classical channel only.
    const double value = erasure_fidelity(channel, 0.0);
    return {0.0, value, baseline, value - baseline, Strategy::Classical};
  }
  return {interior.x, interior.value, baseline, interior.value - baseline,
          Strategy::Hybrid};
}

NoiseVerdict additive_noise_decision(const AdditiveNoiseSpec& channel) {
  const double quantum = 2.0 / (2.0 + channel.chi);
  const double classical = 0.5;
  if (quantum > classical) return NoiseVerdict::Quantum;
  if (quantum < classical) return NoiseVerdict::Classical;
  return NoiseVerdict::Tie;
}

}  // namespace cvt::channels
