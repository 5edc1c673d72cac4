#pragma once

#include <string>

#include "cvt/schemes.hpp"

namespace cvt::channels {

/// Lossy channel with transmission eta in (0, 1].
struct LossyChannelSpec {
  explicit LossyChannelSpec(double transmission);
  double eta;
};

/// Channel delivering the state intact with probability p, destroying it
/// otherwise.
struct ErasureChannelSpec {
  explicit ErasureChannelSpec(double success_probability);
  double p;
};

/// Fully transparent channel adding deterministic noise chi (vacuum
/// units).
struct AdditiveNoiseSpec {
  explicit AdditiveNoiseSpec(double added_noise);
  double chi;
};

enum class Strategy { Classical, Hybrid, Quantum };

std::string to_string(Strategy s);

struct OptimizationResult {
  double T_star;
  double F_star;
  double baseline;     // best pure-strategy fidelity
  double improvement;  // F_star - baseline
  Strategy strategy;
};

/// Loss compensated by a phase-insensitive amplifier at the receiver:
/// F = eta.
double lossy_amplifier_fidelity(const LossyChannelSpec& channel);

/// Noise budget of the tap-measure-transmit-displace protocol over a
/// lossy channel: tap T at the sender, loss eta on the quantum path,
/// unity-gain displacement from the classical record at the receiver.
schemes::NoiseBudget lossy_hybrid_noise(const LossyChannelSpec& channel, double transmittance);

/// Transfer fidelity of the hybrid protocol at tap T.
double lossy_hybrid_fidelity(const LossyChannelSpec& channel, double transmittance);

/// Minimize the hybrid added noise over the tap; the optimum sits at
/// T = eta with F = 1/(2-eta).
OptimizationResult lossy_hybrid_optimize(const LossyChannelSpec& channel);

/// Average fidelity p*F(T) + (1-p)*G(T) of partial estimation in front
/// of an erasure channel.
double erasure_fidelity(const ErasureChannelSpec& channel, double transmittance);

/// Maximize the erasure fidelity over the tap, comparing the interior
/// optimum against the pure-quantum boundary (T -> 1, fidelity p).
OptimizationResult erasure_optimize(const ErasureChannelSpec& channel);

enum class NoiseVerdict { Classical, Quantum, Tie };

std::string to_string(NoiseVerdict v);

/// Deterministic additive noise: quantum transmission achieves 2/(2+chi)
/// versus the classical bound 1/2; the strategies tie at chi = 2.
NoiseVerdict additive_noise_decision(const AdditiveNoiseSpec& channel);

}  // namespace cvt::channels
