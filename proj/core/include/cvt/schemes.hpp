#pragma once

namespace cvt::schemes {

/// Added-noise budget of a partial-estimation machine at gain g: var_n is
/// the noise added to the surviving quantum state, var_m the noise added
/// to the measurement record, both in shot-noise units. Construction
/// enforces var_m >= 1, var_n >= |1-g^2|/g^2 and var_n*var_m >= 1
/// (tolerance 1e-12).
struct NoiseBudget {
  NoiseBudget(double gain, double added_state_noise, double added_measurement_noise);

  double g;
  double var_n;
  double var_m;
};

/// One operating point of a scheme: its parameter (T or r), the noise
/// budget, estimation fidelity G and transfer fidelity F.
struct TradeoffPoint {
  double parameter;
  NoiseBudget budget;
  double G;
  double F;
};

struct Fidelities {
  double G;
  double F;
};

/// Tap-and-feed-forward scheme parameters: feed-forward gain lambda and
/// estimation scale kappa are fixed by the unity-gain and unbiasedness
/// conditions under this library's beam-splitter and heterodyne
/// conventions.
struct FeedForwardScheme {
  explicit FeedForwardScheme(double transmittance, double detector_efficiency = 1.0,
                             double visibility = 1.0);

  double T;
  double lambda;  // sqrt(2)*(1-sqrt(T))/sqrt(1-T)
  double kappa;   // sqrt(2)/sqrt(1-T)
  double detector_efficiency;
  double visibility;
};

/// Teleportation realization: the tradeoff is tuned by the two-mode
/// squeezing of the ancilla.
struct TeleportationScheme {
  explicit TeleportationScheme(double squeezing);
  double r;
};

/// Added noises of the ideal feed-forward scheme at tap transmittance T:
/// var_n = 2(1-sqrt(T))^2/(1-T), var_m = (1+T)/(1-T), unity gain.
NoiseBudget feedforward_noises(double transmittance);

/// G = 2/(3+var_m), F = 2/(2+var_n); defined only at unity gain.
Fidelities fidelities_from_budget(const NoiseBudget& budget);

/// Maximum transfer fidelity attainable at estimation fidelity G,
/// 0 < G <= 1/2.
double tradeoff_bound(double estimation_fidelity);

/// Minimum state noise var_n compatible with measurement noise var_m at
/// unity gain: 2(var_m - sqrt(var_m^2 - 1)).
double unity_gain_noise_bound(double var_m);

/// Full operating point of the ideal feed-forward scheme.
TradeoffPoint feedforward_point(double transmittance);

/// Operating point of the teleportation realization: var_m = cosh(2r),
/// var_n = 2*exp(-2r).
TradeoffPoint teleportation_point(double squeezing);

/// Feed-forward point with the in-loop dual homodyne degraded by a loss
/// channel of transmissivity eta_d * v^2 in front of ideal detection;
/// the feed-forward gain is re-tuned to keep unity gain.
TradeoffPoint degraded_feedforward_point(double transmittance,
                                         double detector_efficiency,
                                         double visibility);

}  // namespace cvt::schemes
