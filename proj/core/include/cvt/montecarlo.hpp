#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cvt/schemes.hpp"

namespace cvt::mc {

/// Raw per-shot record of a feed-forward run. Each shot's randomness is
/// derived from (seed, shot index) alone, so the batch is bit-identical
/// no matter how generation was sharded.
struct ShotBatch {
  std::size_t n_shots = 0;
  double input_x = 0.0;
  double input_p = 0.0;
  double transmittance = 0.0;
  std::uint64_t seed = 0;

  std::vector<double> outcome_x;   // heterodyne x outcomes
  std::vector<double> outcome_p;   // heterodyne p outcomes
  std::vector<double> output_x;    // sampled output quadratures
  std::vector<double> output_p;
  std::vector<double> estimate_x;  // classical estimates kappa*outcome
  std::vector<double> estimate_p;
};

/// Moment estimates of a batch. Gains are per-quadrature output mean over
/// input amplitude; they are absent when the input component is zero.
/// Noise variances are pooled over both quadratures; F and G follow the
/// unity-gain fidelity maps.
struct EmpiricalSummary {
  std::size_t n_shots = 0;

  std::optional<double> gain_x;
  std::optional<double> gain_p;
  std::optional<double> se_gain_x;
  std::optional<double> se_gain_p;

  double var_n_hat = 0.0;
  double se_var_n = 0.0;
  double var_m_hat = 0.0;
  double se_var_m = 0.0;

  double F_hat = 0.0;
  double se_F = 0.0;
  double G_hat = 0.0;
  double se_G = 0.0;
};

/// Simulate the feed-forward scheme shot by shot: split the input on a
/// beam splitter of transmittance T with vacuum, heterodyne the tap,
/// displace the kept mode by lambda times the outcomes, then sample the
/// output mode's conditional Gaussian distribution. `workers` threads
/// fill disjoint shot ranges; results do not depend on the count.
ShotBatch run_feedforward(double transmittance, double input_x, double input_p,
                          std::size_t n_shots, std::uint64_t seed,
                          unsigned workers = 1);

/// Reduce a batch (>= 100 shots) to gains, noise variances, fidelities
/// and their standard errors. Deterministic: shots are reduced in index
/// order.
EmpiricalSummary summarize(const ShotBatch& batch);

}  // namespace cvt::mc
