#include "cvt/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "cvt/gaussian.hpp"
#include "cvt/random.hpp"

namespace cvt::mc {

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // about the sample mean, n-1 denominator
};

Moments sample_moments(const std::vector<double>& values) {
  const std::size_t n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, ss / static_cast<double>(n - 1)};
}

// Second moment about a known center (n denominator).
double moment_about(const std::vector<double>& values, double center) {
  double ss = 0.0;
  for (double v : values) {
    const double d = v - center;
    ss += d * d;
  }
  return ss / static_cast<double>(values.size());
}

}  // namespace

ShotBatch run_feedforward(double transmittance, double input_x, double input_p,
                          std::size_t n_shots, std::uint64_t seed,
                          unsigned workers) {
  if (n_shots < 1) {
    throw std::domain_error("need at least one shot");
  }
  const schemes::FeedForwardScheme scheme(transmittance);

  ShotBatch batch;
  batch.n_shots = n_shots;
  batch.input_x = input_x;
  batch.input_p = input_p;
  batch.transmittance = transmittance;
  batch.seed = seed;
  batch.outcome_x.resize(n_shots);
  batch.outcome_p.resize(n_shots);
  batch.output_x.resize(n_shots);
  batch.output_p.resize(n_shots);
  batch.estimate_x.resize(n_shots);
  batch.estimate_p.resize(n_shots);

  // Vacuum enters the tap port (mode 0), the signal port 1, so the
  // measured output carries +sqrt(1-T) times the signal.
  const GaussianState initial = make_coherent({{0.0, 0.0}, {input_x, input_p}});
  const GaussianState split = apply(beam_splitter(transmittance), initial);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t shot = begin; shot < end; ++shot) {
      RandomStream stream = RandomStream::substream(seed, shot);
      const HeterodyneResult het = heterodyne_sample(split, 0, stream);
      const GaussianState output =
          displace(*het.conditional, 0, scheme.lambda * het.outcome.x_a,
                   scheme.lambda * het.outcome.p_b);
      // Sample a phase-space point of the output mode.
      const auto& cov = output.cov();
      const double l11 = std::sqrt(cov(0, 0));
      const double l21 = cov(1, 0) / l11;
      const double l22 = std::sqrt(cov(1, 1) - l21 * l21);
      const double z1 = stream.normal();
      const double z2 = stream.normal();
      batch.outcome_x[shot] = het.outcome.x_a;
      batch.outcome_p[shot] = het.outcome.p_b;
      batch.output_x[shot] = output.mean()(0) + l11 * z1;
      batch.output_p[shot] = output.mean()(1) + l21 * z1 + l22 * z2;
      batch.estimate_x[shot] = scheme.kappa * het.outcome.x_a;
      batch.estimate_p[shot] = scheme.kappa * het.outcome.p_b;
    }
  };

  if (workers <= 1 || n_shots < 2 * workers) {
    run_range(0, n_shots);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n_shots + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n_shots, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return batch;
}

EmpiricalSummary summarize(const ShotBatch& batch) {
  if (batch.n_shots < 100) {
    throw std::domain_error("need at least 100 shots to summarize");
  }
  const double n = static_cast<double>(batch.n_shots);

  const Moments out_x = sample_moments(batch.output_x);
  const Moments out_p = sample_moments(batch.output_p);

  EmpiricalSummary s;
  s.n_shots = batch.n_shots;

  if (batch.input_x != 0.0) {
    s.gain_x = out_x.mean / batch.input_x;
    s.se_gain_x = std::sqrt(out_x.variance / n) / std::abs(batch.input_x);
  }
  if (batch.input_p != 0.0) {
    s.gain_p = out_p.mean / batch.input_p;
    s.se_gain_p = std::sqrt(out_p.variance / n) / std::abs(batch.input_p);
  }

  // Added state noise: output variance minus the input shot noise,
  // pooled over the two quadratures.
  s.var_n_hat = 0.5 * (out_x.variance + out_p.variance) - 1.0;
  const double se_vx = out_x.variance * std::sqrt(2.0 / (n - 1.0));
  const double se_vp = out_p.variance * std::sqrt(2.0 / (n - 1.0));
  s.se_var_n = 0.5 * std::sqrt(se_vx * se_vx + se_vp * se_vp);

  // Added measurement noise: scatter of the estimates about the input
  // amplitude minus the input shot noise.
  const double mm_x = moment_about(batch.estimate_x, batch.input_x);
  const double mm_p = moment_about(batch.estimate_p, batch.input_p);
  s.var_m_hat = 0.5 * (mm_x + mm_p) - 1.0;
  const double se_mx = mm_x * std::sqrt(2.0 / n);
  const double se_mp = mm_p * std::sqrt(2.0 / n);
  s.se_var_m = 0.5 * std::sqrt(se_mx * se_mx + se_mp * se_mp);

  s.F_hat = 2.0 / (2.0 + s.var_n_hat);
  s.se_F = 2.0 / ((2.0 + s.var_n_hat) * (2.0 + s.var_n_hat)) * s.se_var_n;
  s.G_hat = 2.0 / (3.0 + s.var_m_hat);
  s.se_G = 2.0 / ((3.0 + s.var_m_hat) * (3.0 + s.var_m_hat)) * s.se_var_m;
  return s;
}

}  // namespace cvt::mc
