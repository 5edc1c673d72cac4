#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cvt/channels.hpp"
#include "cvt/gaussian.hpp"
#include "cvt/schemes.hpp"

using namespace cvt;
using namespace cvt::channels;

namespace {

// Embed a 2-mode transform into an n-mode identity on modes (m0, m1).
Matrix embed(const Matrix& s4, int n_modes, int m0, int m1) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const int idx[2] = {m0, m1};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      s.block<2, 2>(2 * idx[a], 2 * idx[b]) = s4.block<2, 2>(2 * a, 2 * b);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("channel spec validation") {
  CHECK_THROWS_AS(LossyChannelSpec(0.0), std::domain_error);
  CHECK_THROWS_AS(LossyChannelSpec(1.2), std::domain_error);
  CHECK_THROWS_AS(ErasureChannelSpec(-0.1), std::domain_error);
  CHECK_THROWS_AS(ErasureChannelSpec(1.1), std::domain_error);
  CHECK_THROWS_AS(AdditiveNoiseSpec(-1.0), std::domain_error);
}

TEST_CASE("amplifier-compensated lossy channel") {
  CHECK(lossy_amplifier_fidelity(LossyChannelSpec(1.0)) == 1.0);
  CHECK(lossy_amplifier_fidelity(LossyChannelSpec(0.31)) == doctest::Approx(0.31));

  // Cross-check through the Gaussian pipeline at eta = 0.5.
  const double eta = 0.5;
  const GaussianState out =
      amplify(attenuate(make_coherent({{1.2, -0.3}}), 0, eta), 0, 1.0 / eta);
  CHECK(fidelity_vs_coherent(1.2, -0.3, out) ==
        doctest::Approx(lossy_amplifier_fidelity(LossyChannelSpec(eta))).epsilon(1e-12));
}

TEST_CASE("hybrid protocol noise over a lossy channel") {
  SUBCASE("optimal tap T = eta") {
    const auto b = lossy_hybrid_noise(LossyChannelSpec(0.31), 0.31);
    CHECK(b.var_n == doctest::Approx(2.0 * (1.0 - 0.31)).epsilon(1e-12));
    CHECK(lossy_hybrid_fidelity(LossyChannelSpec(0.31), 0.31) ==
          doctest::Approx(1.0 / (2.0 - 0.31)).epsilon(1e-12));
    for (double eta = 0.05; eta < 1.0; eta += 0.05) {
      CHECK(std::abs(lossy_hybrid_noise(LossyChannelSpec(eta), eta).var_n -
                     2.0 * (1.0 - eta)) < 1e-12);
    }
  }
  SUBCASE("full estimation tap T = 0") {
    for (double eta : {0.1, 0.31, 0.9, 1.0}) {
      const auto b = lossy_hybrid_noise(LossyChannelSpec(eta), 0.0);
      CHECK(b.var_n == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(lossy_hybrid_fidelity(LossyChannelSpec(eta), 0.0) ==
            doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("lossless channel reduces to plain feed-forward") {
    for (double t = 0.02; t < 1.0; t += 0.02) {
      CHECK(std::abs(lossy_hybrid_noise(LossyChannelSpec(1.0), t).var_n -
                     schemes::feedforward_noises(t).var_n) < 1e-12);
    }
  }
  SUBCASE("matches the end-to-end Gaussian pipeline") {
    // Modes: 0 tap vacuum, 1 signal, 2 channel-loss vacuum, 3 detection
    // vacuum. All inputs have identity covariance, so added-noise
    // variances are squared coefficient norms of the output operators.
    const double eta = 0.47, t = 0.23;
    const Matrix tap = embed(beam_splitter(t).matrix(), 4, 0, 1);
    const Matrix loss = embed(beam_splitter(eta).matrix(), 4, 1, 2);
    const Matrix det = embed(beam_splitter(0.5).matrix(), 4, 0, 3);
    const Matrix total = det * loss * tap;

    const double lambda_b =
        std::sqrt(2.0) * (1.0 - std::sqrt(eta * t)) / std::sqrt(1.0 - t);
    // x_out = x(mode 1) + lambda_b * x_a with x_a = x(mode 0 after the
    // detection splitter); p_out uses p_b = -p(mode 3 after it).
    Eigen::RowVectorXd cx = total.row(2) + lambda_b * total.row(0);
    Eigen::RowVectorXd cp = total.row(3) - lambda_b * total.row(7);

    CHECK(cx(2) == doctest::Approx(1.0).epsilon(1e-12));  // unity gain in x
    CHECK(cp(3) == doctest::Approx(1.0).epsilon(1e-12));  // unity gain in p
    cx(2) -= 1.0;
    cp(3) -= 1.0;
    const double var_nx = cx.squaredNorm();
    const double var_np = cp.squaredNorm();
    const auto b = lossy_hybrid_noise(LossyChannelSpec(eta), t);
    CHECK(var_nx == doctest::Approx(b.var_n).epsilon(1e-12));
    CHECK(var_np == doctest::Approx(b.var_n).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lossy_hybrid_noise(LossyChannelSpec(0.5), 1.0), std::domain_error);
  CHECK_THROWS_AS(lossy_hybrid_noise(LossyChannelSpec(0.5), -0.1), std::domain_error);
}

TEST_CASE("hybrid optimization over the tap") {
  SUBCASE("eta = 0.31") {
    const OptimizationResult r = lossy_hybrid_optimize(LossyChannelSpec(0.31));
    CHECK(std::abs(r.T_star - 0.31) < 1e-6);
    CHECK(r.F_star == doctest::Approx(1.0 / 1.69).epsilon(1e-9));
    CHECK(r.baseline == doctest::Approx(0.31));
    CHECK(r.improvement == doctest::Approx(1.0 / 1.69 - 0.31).epsilon(1e-6));
    CHECK(r.strategy == Strategy::Hybrid);
  }
  SUBCASE("eta = 0.5") {
    const OptimizationResult r = lossy_hybrid_optimize(LossyChannelSpec(0.5));
    CHECK(r.F_star == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(r.F_star > r.baseline);
  }
  SUBCASE("lossless boundary") {
    const OptimizationResult r = lossy_hybrid_optimize(LossyChannelSpec(1.0));
    CHECK(r.T_star == 1.0);
    CHECK(r.F_star == 1.0);
    CHECK(r.improvement == 0.0);
  }
  SUBCASE("optimum sits at T = eta across the range") {
    for (double eta = 0.1; eta < 0.95; eta += 0.1) {
      const OptimizationResult r = lossy_hybrid_optimize(LossyChannelSpec(eta));
      CHECK(std::abs(r.T_star - eta) < 1e-6);
    }
  }
  SUBCASE("hybrid beats the amplifier for every eta below 1") {
    for (int i = 1; i < 100; ++i) {
      const double eta = i / 100.0;
      CHECK(1.0 / (2.0 - eta) > eta);
    }
  }
}

TEST_CASE("erasure channel fidelity") {
  SUBCASE("perfect channel, vanishing tap reflection") {
    CHECK(erasure_fidelity(ErasureChannelSpec(1.0), 1.0 - 1e-9) ==
          doctest::Approx(1.0).epsilon(1e-4));
  }
  SUBCASE("p = 0.5 at the reported tap") {
    const double f = (1.0 - 0.405) / (2.0 - 2.0 * std::sqrt(0.405));
    const double g = (1.0 - 0.405) / (2.0 - 0.405);
    CHECK(f == doctest::Approx(0.8182).epsilon(1e-4));
    CHECK(g == doctest::Approx(0.3730).epsilon(1e-3));
    CHECK(erasure_fidelity(ErasureChannelSpec(0.5), 0.405) ==
          doctest::Approx(0.5 * f + 0.5 * g).epsilon(1e-14));
    CHECK(erasure_fidelity(ErasureChannelSpec(0.5), 0.405) ==
          doctest::Approx(0.5956).epsilon(1e-3));
  }
  SUBCASE("p = 0 reduces to the estimation fidelity") {
    for (double t = 0.0; t < 1.0; t += 0.07) {
      CHECK(erasure_fidelity(ErasureChannelSpec(0.0), t) ==
            doctest::Approx((1.0 - t) / (2.0 - t)).epsilon(1e-13));
    }
    CHECK(erasure_fidelity(ErasureChannelSpec(0.0), 0.0) == doctest::Approx(0.5));
  }
  SUBCASE("agrees with the scheme fidelities") {
    for (double p : {0.2, 0.5, 0.8}) {
      for (double t = 0.05; t < 1.0; t += 0.05) {
        const auto point = schemes::feedforward_point(t);
        CHECK(erasure_fidelity(ErasureChannelSpec(p), t) ==
              doctest::Approx(p * point.F + (1.0 - p) * point.G).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(erasure_fidelity(ErasureChannelSpec(0.5), 1.0), std::domain_error);
}

TEST_CASE("erasure optimization") {
  SUBCASE("p = 0.5") {
    const OptimizationResult r = erasure_optimize(ErasureChannelSpec(0.5));
    CHECK(std::abs(r.T_star - 0.405) < 0.01);
    CHECK(r.improvement == doctest::Approx(0.0956).epsilon(0.02));
    CHECK(r.strategy == Strategy::Hybrid);

    // Grid-scan oracle.
    double best_t = 0.0, best_f = 0.0;
    const int grid = 100000;
    for (int i = 0; i < grid; ++i) {
      const double t = i / static_cast<double>(grid);
      const double f = erasure_fidelity(ErasureChannelSpec(0.5), t);
      if (f > best_f) {
        best_f = f;
        best_t = t;
      }
    }
    CHECK(std::abs(r.T_star - best_t) < 2.0 / grid);
    CHECK(r.F_star >= best_f - 1e-12);
  }
  SUBCASE("p above the threshold goes fully quantum") {
    const OptimizationResult r = erasure_optimize(ErasureChannelSpec(0.81));
    CHECK(r.strategy == Strategy::Quantum);
    CHECK(r.T_star == 1.0);
    CHECK(r.F_star == doctest::Approx(0.81));
    CHECK(r.improvement == doctest::Approx(0.0));

    const OptimizationResult r9 = erasure_optimize(ErasureChannelSpec(0.9));
    CHECK(r9.strategy == Strategy::Quantum);
    CHECK(r9.F_star == doctest::Approx(0.9));
  }
  SUBCASE("p = 0 estimates everything") {
    const OptimizationResult r = erasure_optimize(ErasureChannelSpec(0.0));
    CHECK(r.T_star == 0.0);
    CHECK(r.F_star == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.strategy == Strategy::Classical);
  }
  SUBCASE("strict improvement below the 4/5 threshold") {
    for (double p = 0.05; p <= 0.751; p += 0.05) {
      const OptimizationResult r = erasure_optimize(ErasureChannelSpec(p));
      CHECK(r.F_star > std::max(p, 0.5) + 1e-6);
    }
  }
  SUBCASE("no improvement at or above the threshold") {
    for (double p = 0.80; p <= 1.0001; p += 0.05) {
      const OptimizationResult r = erasure_optimize(ErasureChannelSpec(std::min(p, 1.0)));
      CHECK(r.F_star <= std::max(p, 0.5) + 1e-6);
    }
  }
}

TEST_CASE("additive noise decision") {
  CHECK(additive_noise_decision(AdditiveNoiseSpec(0.0)) == NoiseVerdict::Quantum);
  CHECK(additive_noise_decision(AdditiveNoiseSpec(2.0)) == NoiseVerdict::Tie);
  CHECK(additive_noise_decision(AdditiveNoiseSpec(3.0)) == NoiseVerdict::Classical);
  CHECK_THROWS_AS(AdditiveNoiseSpec(-0.5), std::domain_error);

  // Both alternatives sit at 1/2 on the boundary; cross-check the
  // quantum side through the state machinery.
  const GaussianState out = add_classical_noise(make_coherent({{0.4, 0.9}}), 0, 2.0);
  CHECK(fidelity_vs_coherent(0.4, 0.9, out) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(2.0 / (2.0 + 3.0) < 0.5);
}
