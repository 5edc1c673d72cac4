#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvt/random.hpp"

namespace cvt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Quadrature convention used throughout: [x, p] = 2i, vacuum quadrature
// variance = 1 shot-noise unit, mode ordering (x1, p1, x2, p2, ...).
inline constexpr double kVacuumVariance = 1.0;

/// Symplectic form for n modes: block-diagonal 2x2 blocks [[0,1],[-1,0]].
Matrix omega(int n_modes);

/// Frobenius norm of S*Omega*S^T - Omega.
double symplectic_residual(const Matrix& s);

/// Mean vector and covariance matrix of an N-mode Gaussian state, in
/// shot-noise units. Immutable after construction; covariance is
/// symmetrized on construction. The checked constructor verifies
/// Heisenberg admissibility (cov + i*Omega >= 0, tolerance 1e-9).
class GaussianState {
public:
  GaussianState(Vector mean, Matrix cov);

  /// Skips the admissibility eigenvalue check (covariance is still
  /// symmetrized). For hot paths applying maps that preserve
  /// admissibility.
  static GaussianState unchecked(Vector mean, Matrix cov);

  int n_modes() const { return static_cast<int>(mean_.size()) / 2; }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

  bool is_admissible(double tol = 1e-9) const;

private:
  struct unchecked_t {};
  GaussianState(unchecked_t, Vector mean, Matrix cov);

  Vector mean_;
  Matrix cov_;
};

/// Coherent state for each (x-mean, p-mean) pair; covariance is the
/// identity.
GaussianState make_coherent(const std::vector<std::pair<double, double>>& amplitudes);

GaussianState vacuum_state(int n_modes);

/// Linear phase-space map r -> S*r + d of a lossless optical element.
/// The constructor rejects matrices with symplectic residual above
/// 1e-12.
class SymplecticTransform {
public:
  SymplecticTransform(Matrix s, Vector d);
  explicit SymplecticTransform(Matrix s);

  static SymplecticTransform identity(int n_modes);

  int n_modes() const { return static_cast<int>(d_.size()) / 2; }
  const Matrix& matrix() const { return s_; }
  const Vector& displacement() const { return d_; }

  /// Composition: a.after(b) maps x to a(b(x)).
  SymplecticTransform after(const SymplecticTransform& other) const;

private:
  Matrix s_;
  Vector d_;
};

/// Two-mode beam splitter with transmittance T in [0,1]:
///   out1 = sqrt(T)*in1 + sqrt(1-T)*in2
///   out2 = -sqrt(1-T)*in1 + sqrt(T)*in2
SymplecticTransform beam_splitter(double transmittance);

/// Two-mode squeezer, r >= 0:
///   x1 -> x1 cosh r + x2 sinh r,  p1 -> p1 cosh r - p2 sinh r
/// and symmetrically for mode 2.
SymplecticTransform two_mode_squeezer(double r);

/// Apply a transform covering the whole state.
GaussianState apply(const SymplecticTransform& t, const GaussianState& state);

/// Apply an m-mode transform to the listed modes of a larger state.
GaussianState apply(const SymplecticTransform& t, const GaussianState& state,
                    const std::vector<int>& modes);

/// Pure loss on one mode: mean *= sqrt(eta), block -> eta*block +
/// (1-eta)*I, cross-covariances scale by sqrt(eta).
GaussianState attenuate(const GaussianState& state, int mode, double eta);

/// Phase-insensitive amplifier with power gain Ga >= 1: mean *=
/// sqrt(Ga), block -> Ga*block + (Ga-1)*I.
GaussianState amplify(const GaussianState& state, int mode, double power_gain);

/// Additive classical noise: block -> block + chi*I, mean unchanged.
GaussianState add_classical_noise(const GaussianState& state, int mode, double chi);

/// Shift one mode's mean by (dx, dp).
GaussianState displace(const GaussianState& state, int mode, double dx, double dp);

/// Unscaled detector outcomes of a dual-homodyne measurement, in
/// shot-noise units.
struct MeasurementOutcome {
  double x_a = 0.0;
  double p_b = 0.0;
};

struct HeterodyneResult {
  MeasurementOutcome outcome;
  /// Conditional state of the unmeasured modes; empty when the measured
  /// mode was the only one.
  std::optional<GaussianState> conditional;
};

/// Sample one heterodyne (50/50 split with vacuum, x on the difference
/// arm, p on the sum arm) outcome of `mode`. For a measured mode with
/// quadrature variances (Vx, Vp) the outcomes have variances
/// ((Vx+1)/2, (Vp+1)/2) and means (mx/sqrt(2), mp/sqrt(2)). The
/// remaining modes are conditioned on the outcome through the Schur
/// complement of the measured block.
HeterodyneResult heterodyne_sample(const GaussianState& state, int mode,
                                   RandomStream& rng);

/// Overlap fidelity between the coherent state at (mean_x, mean_p) and a
/// single-mode Gaussian state.
double fidelity_vs_coherent(double mean_x, double mean_p, const GaussianState& output);

}  // namespace cvt
