#include "cvt/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cvt {

namespace {

void check_mode(const GaussianState& state, int mode) {
  if (mode < 0 || mode >= state.n_modes()) {
    throw std::out_of_range("mode index out of range");
  }
}

Matrix symmetrized(Matrix cov) {
  cov = 0.5 * (cov + cov.transpose()).eval();
  return cov;
}

}  // namespace

Matrix omega(int n_modes) {
  Matrix w = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return w;
}

double symplectic_residual(const Matrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw std::invalid_argument("symplectic matrix must be square with even size");
  }
  const Matrix w = omega(static_cast<int>(s.rows()) / 2);
  return (s * w * s.transpose() - w).norm();
}

GaussianState::GaussianState(Vector mean, Matrix cov)
    : GaussianState(unchecked_t{}, std::move(mean), std::move(cov)) {
  if (!is_admissible(1e-9)) {
    throw std::domain_error("covariance violates the uncertainty relation");
  }
}

GaussianState::GaussianState(unchecked_t, Vector mean, Matrix cov)
    : mean_(std::move(mean)), cov_(symmetrized(std::move(cov))) {
  const auto dim = mean_.size();
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument("mean must have positive even length");
  }
  if (cov_.rows() != dim || cov_.cols() != dim) {
    throw std::invalid_argument("covariance size does not match mean");
  }
}

GaussianState GaussianState::unchecked(Vector mean, Matrix cov) {
  return GaussianState(unchecked_t{}, std::move(mean), std::move(cov));
}

bool GaussianState::is_admissible(double tol) const {
  Eigen::MatrixXcd m = cov_.cast<std::complex<double>>();
  m += std::complex<double>(0.0, 1.0) * omega(n_modes()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

GaussianState make_coherent(const std::vector<std::pair<double, double>>& amplitudes) {
  if (amplitudes.empty()) {
    throw std::invalid_argument("need at least one mode");
  }
  const int n = static_cast<int>(amplitudes.size());
  Vector mean(2 * n);
  for (int k = 0; k < n; ++k) {
    mean(2 * k) = amplitudes[k].first;
    mean(2 * k + 1) = amplitudes[k].second;
  }
  return GaussianState::unchecked(std::move(mean), Matrix::Identity(2 * n, 2 * n));
}

GaussianState vacuum_state(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("need at least one mode");
  }
  return GaussianState::unchecked(Vector::Zero(2 * n_modes),
                                  Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticTransform::SymplecticTransform(Matrix s, Vector d)
    : s_(std::move(s)), d_(std::move(d)) {
  if (d_.size() == 0) {
    d_ = Vector::Zero(s_.rows());
  }
  if (s_.rows() != d_.size() || s_.cols() != d_.size() || d_.size() % 2 != 0) {
    throw std::invalid_argument("transform dimensions inconsistent");
  }
  if (symplectic_residual(s_) >= 1e-12) {
    throw std::domain_error("matrix is not symplectic");
  }
}

SymplecticTransform::SymplecticTransform(Matrix s)
    : SymplecticTransform(std::move(s), Vector()) {
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
  return SymplecticTransform(Matrix::Identity(2 * n_modes, 2 * n_modes),
                             Vector::Zero(2 * n_modes));
}

SymplecticTransform SymplecticTransform::after(const SymplecticTransform& other) const {
  return SymplecticTransform(s_ * other.s_, s_ * other.d_ + d_);
}

SymplecticTransform beam_splitter(double transmittance) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw std::domain_error("transmittance must lie in [0, 1]");
  }
  const double t = std::sqrt(transmittance);
  const double r = std::sqrt(1.0 - transmittance);
  Matrix s = Matrix::Zero(4, 4);
  s(0, 0) = t;
  s(0, 2) = r;
  s(1, 1) = t;
  s(1, 3) = r;
  s(2, 0) = -r;
  s(2, 2) = t;
  s(3, 1) = -r;
  s(3, 3) = t;
  return SymplecticTransform(std::move(s), Vector::Zero(4));
}

SymplecticTransform two_mode_squeezer(double r) {
  if (!(r >= 0.0)) {
    throw std::domain_error("squeezing parameter must be >= 0");
  }
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = c;
  m(0, 2) = s;
  m(1, 1) = c;
  m(1, 3) = -s;
  m(2, 0) = s;
  m(2, 2) = c;
  m(3, 1) = -s;
  m(3, 3) = c;
  return SymplecticTransform(std::move(m), Vector::Zero(4));
}

GaussianState apply(const SymplecticTransform& t, const GaussianState& state) {
  if (t.n_modes() != state.n_modes()) {
    throw std::invalid_argument("transform and state mode counts differ");
  }
  const Matrix& s = t.matrix();
  return GaussianState::unchecked(s * state.mean() + t.displacement(),
                                  s * state.cov() * s.transpose());
}

GaussianState apply(const SymplecticTransform& t, const GaussianState& state,
                    const std::vector<int>& modes) {
  if (static_cast<int>(modes.size()) != t.n_modes()) {
    throw std::invalid_argument("mode list does not match transform size");
  }
  const int n = state.n_modes();
  std::vector<bool> used(n, false);
  for (int m : modes) {
    if (m < 0 || m >= n || used[m]) {
      throw std::out_of_range("invalid or repeated mode index");
    }
    used[m] = true;
  }
  Matrix s = Matrix::Identity(2 * n, 2 * n);
  Vector d = Vector::Zero(2 * n);
  for (int a = 0; a < t.n_modes(); ++a) {
    d.segment<2>(2 * modes[a]) = t.displacement().segment<2>(2 * a);
    for (int b = 0; b < t.n_modes(); ++b) {
      s.block<2, 2>(2 * modes[a], 2 * modes[b]) = t.matrix().block<2, 2>(2 * a, 2 * b);
    }
  }
  return apply(SymplecticTransform(std::move(s), std::move(d)), state);
}

GaussianState attenuate(const GaussianState& state, int mode, double eta) {
  check_mode(state, mode);
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("transmissivity must lie in [0, 1]");
  }
  const int dim = 2 * state.n_modes();
  const double root = std::sqrt(eta);
  Vector scale = Vector::Ones(dim);
  scale.segment<2>(2 * mode).setConstant(root);
  Vector mean = scale.asDiagonal() * state.mean();
  Matrix cov = scale.asDiagonal() * state.cov() * scale.asDiagonal();
  cov.block<2, 2>(2 * mode, 2 * mode) += (1.0 - eta) * Matrix::Identity(2, 2);
  return GaussianState::unchecked(std::move(mean), std::move(cov));
}

GaussianState amplify(const GaussianState& state, int mode, double power_gain) {
  check_mode(state, mode);
  if (!(power_gain >= 1.0)) {
    throw std::domain_error("power gain must be >= 1");
  }
  const int dim = 2 * state.n_modes();
  const double root = std::sqrt(power_gain);
  Vector scale = Vector::Ones(dim);
  scale.segment<2>(2 * mode).setConstant(root);
  Vector mean = scale.asDiagonal() * state.mean();
  Matrix cov = scale.asDiagonal() * state.cov() * scale.asDiagonal();
  cov.block<2, 2>(2 * mode, 2 * mode) += (power_gain - 1.0) * Matrix::Identity(2, 2);
  return GaussianState::unchecked(std::move(mean), std::move(cov));
}

GaussianState add_classical_noise(const GaussianState& state, int mode, double chi) {
  check_mode(state, mode);
  if (!(chi >= 0.0)) {
    throw std::domain_error("added noise must be >= 0");
  }
  Matrix cov = state.cov();
  cov.block<2, 2>(2 * mode, 2 * mode) += chi * Matrix::Identity(2, 2);
  return GaussianState::unchecked(state.mean(), std::move(cov));
}

GaussianState displace(const GaussianState& state, int mode, double dx, double dp) {
  check_mode(state, mode);
  Vector mean = state.mean();
  mean(2 * mode) += dx;
  mean(2 * mode + 1) += dp;
  return GaussianState::unchecked(std::move(mean), state.cov());
}

HeterodyneResult heterodyne_sample(const GaussianState& state, int mode,
                                   RandomStream& rng) {
  check_mode(state, mode);
  const int n = state.n_modes();
  const Eigen::Matrix2d vb = state.cov().block<2, 2>(2 * mode, 2 * mode);
  const Eigen::Vector2d mu_b = state.mean().segment<2>(2 * mode);

  // Outcome distribution: mean mu_b/sqrt(2), covariance (Vb + I)/2.
  const Eigen::Matrix2d m = 0.5 * (vb + Eigen::Matrix2d::Identity());
  const double l11 = std::sqrt(m(0, 0));
  const double l21 = m(1, 0) / l11;
  const double l22 = std::sqrt(m(1, 1) - l21 * l21);
  const double z1 = rng.normal();
  const double z2 = rng.normal();
  const double inv_sqrt2 = 0.70710678118654752440;
  MeasurementOutcome outcome;
  outcome.x_a = mu_b(0) * inv_sqrt2 + l11 * z1;
  outcome.p_b = mu_b(1) * inv_sqrt2 + l21 * z1 + l22 * z2;

  if (n == 1) {
    return {outcome, std::nullopt};
  }

  // Remaining modes, conditioned on the outcome. In mode units the
  // rescaled outcome sqrt(2)*m estimates mu_b, and the update uses
  // (Vb + I)^{-1}.
  const int rest = 2 * (n - 1);
  Vector mean_a(rest);
  Matrix cov_a(rest, rest);
  Matrix cross(rest, 2);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (j == mode) continue;
    mean_a.segment<2>(row) = state.mean().segment<2>(2 * j);
    cross.block<2, 2>(row, 0) = state.cov().block<2, 2>(2 * j, 2 * mode);
    int col = 0;
    for (int k = 0; k < n; ++k) {
      if (k == mode) continue;
      cov_a.block<2, 2>(row, col) = state.cov().block<2, 2>(2 * j, 2 * k);
      col += 2;
    }
    row += 2;
  }
  const Eigen::Matrix2d gate = (vb + Eigen::Matrix2d::Identity()).inverse();
  Eigen::Vector2d innovation;
  innovation << std::sqrt(2.0) * outcome.x_a - mu_b(0),
      std::sqrt(2.0) * outcome.p_b - mu_b(1);
  mean_a += cross * gate * innovation;
  cov_a -= cross * gate * cross.transpose();
  return {outcome, GaussianState::unchecked(std::move(mean_a), std::move(cov_a))};
}

double fidelity_vs_coherent(double mean_x, double mean_p, const GaussianState& output) {
  if (output.n_modes() != 1) {
    throw std::domain_error("output state must be single-mode");
  }
  const Eigen::Matrix2d sigma =
      Eigen::Matrix2d::Identity() + output.cov().block<2, 2>(0, 0);
  Eigen::Vector2d delta;
  delta << output.mean()(0) - mean_x, output.mean()(1) - mean_p;
  const double det = sigma.determinant();
  const double quad = delta.dot(sigma.inverse() * delta);
  return 2.0 / std::sqrt(det) * std::exp(-0.5 * quad);
}

}  // namespace cvt
