#pragma once

#include <functional>

namespace cvt {

struct ScalarMaximum {
  double x = 0.0;
  double value = 0.0;
};

/// Maximize f on [lo, hi]: uniform pre-scan with `grid_points` samples to
/// bracket the best point, then golden-section refinement until the
/// bracket is narrower than x_tol.
ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, int grid_points = 1000,
                              double x_tol = 1e-9);

}  // namespace cvt
