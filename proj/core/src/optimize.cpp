#include "cvt/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace cvt {

ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, int grid_points, double x_tol) {
  if (!(hi > lo) || grid_points < 2) {
    throw std::invalid_argument("bad search interval");
  }
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_value = f(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double v = f(lo + i * step);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + (best > 0 ? (best - 1) * step : 0.0);
  double b = lo + (best < grid_points - 1 ? (best + 1) * step : (grid_points - 1) * step);

  const double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace cvt
