#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

namespace cattaneo {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rss = 0.0;  // residual sum of squares
  double r2 = 0.0;
  int n = 0;
};

/// Ordinary least squares y = slope*x + intercept.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need at least 2 matched samples");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.n = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (int i = 0; i < n; ++i) {
    double r = y[i] - (f.slope * x[i] + f.intercept);
    f.rss += r * r;
  }
  f.r2 = (syy > 0.0) ? 1.0 - f.rss / syy : 1.0;
  return f;
}

}  // namespace cattaneo
