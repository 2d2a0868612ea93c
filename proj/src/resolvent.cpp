#include "cattaneo/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "cattaneo/spectrum.hpp"
#include "cattaneo/wnorm.hpp"

namespace cattaneo {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

}  // namespace

double modal_resolvent_norm(const ParameterPoint& point, double mu,
                            double lambda) {
  const ModalBlock blk = modal_block(point, mu);
  Mat4c shifted = -blk.matrix.cast<std::complex<double>>();
  for (int i = 0; i < 4; ++i) shifted(i, i) += std::complex<double>(0.0, lambda);
  return weighted_operator_norm(inverse4(shifted), blk.weights);
}

ResolventSample resolvent_sup(const ParameterPoint& point, double lambda,
                              const std::vector<double>& modes,
                              Envelope envelope) {
  if (modes.empty()) throw std::invalid_argument("resolvent_sup: no modes");
  ResolventSample best{lambda, -1.0, 0.0};
  size_t best_i = 0;
  for (size_t i = 0; i < modes.size(); ++i) {
    double n = modal_resolvent_norm(point, modes[i], lambda);
    if (n > best.norm) {
      best.norm = n;
      best.argmax_mu = modes[i];
      best_i = i;
    }
  }
  if (envelope == Envelope::Continuous && modes.size() > 1) {
    const double lo = modes[best_i == 0 ? 0 : best_i - 1];
    const double hi = modes[std::min(best_i + 1, modes.size() - 1)];
    if (hi > lo) {
      auto f = [&](double logmu) {
        return modal_resolvent_norm(point, std::exp(logmu), lambda);
      };
      double logmu = golden_max(f, std::log(lo), std::log(hi), 80);
      double n = f(logmu);
      if (n > best.norm) {
        best.norm = n;
        best.argmax_mu = std::exp(logmu);
      }
    }
  }
  return best;
}

ResolventGrowth growth_exponent(const ParameterPoint& point, double lambda_lo,
                                double lambda_hi, int count,
                                const std::vector<double>& modes,
                                Envelope envelope) {
  if (!(lambda_lo > 0.0) || !(lambda_hi > lambda_lo) || count < 3)
    throw std::invalid_argument("growth_exponent: bad lambda grid");
  if (modes.empty()) throw std::invalid_argument("growth_exponent: no modes");

  const double mu_min = modes.front(), mu_max = modes.back();
  auto crit_im = [&](double mu) { return critical_root(point, mu).imag(); };
  const double im_min = crit_im(mu_min), im_max = crit_im(mu_max);

  ResolventGrowth out;
  std::vector<double> xs, ys;
  for (int i = 0; i < count; ++i) {
    const double target =
        lambda_lo * std::pow(lambda_hi / lambda_lo,
                             static_cast<double>(i) / (count - 1));
    double lambda = target;
    if (im_max > im_min * (1.0 + 1e-12)) {
      // pull the frequency onto the critical branch: solve |Im| = target
      if (target < im_min || target > im_max) continue;
      double lo = std::log(mu_min), hi = std::log(mu_max);
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        (crit_im(std::exp(mid)) < target ? lo : hi) = mid;
      }
      lambda = crit_im(std::exp(0.5 * (lo + hi)));
    }
    ResolventSample s = resolvent_sup(point, lambda, modes, envelope);
    if (!(s.norm > 0.0)) continue;
    xs.push_back(std::log(lambda));
    ys.push_back(std::log(s.norm));
    out.samples.push_back(s);
  }
  if (xs.size() < 3)
    throw std::invalid_argument(
        "growth_exponent: fewer than 3 usable frequencies");
  out.fit = fit_line(xs, ys);
  return out;
}

}  // namespace cattaneo
