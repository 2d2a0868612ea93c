#include "cattaneo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cattaneo/fit.hpp"
#include "cattaneo/oracle.hpp"
#include "cattaneo/region_atlas.hpp"

namespace cattaneo {

namespace {

void require_positive_mu(double mu) {
  if (!(mu > 0.0)) throw std::domain_error("mu must be > 0");
}

}  // namespace

ModalBlock modal_block(const ParameterPoint& point, double mu) {
  point.validate();
  require_positive_mu(mu);
  const double d = point.m > 0.0 ? 1.0 + point.m * std::pow(mu, point.gamma) : 1.0;
  const double ma = std::pow(mu, point.alpha);
  const double mb2 = std::pow(mu, point.beta / 2.0);
  ModalBlock blk;
  blk.mu = mu;
  blk.matrix << 0.0, 1.0, 0.0, 0.0,
      -point.sigma * mu / d, 0.0, ma / d, 0.0,
      0.0, -ma, 0.0, mb2,
      0.0, 0.0, -mb2 / point.tau, -1.0 / point.tau;
  blk.weights << point.sigma * mu, d, 1.0, point.tau;
  return blk;
}

QuarticCoeffs characteristic_coeffs(const ParameterPoint& point, double mu) {
  point.validate();
  require_positive_mu(mu);
  const double mg = point.m > 0.0 ? point.m * std::pow(mu, point.gamma) : 0.0;
  const double m2a = std::pow(mu, 2.0 * point.alpha);
  const double mb = std::pow(mu, point.beta);
  QuarticCoeffs q;
  q.c4 = point.tau * (mg + 1.0);
  q.c3 = mg + 1.0;
  q.c2 = point.tau * m2a + mg * mb + point.sigma * point.tau * mu + mb;
  q.c1 = m2a + point.sigma * mu;
  q.c0 = point.sigma * mu * mb;
  return q;
}

RootSet modal_eigenvalues(const ParameterPoint& point, double mu) {
  RootSet roots = solve_quartic(characteristic_coeffs(point, mu));
  RootSet dense;
  auto ev = matrix_eigenvalues(modal_block(point, mu).matrix);
  std::copy(ev.begin(), ev.end(), dense.begin());
  double dist = rootset_distance(roots, dense);
  if (dist > 1e-6)
    throw std::runtime_error(
        "modal eigenvalue cross-check failed (deviation " +
        std::to_string(dist) + "); coefficient derivation is inconsistent");
  return roots;
}

std::complex<double> Branch::upper(double mu) const {
  return {-re_coef * std::pow(mu, re_exp),
          is_pair() ? im_coef * std::pow(mu, im_exp) : 0.0};
}

const std::array<double, 3>& corner_cubic_roots() {
  static const std::array<double, 3> roots = [] {
    auto r = cubic_real_roots(1.0, 29.0, 115.0, -81.0);
    if (r.size() != 3) throw std::logic_error("corner cubic: expected 3 real roots");
    return std::array<double, 3>{r[0], r[1], r[2]};
  }();
  return roots;
}

std::vector<Branch> predicted_branches(RegionLabel region,
                                       const ParameterPoint& point) {
  if (point.sigma != 2.0 || point.tau != 1.0)
    throw std::domain_error("branch tables require sigma = 2, tau = 1");
  const bool star = starred(region);
  if (!star && point.m != 1.0)
    throw std::domain_error("inertial branch table requires m = 1");
  if (star && point.m != 0.0)
    throw std::domain_error("non-inertial branch table requires m = 0");

  const double a = point.alpha, b = point.beta, g = point.gamma;
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0), s7 = std::sqrt(7.0), s15 = std::sqrt(15.0);

  switch (region) {
    case RegionLabel::T1:
      return {{0.5, -2 * a + b + g, 1.0, a - g / 2},
              {0.5, 0.0, s2, -a + b / 2 + 0.5}};
    case RegionLabel::T2:
      return {{0.125, 2 * a + b + g - 2, s2, (1 - g) / 2},
              {0.5, 0.0, 1.0, b / 2}};
    case RegionLabel::T3:
      return {{0.5, 0.0, 1.0, b / 2},
              {0.5, 2 * a - b - g, s2, (1 - g) / 2}};
    case RegionLabel::T4:
      return {{0.5, -2 * a + b + g, 1.0, a - g / 2},
              {2.0, -2 * a + b + 1, 0.0, 0.0},
              {1.0, 0.0, 0.0, 0.0}};
    case RegionLabel::F12:
      return {{1.0 / 18.0, b + g - 1, s3, (1 - g) / 2},
              {0.5, 0.0, s6 / 3.0, b / 2}};
    case RegionLabel::F13:
      return {{0.25, 0.0, s2, b / 2}, {0.25, 0.0, 1.0, (1 - g) / 2}};
    case RegionLabel::F14:
      return {{0.5, g - 1, 1.0, (b - g + 1) / 2}, {0.5, 0.0, s7 / 2.0, 0.0}};
    case RegionLabel::F2:
      return {{0.125, 2 * a + g - 2, s2, (1 - g) / 2},
              {0.5, 0.0, s3 / 2.0, 0.0}};
    case RegionLabel::F23:
      return {{0.5, 2 * a - 1, s2, (1 - g) / 2},
              {0.5, 0.0, 1.0, (1 - g) / 2}};
    case RegionLabel::L123:
      return {{0.25 - s2 / 8.0, 0.0, std::sqrt(2.0 + s2), (1 - g) / 2},
              {0.25 + s2 / 8.0, 0.0, std::sqrt(2.0 - s2), (1 - g) / 2}};
    case RegionLabel::L124:
      return {{1.0 / 18.0, g - 1, s3, (1 - g) / 2},
              {0.5, 0.0, s15 / 6.0, 0.0}};
    case RegionLabel::L2:
      return {{1.0 / 6.0, 2 * a - 1, s2, 0.0}, {0.5, 0.0, s3 / 2.0, 0.0}};
    case RegionLabel::L34:
      return {{0.25, 0.0, s2, b / 2}, {0.25, 0.0, s15 / 4.0, 0.0}};
    case RegionLabel::P234: {
      const auto& j = corner_cubic_roots();
      const double r1 = std::sqrt(-j[0]), r2 = std::sqrt(-j[1]),
                   r3 = std::sqrt(j[2]);
      return {{(1.0 - r3) / 4.0, 0.0, (r1 + r2) / 4.0, 0.0},
              {(1.0 + r3) / 4.0, 0.0, (r1 - r2) / 4.0, 0.0}};
    }
    case RegionLabel::T1s:
      return {{0.5, b - 2 * a, 1.0, a}, {0.5, 0.0, s2, -a + b / 2 + 0.5}};
    case RegionLabel::T2s:
      return {{0.125, 2 * a + b - 2, s2, 0.5}, {0.5, 0.0, 1.0, b / 2}};
    case RegionLabel::T4s:
      return {{0.5, b - 2 * a, 1.0, a},
              {2.0, -2 * a + b + 1, 0.0, 0.0},
              {1.0, 0.0, 0.0, 0.0}};
    case RegionLabel::F12s:
      return {{1.0 / 18.0, b - 1, s3, 0.5}, {0.5, 0.0, s6 / 3.0, b / 2}};
    case RegionLabel::F14s:
      return {{0.5, -1.0, 1.0, (b + 1) / 2}, {0.5, 0.0, s7 / 2.0, 0.0}};
    case RegionLabel::F2s:
      return {{0.125, 2 * a - 2, 1.0, 0.5}, {0.5, 0.0, s3 / 2.0, 0.0}};
    case RegionLabel::L124s:
      return {{1.0 / 18.0, -1.0, s3, 0.5}, {0.5, 0.0, s15 / 6.0, 0.0}};
    case RegionLabel::L23s:
      return {{0.5, 2 * a - 1, s2, 0.5}, {0.5, 0.0, 1.0, 0.5}};
    case RegionLabel::P123s:
      return {{0.25 - s2 / 8.0, 0.0, std::sqrt(2.0 + s2), 0.5},
              {0.25 + s2 / 8.0, 0.0, std::sqrt(2.0 - s2), 0.5}};
    case RegionLabel::Unclassified:
      break;
  }
  throw std::domain_error("no branch table row for region " +
                          std::string(label_name(region)));
}

std::vector<std::complex<double>> predicted_roots(RegionLabel region,
                                                  const ParameterPoint& point,
                                                  double mu) {
  require_positive_mu(mu);
  std::vector<std::complex<double>> out;
  for (const Branch& br : predicted_branches(region, point))
    out.push_back(br.upper(mu));
  return out;
}

namespace {

struct UpperRoot {
  std::complex<double> z;
  bool pair = false;
};

std::vector<UpperRoot> upper_half(const RootSet& roots) {
  std::vector<UpperRoot> ups;
  int lower = 0;
  for (const auto& z : roots) {
    if (z.imag() > 0.0)
      ups.push_back({z, true});
    else if (z.imag() == 0.0)
      ups.push_back({z, false});
    else
      ++lower;
  }
  int pairs = 0;
  for (const auto& u : ups) pairs += u.pair ? 1 : 0;
  if (pairs != lower)
    throw std::runtime_error("root set is not conjugate-closed");
  return ups;
}

// log-magnitude plane used for branch assignment; branches separate by
// orders of magnitude there even when raw distances are ill-conditioned
std::array<double, 2> log_coords(std::complex<double> z) {
  return {std::log10(std::abs(z.real()) + 1e-300),
          std::log10(std::abs(z.imag()) + 1e-300)};
}

double match_cost(std::complex<double> computed, std::complex<double> predicted) {
  auto a = log_coords(computed), b = log_coords(predicted);
  double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

// Min-cost assignment inside one structural class (pairs or reals); the
// class sizes here are at most 3, so enumeration is exact.
std::vector<int> assign(const std::vector<std::complex<double>>& computed,
                        const std::vector<std::complex<double>>& predicted) {
  const int n = static_cast<int>(computed.size());
  std::vector<int> perm(n), best_perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  double second = best;
  do {
    double cost = 0.0;
    for (int i = 0; i < n; ++i) cost += match_cost(computed[i], predicted[perm[i]]);
    if (cost < best) {
      second = best;
      best = cost;
      best_perm = perm;
    } else if (cost < second) {
      second = cost;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n > 1 && second - best <= 1e-12 * (1.0 + best))
    throw std::runtime_error("ambiguous branch assignment");
  return best_perm;
}

}  // namespace

std::vector<AsymptoticSample> asymptotic_error(const ParameterPoint& point,
                                               const std::vector<double>& mus,
                                               const std::vector<Branch>& row) {
  std::vector<AsymptoticSample> samples;
  for (double mu : mus) {
    if (!(mu >= 100.0))
      throw std::domain_error("asymptotic comparison needs mu >= 100");
    RootSet roots = solve_quartic(characteristic_coeffs(point, mu));
    auto ups = upper_half(roots);

    std::vector<std::complex<double>> comp_pairs, comp_reals;
    for (const auto& u : ups)
      (u.pair ? comp_pairs : comp_reals).push_back(u.z);
    std::vector<std::complex<double>> pred_pairs, pred_reals;
    std::vector<int> pair_idx, real_idx;
    for (size_t i = 0; i < row.size(); ++i) {
      const auto z = row[i].upper(mu);
      if (row[i].is_pair()) {
        pred_pairs.push_back(z);
        pair_idx.push_back(static_cast<int>(i));
      } else {
        pred_reals.push_back(z);
        real_idx.push_back(static_cast<int>(i));
      }
    }
    if (comp_pairs.size() != pred_pairs.size() ||
        comp_reals.size() != pred_reals.size())
      throw std::runtime_error(
          "branch structure mismatch at mu=" + std::to_string(mu) + " (" +
          std::to_string(comp_pairs.size()) + " computed pairs vs " +
          std::to_string(pred_pairs.size()) + " predicted)");

    AsymptoticSample sample;
    sample.mu = mu;
    auto emit = [&](const std::vector<std::complex<double>>& comp,
                    const std::vector<std::complex<double>>& pred,
                    const std::vector<int>& idx, bool pairs) {
      if (comp.empty()) return;
      auto perm = assign(comp, pred);
      for (size_t i = 0; i < comp.size(); ++i) {
        BranchError e;
        e.branch = idx[perm[i]];
        e.computed = comp[i];
        e.predicted = pred[perm[i]];
        e.err_re = std::abs(e.computed.real() - e.predicted.real()) /
                   std::abs(e.predicted.real());
        e.has_im = pairs;
        if (pairs)
          e.err_im = std::abs(e.computed.imag() - e.predicted.imag()) /
                     e.predicted.imag();
        sample.entries.push_back(e);
        sample.max_err = std::max({sample.max_err, e.err_re,
                                   pairs ? e.err_im : 0.0});
      }
    };
    emit(comp_pairs, pred_pairs, pair_idx, true);
    emit(comp_reals, pred_reals, real_idx, false);
    std::sort(sample.entries.begin(), sample.entries.end(),
              [](const BranchError& x, const BranchError& y) {
                return x.branch < y.branch;
              });
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<AsymptoticSample> asymptotic_error(const ParameterPoint& point,
                                               const std::vector<double>& mus) {
  RegionLabel region = classify(point);
  return asymptotic_error(point, mus, predicted_branches(region, point));
}

std::complex<double> critical_root(const ParameterPoint& point, double mu) {
  RootSet roots = solve_quartic(characteristic_coeffs(point, mu));
  const std::complex<double>* best = nullptr;
  for (const auto& z : roots) {
    if (!(z.imag() > 0.0)) continue;
    if (!best || std::abs(z.real()) < std::abs(best->real())) best = &z;
  }
  if (!best)
    throw std::runtime_error("no conjugate-pair root found at mu=" +
                             std::to_string(mu));
  return *best;
}

SlopeFit optimality_exponent(const ParameterPoint& point,
                             const std::vector<double>& mus) {
  std::vector<double> xs, ys;
  for (double mu : mus) {
    auto z = critical_root(point, mu);
    if (!(z.real() < 0.0) || !(z.imag() > 0.0)) continue;
    xs.push_back(std::log(z.imag()));
    ys.push_back(std::log(-z.real()));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("optimality fit needs at least 3 usable points");
  LineFit f = fit_line(xs, ys);
  return {f.slope, f.intercept, f.r2, f.n};
}

}  // namespace cattaneo
