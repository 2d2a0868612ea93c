#include "cattaneo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cattaneo {

namespace {

// ---- double-double building blocks (Dekker/Knuth error-free transforms) ----

struct dd {
  double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  return two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd dd_add_d(dd a, double b) {
  dd s = two_sum(a.hi, b);
  return two_sum(s.hi, s.lo + a.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  return two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline double dd_val(dd a) { return a.hi + a.lo; }

struct ddc {
  dd re, im;
};

inline ddc ddc_from(std::complex<double> z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline ddc ddc_mul(ddc a, ddc b) {
  return {dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im))),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline ddc ddc_add_d(ddc a, double r) { return {dd_add_d(a.re, r), a.im}; }

inline std::complex<double> ddc_val(ddc a) { return {dd_val(a.re), dd_val(a.im)}; }

// Horner with real coefficients (descending degree) at a complex point,
// accumulated in double-double.
std::complex<double> horner_dd(const double* coeff, int n, std::complex<double> z) {
  ddc zq = ddc_from(z);
  ddc p = ddc_from({coeff[0], 0.0});
  for (int i = 1; i < n; ++i) p = ddc_add_d(ddc_mul(p, zq), coeff[i]);
  return ddc_val(p);
}

double horner_dd_real(const double* coeff, int n, double x) {
  dd xq{x, 0.0};
  dd p{coeff[0], 0.0};
  for (int i = 1; i < n; ++i) p = dd_add_d(dd_mul(p, xq), coeff[i]);
  return dd_val(p);
}

// ---- polishing ----

struct Poly5 {
  double c[5];   // descending: c4 .. c0
  double d[4];   // derivative, descending
};

Poly5 make_poly(const QuarticCoeffs& q) {
  Poly5 p;
  p.c[0] = q.c4; p.c[1] = q.c3; p.c[2] = q.c2; p.c[3] = q.c1; p.c[4] = q.c0;
  p.d[0] = 4 * q.c4; p.d[1] = 3 * q.c3; p.d[2] = 2 * q.c2; p.d[3] = q.c1;
  return p;
}

std::complex<double> polish_complex(const Poly5& p, std::complex<double> z) {
  for (int it = 0; it < 6; ++it) {
    std::complex<double> f = horner_dd(p.c, 5, z);
    std::complex<double> fp = horner_dd(p.d, 4, z);
    if (fp == std::complex<double>(0.0, 0.0)) break;
    std::complex<double> step = f / fp;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 1e-20 * (std::abs(z) + 1e-300)) break;
  }
  return z;
}

double polish_real(const Poly5& p, double x) {
  for (int it = 0; it < 6; ++it) {
    double f = horner_dd_real(p.c, 5, x);
    double fp = horner_dd_real(p.d, 4, x);
    if (fp == 0.0) break;
    double step = f / fp;
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(step) <= 1e-20 * (std::abs(x) + 1e-300)) break;
  }
  return x;
}

// Roots of y^2 + b y + c with real coefficients, cancellation-free.
std::array<std::complex<double>, 2> quad_roots(double b, double c) {
  double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    double sq = std::sqrt(disc);
    double y1 = -0.5 * (b + std::copysign(sq, b));
    double y2 = (y1 != 0.0) ? c / y1 : -b - y1;
    return {std::complex<double>(y1, 0.0), std::complex<double>(y2, 0.0)};
  }
  double sq = 0.5 * std::sqrt(-disc);
  return {std::complex<double>(-0.5 * b, sq), std::complex<double>(-0.5 * b, -sq)};
}

}  // namespace

std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
  if (a == 0.0) throw std::domain_error("cubic: zero leading coefficient");
  const double B = b / a, C = c / a, D = d / a;
  const double P = C - B * B / 3.0;
  const double Q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;

  std::vector<double> roots;
  if (P == 0.0 && Q == 0.0) {
    roots.assign(3, -B / 3.0);
    return roots;
  }

  const double disc = -4.0 * P * P * P - 27.0 * Q * Q;
  if (disc >= 0.0 && P < 0.0) {
    // three real roots
    double m2 = 2.0 * std::sqrt(-P / 3.0);
    double arg = 3.0 * Q / (P * m2);
    arg = std::clamp(arg, -1.0, 1.0);
    double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(m2 * std::cos(theta - 2.0 * M_PI * k / 3.0) - B / 3.0);
  } else {
    double h = std::sqrt(std::max(0.0, Q * Q / 4.0 + P * P * P / 27.0));
    double u = std::cbrt(-Q / 2.0 - std::copysign(h, Q));
    double t = (u != 0.0) ? u - P / (3.0 * u) : 0.0;
    roots.push_back(t - B / 3.0);
  }

  // plain Newton polish; cubics used here are well conditioned
  for (double& x : roots)
    for (int it = 0; it < 3; ++it) {
      double f = ((a * x + b) * x + c) * x + d;
      double fp = (3.0 * a * x + 2.0 * b) * x + c;
      if (fp == 0.0) break;
      double step = f / fp;
      if (!std::isfinite(step)) break;
      x -= step;
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSet solve_quartic(const QuarticCoeffs& q) {
  const double cmax = std::max({std::abs(q.c3), std::abs(q.c2),
                                std::abs(q.c1), std::abs(q.c0)});
  if (q.c4 == 0.0 ||
      std::abs(q.c4) < std::numeric_limits<double>::epsilon() * cmax)
    throw std::domain_error("quartic: degenerate leading coefficient");

  // Root-magnitude scale; keeps the depressed quartic O(1).
  double s = 0.0;
  const double monic[4] = {q.c3 / q.c4, q.c2 / q.c4, q.c1 / q.c4, q.c0 / q.c4};
  for (int i = 0; i < 4; ++i)
    s = std::max(s, std::pow(std::abs(monic[i]), 1.0 / (i + 1)));
  RootSet roots{};
  if (s == 0.0) return roots;  // x^4 = 0

  const double A3 = monic[0] / s;
  const double A2 = monic[1] / (s * s);
  const double A1 = monic[2] / (s * s * s);
  const double A0 = monic[3] / (s * s * s * s);

  // depressed: y^4 + p y^2 + qq y + r, nu = y - A3/4
  const double p = A2 - 3.0 * A3 * A3 / 8.0;
  const double qq = A1 - A3 * A2 / 2.0 + A3 * A3 * A3 / 8.0;
  const double r = A0 - A3 * A1 / 4.0 + A3 * A3 * A2 / 16.0 -
                   3.0 * A3 * A3 * A3 * A3 / 256.0;

  const double qq_noise =
      std::numeric_limits<double>::epsilon() *
      (std::abs(A1) + std::abs(A3 * A2) / 2.0 + std::abs(A3 * A3 * A3) / 8.0);

  std::array<std::complex<double>, 4> y;
  if (std::abs(qq) <= qq_noise) {
    // biquadratic in y^2
    auto z = quad_roots(p, r);
    if (z[0].imag() == 0.0) {
      for (int i = 0; i < 2; ++i) {
        double zr = z[i].real();
        if (zr >= 0.0) {
          double sq = std::sqrt(zr);
          y[2 * i] = {sq, 0.0};
          y[2 * i + 1] = {-sq, 0.0};
        } else {
          double sq = std::sqrt(-zr);
          y[2 * i] = {0.0, sq};
          y[2 * i + 1] = {0.0, -sq};
        }
      }
    } else {
      std::complex<double> y1 = std::sqrt(z[0]);
      y = {y1, std::conj(y1), -y1, -std::conj(y1)};
    }
  } else {
    // resolvent cubic 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - qq^2 = 0 has a
    // positive real root; take the largest for a stable factorization.
    auto ms = cubic_real_roots(8.0, 8.0 * p, 2.0 * p * p - 8.0 * r, -qq * qq);
    double m = ms.back();
    if (!(m > 0.0)) m = std::abs(m) + qq_noise;  // guards rounding at qq ~ 0
    const double A = std::sqrt(2.0 * m);
    const double C1 = p / 2.0 + m + qq / (2.0 * A);
    const double C2 = p / 2.0 + m - qq / (2.0 * A);
    auto y01 = quad_roots(-A, C1);
    auto y23 = quad_roots(A, C2);
    y = {y01[0], y01[1], y23[0], y23[1]};
  }

  const double shift = A3 / 4.0;
  for (int i = 0; i < 4; ++i) roots[i] = s * (y[i] - shift);

  // Polish against the original coefficients; conjugate pairs stay exact by
  // polishing the upper member and mirroring.
  const Poly5 poly = make_poly(q);
  std::array<bool, 4> done{};
  for (int i = 0; i < 4; ++i) {
    if (done[i]) continue;
    if (roots[i].imag() == 0.0) {
      roots[i] = {polish_real(poly, roots[i].real()), 0.0};
      done[i] = true;
      continue;
    }
    int partner = -1;
    for (int j = 0; j < 4; ++j)
      if (j != i && !done[j] && roots[j] == std::conj(roots[i])) {
        partner = j;
        break;
      }
    std::complex<double> up =
        roots[i].imag() > 0.0 ? roots[i] : std::conj(roots[i]);
    up = polish_complex(poly, up);
    if (partner >= 0) {
      roots[i] = roots[i].imag() > 0.0 ? up : std::conj(up);
      roots[partner] = std::conj(roots[i]);
      done[partner] = true;
    } else {
      roots[i] = roots[i].imag() > 0.0 ? up : std::conj(up);
    }
    done[i] = true;
  }

  std::sort(roots.begin(), roots.end(), [](const auto& u, const auto& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return roots;
}

double quartic_backward_error(const QuarticCoeffs& q, const RootSet& roots) {
  const Poly5 poly = make_poly(q);
  double worst = 0.0;
  for (const auto& z : roots) {
    double az = std::abs(z);
    double scale = 0.0, zp = 1.0;
    const double asc[5] = {q.c0, q.c1, q.c2, q.c3, q.c4};
    for (int i = 0; i < 5; ++i) {
      scale += std::abs(asc[i]) * zp;
      zp *= az;
    }
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(horner_dd(poly.c, 5, z)) / scale);
  }
  return worst;
}

}  // namespace cattaneo
