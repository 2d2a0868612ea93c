#pragma once

#include <array>
#include <complex>
#include <vector>

namespace cattaneo {

/// c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 with real coefficients.
struct QuarticCoeffs {
  double c4 = 0, c3 = 0, c2 = 0, c1 = 0, c0 = 0;
  std::array<double, 5> ascending() const { return {c0, c1, c2, c3, c4}; }
};

using RootSet = std::array<std::complex<double>, 4>;

/// All real roots of a x^3 + b x^2 + c x + d (a != 0), ascending, with
/// multiplicity. One entry when the complex pair is not real, three otherwise.
std::vector<double> cubic_real_roots(double a, double b, double c, double d);

/// Four roots, conjugate-closed for the real coefficients, sorted by
/// (Re, Im). Closed-form path: magnitude rescaling, depressed quartic,
/// resolvent cubic, factorization into two real quadratics. Each root is then
/// Newton-polished with compensated (double-double) Horner evaluation; that
/// keeps the tiny real parts of near-imaginary roots accurate even when the
/// coefficients span twenty orders of magnitude.
/// Throws std::domain_error when |c4| is negligible against the rest.
RootSet solve_quartic(const QuarticCoeffs& q);

/// max over roots of |q(root)| / sum_j |c_j| |root|^j (compensated residual).
double quartic_backward_error(const QuarticCoeffs& q, const RootSet& roots);

}  // namespace cattaneo
