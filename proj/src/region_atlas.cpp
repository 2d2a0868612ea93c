#include "cattaneo/region_atlas.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cattaneo {

namespace {

// Three-way compare with absolute snap tolerance. For eps == 0 this is an
// exact comparison; all boundary expressions below are linear combinations
// of the inputs evaluated in long double, which is exact for inputs on any
// dyadic grid coarser than ~2^-60.
int cmp(long double x, long double y, double eps) {
  long double d = x - y;
  if (d <= eps && -d <= eps) return 0;
  return d < 0 ? -1 : 1;
}

struct Coords {
  long double a, b, g;
  double eps;
  int vs(long double x, long double y) const { return cmp(x, y, eps); }
};

// Membership predicates, one per subregion, transcribing the strict/weak
// inequalities of the partition definitions verbatim. Bounds implied by the
// ambient cube ([0,1]^2 x (0,1]) are omitted; classify() enforces them.
bool in_T1(const Coords& c) {
  return c.vs(c.a, 0.5L) > 0 && c.vs(c.a, (c.b + 1) / 2) < 0 &&
         c.vs(c.b, 0) > 0 && c.vs(c.g, 2 * c.a - c.b) < 0;
}
bool in_T2(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 0) > 0 && c.vs(c.b, 1) < 0 &&
         c.vs(c.g, 1 - c.b) < 0;
}
bool in_T3(const Coords& c) {
  return c.vs(c.a, (c.b + c.g) / 2) < 0 && c.vs(c.b, 1 - c.g) > 0;
}
bool in_T4(const Coords& c) {
  return c.vs(c.a, (c.b + 1) / 2) > 0 && c.vs(c.b, 1) < 0;
}
bool in_F12(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 0) > 0 && c.vs(c.b, 1 - c.g) < 0 &&
         c.vs(c.g, 1) < 0;
}
bool in_F13(const Coords& c) {
  return c.vs(c.a, (c.b + c.g) / 2) == 0 && c.vs(c.b, 1 - c.g) > 0 &&
         c.vs(c.g, 1) < 0;
}
bool in_F14(const Coords& c) {
  return c.vs(c.a, (c.b + 1) / 2) == 0 && c.vs(c.b, 0) > 0 && c.vs(c.g, 1) < 0;
}
bool in_F2(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 0) == 0 && c.vs(c.g, 1) < 0;
}
bool in_F23(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 1 - c.g) == 0 && c.vs(c.g, 0) > 0 &&
         c.vs(c.g, 1) < 0;
}
bool in_L123(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 1 - c.g) == 0 && c.vs(c.g, 1) < 0;
}
bool in_L124(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 0) == 0 && c.vs(c.g, 1) < 0;
}
bool in_L2(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 0) == 0 && c.vs(c.g, 1) == 0;
}
bool in_L34(const Coords& c) {
  return c.vs(c.a, (c.b + 1) / 2) == 0 && c.vs(c.b, 0) > 0 && c.vs(c.g, 1) == 0;
}
bool in_P234(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 0) == 0 && c.vs(c.g, 1) == 0;
}

bool in_T1s(const Coords& c) {
  return c.vs(c.a, 0.5L) > 0 && c.vs(c.a, (c.b + 1) / 2) < 0 && c.vs(c.b, 0) > 0;
}
bool in_T2s(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 0) > 0 && c.vs(c.b, 1) < 0;
}
bool in_T4s(const Coords& c) {
  return c.vs(c.a, (c.b + 1) / 2) > 0 && c.vs(c.b, 1) < 0;
}
bool in_F12s(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 0) > 0 && c.vs(c.b, 1) < 0;
}
bool in_F14s(const Coords& c) {
  return c.vs(c.a, (c.b + 1) / 2) == 0 && c.vs(c.b, 0) > 0;
}
bool in_F2s(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 0) == 0;
}
bool in_L124s(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 0) == 0;
}
bool in_L23s(const Coords& c) {
  return c.vs(c.a, 0.5L) < 0 && c.vs(c.b, 1) == 0;
}
bool in_P123s(const Coords& c) {
  return c.vs(c.a, 0.5L) == 0 && c.vs(c.b, 1) == 0;
}

constexpr std::array<RegionLabel, 14> kInertialLabels = {
    RegionLabel::T1,   RegionLabel::T2,  RegionLabel::T3,  RegionLabel::T4,
    RegionLabel::F12,  RegionLabel::F13, RegionLabel::F14, RegionLabel::F2,
    RegionLabel::F23,  RegionLabel::L123, RegionLabel::L124, RegionLabel::L2,
    RegionLabel::L34,  RegionLabel::P234};

constexpr std::array<RegionLabel, 9> kNoninertialLabels = {
    RegionLabel::T1s,  RegionLabel::T2s,   RegionLabel::T4s,
    RegionLabel::F12s, RegionLabel::F14s,  RegionLabel::F2s,
    RegionLabel::L124s, RegionLabel::L23s, RegionLabel::P123s};

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

RegionLabel unique_label(const std::vector<RegionLabel>& hits) {
  if (hits.empty()) return RegionLabel::Unclassified;
  if (hits.size() > 1)
    throw std::runtime_error("atlas predicates overlap at a sampled point");
  return hits.front();
}

// Round to the nearest 1/8, ties to even eighths.
double eighth(double x) { return std::nearbyint(x * 8.0) / 8.0; }
double mid8(double lo, double hi) { return eighth(0.5 * (lo + hi)); }

}  // namespace

std::span<const RegionLabel> inertial_labels() { return kInertialLabels; }
std::span<const RegionLabel> noninertial_labels() { return kNoninertialLabels; }

std::vector<RegionLabel> matching_inertial_labels(double alpha, double beta,
                                                  double gamma, double eps) {
  Coords c{alpha, beta, gamma, eps};
  using Pred = bool (*)(const Coords&);
  constexpr std::array<Pred, 14> preds = {
      in_T1, in_T2, in_T3, in_T4, in_F12, in_F13, in_F14,
      in_F2, in_F23, in_L123, in_L124, in_L2, in_L34, in_P234};
  std::vector<RegionLabel> hits;
  for (size_t i = 0; i < preds.size(); ++i)
    if (preds[i](c)) hits.push_back(kInertialLabels[i]);
  return hits;
}

std::vector<RegionLabel> matching_noninertial_labels(double alpha, double beta,
                                                     double eps) {
  Coords c{alpha, beta, 0.5, eps};
  using Pred = bool (*)(const Coords&);
  constexpr std::array<Pred, 9> preds = {in_T1s,  in_T2s,   in_T4s,
                                         in_F12s, in_F14s,  in_F2s,
                                         in_L124s, in_L23s, in_P123s};
  std::vector<RegionLabel> hits;
  for (size_t i = 0; i < preds.size(); ++i)
    if (preds[i](c)) hits.push_back(kNoninertialLabels[i]);
  return hits;
}

RegionLabel classify_inertial(double alpha, double beta, double gamma,
                              double eps) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0,1]");
  return unique_label(matching_inertial_labels(alpha, beta, gamma, eps));
}

RegionLabel classify_noninertial(double alpha, double beta, double eps) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  return unique_label(matching_noninertial_labels(alpha, beta, eps));
}

RegionLabel classify(const ParameterPoint& point, double eps) {
  if (point.inertial())
    return classify_inertial(point.alpha, point.beta, point.gamma, eps);
  return classify_noninertial(point.alpha, point.beta, eps);
}

bool wellposed(const ParameterPoint& point) {
  point.validate();
  return static_cast<long double>(point.beta) >=
         2.0L * static_cast<long double>(point.alpha) - 1.0L;
}

StabilityVerdict decay_order(const ParameterPoint& point, double eps) {
  point.validate();
  const double a = point.alpha, b = point.beta, g = point.gamma;
  StabilityVerdict v;
  v.region = classify(point, eps);

  auto polynomial = [&](Rational k) {
    // The closed-form order degenerates to 0 on the gamma = 1 face of T3,
    // where the critical eigenvalue branch has bounded imaginary parts (the
    // same signature as the open L2 line); no positive rate is available.
    if (!(Rational(0) < k)) {
      v.kind = VerdictKind::Unknown;
      return;
    }
    v.kind = VerdictKind::Polynomial;
    v.order = k;
  };

  switch (v.region) {
    case RegionLabel::T1:
    case RegionLabel::F12:
    case RegionLabel::F14:
    case RegionLabel::L124:
      polynomial(exact_ratio({{2, a}, {-1, g}}, {{4, a}, {-2, b}, {-2, g}}));
      break;
    case RegionLabel::T2:
    case RegionLabel::F2:
      polynomial(exact_ratio({{1, 1.0}, {-1, g}},
                             {{4, 1.0}, {-4, a}, {-2, b}, {-2, g}}));
      break;
    case RegionLabel::T3:
    case RegionLabel::F23:
      polynomial(exact_ratio({{1, 1.0}, {-1, g}}, {{-4, a}, {2, b}, {2, g}}));
      break;
    case RegionLabel::F13:
    case RegionLabel::L123:
    case RegionLabel::L34:
    case RegionLabel::P234:
    case RegionLabel::P123s:
      v.kind = VerdictKind::Exponential;
      break;
    case RegionLabel::L2:
    case RegionLabel::Unclassified:
      v.kind = VerdictKind::Unknown;
      break;
    case RegionLabel::T4:
    case RegionLabel::T4s:
      v.kind = VerdictKind::OutOfTheory;
      break;
    case RegionLabel::T1s:
    case RegionLabel::F12s:
    case RegionLabel::F14s:
    case RegionLabel::L124s:
      polynomial(exact_ratio({{1, a}}, {{2, a}, {-1, b}}));
      break;
    case RegionLabel::T2s:
    case RegionLabel::F2s:
    case RegionLabel::L23s:
      polynomial(exact_ratio({{1, 1.0}}, {{4, 1.0}, {-4, a}, {-2, b}}));
      break;
  }
  return v;
}

ParameterPoint representative_point(RegionLabel label) {
  ParameterPoint p;
  p.sigma = 2.0;
  p.tau = 1.0;
  p.m = starred(label) ? 0.0 : 1.0;
  double a = 0, b = 0, g = 0.5;
  switch (label) {
    case RegionLabel::T1:
      b = mid8(0, 1); a = mid8(0.5, (b + 1) / 2); g = mid8(0, 2 * a - b); break;
    case RegionLabel::T2:
      b = mid8(0, 1); a = mid8(0, 0.5); g = mid8(0, 1 - b); break;
    case RegionLabel::T3:
      g = mid8(0, 1); b = mid8(1 - g, 1); a = mid8(0, (b + g) / 2); break;
    case RegionLabel::T4:
      b = mid8(0, 1); a = mid8((b + 1) / 2, 1); g = mid8(0, 1); break;
    case RegionLabel::F12:
      a = 0.5; g = mid8(0, 1); b = mid8(0, 1 - g); break;
    case RegionLabel::F13:
      g = mid8(0, 1); b = mid8(1 - g, 1); a = (b + g) / 2; break;
    case RegionLabel::F14:
      b = mid8(0, 1); a = (b + 1) / 2; g = mid8(0, 1); break;
    case RegionLabel::F2:
      b = 0; a = mid8(0, 0.5); g = mid8(0, 1); break;
    case RegionLabel::F23:
      g = mid8(0, 1); b = 1 - g; a = mid8(0, 0.5); break;
    case RegionLabel::L123:
      g = mid8(0, 1); b = 1 - g; a = 0.5; break;
    case RegionLabel::L124:
      a = 0.5; b = 0; g = mid8(0, 1); break;
    case RegionLabel::L2:
      a = mid8(0, 0.5); b = 0; g = 1; break;
    case RegionLabel::L34:
      b = mid8(0, 1); a = (b + 1) / 2; g = 1; break;
    case RegionLabel::P234:
      a = 0.5; b = 0; g = 1; break;
    case RegionLabel::T1s:
      b = mid8(0, 1); a = mid8(0.5, (b + 1) / 2); break;
    case RegionLabel::T2s:
      b = mid8(0, 1); a = mid8(0, 0.5); break;
    case RegionLabel::T4s:
      b = mid8(0, 1); a = mid8((b + 1) / 2, 1); break;
    case RegionLabel::F12s:
      a = 0.5; b = mid8(0, 1); break;
    case RegionLabel::F14s:
      b = mid8(0, 1); a = (b + 1) / 2; break;
    case RegionLabel::F2s:
      b = 0; a = mid8(0, 0.5); break;
    case RegionLabel::L124s:
      a = 0.5; b = 0; break;
    case RegionLabel::L23s:
      b = 1; a = mid8(0, 0.5); break;
    case RegionLabel::P123s:
      a = 0.5; b = 1; break;
    case RegionLabel::Unclassified:
      throw std::domain_error("no representative for Unclassified");
  }
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  if (classify(p) != label)
    throw std::logic_error("representative fell outside its region: " +
                           std::string(label_name(label)));
  return p;
}

std::vector<AtlasRow> sample_atlas(int resolution, bool m_positive,
                                   double gamma, double eps) {
  if (resolution < 2) throw std::domain_error("grid resolution must be >= 2");
  const int n = resolution;
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) axis[i] = static_cast<double>(i) / (n - 1);

  std::vector<double> gammas;
  if (!m_positive) {
    gammas = {std::numeric_limits<double>::quiet_NaN()};
  } else if (gamma >= 0.0) {
    gammas = {gamma};
  } else {
    for (int k = 1; k <= n; ++k) gammas.push_back(static_cast<double>(k) / n);
  }

  std::vector<AtlasRow> rows;
  rows.reserve(static_cast<size_t>(n) * n * gammas.size());
  for (double g : gammas)
    for (double a : axis)
      for (double b : axis) {
        ParameterPoint p;
        p.alpha = a;
        p.beta = b;
        p.gamma = m_positive ? g : 0.5;
        p.m = m_positive ? 1.0 : 0.0;
        AtlasRow row;
        row.alpha = a;
        row.beta = b;
        row.gamma = m_positive ? g : std::numeric_limits<double>::quiet_NaN();
        row.verdict = decay_order(p, eps);
        if (row.verdict.kind == VerdictKind::Polynomial &&
            !(Rational(0) < *row.verdict.order))
          throw std::logic_error("nonpositive polynomial order during sampling");
        rows.push_back(row);
      }
  return rows;
}

}  // namespace cattaneo
