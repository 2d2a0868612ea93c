#include "cattaneo/semigroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cattaneo/parallel.hpp"
#include "cattaneo/region_atlas.hpp"

namespace cattaneo {

ModeEvolver::ModeEvolver(const ParameterPoint& point, double mu)
    : blk_(modal_block(point, mu)) {
  Eigen::EigenSolver<Eigen::Matrix4d> es(blk_.matrix);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("mode evolver: eigensolver failed");
  v_ = es.eigenvectors();
  evals_ = es.eigenvalues();
  Eigen::JacobiSVD<Mat4c> svd(v_);
  const double smin = svd.singularValues()(3);
  cond_ = smin > 0.0 ? svd.singularValues()(0) / smin
                     : std::numeric_limits<double>::infinity();
  if (cond_ <= kConditionLimit) {
    vinv_ = v_.inverse();
    use_eig_ = true;
  }
}

Mat4c ModeEvolver::exponential(double t) const {
  if (use_eig_) {
    Eigen::Vector4cd phases;
    for (int i = 0; i < 4; ++i) phases(i) = std::exp(t * evals_(i));
    return v_ * phases.asDiagonal() * vinv_;
  }
  Eigen::Matrix4d scaled = t * blk_.matrix;
  return scaled.exp().cast<std::complex<double>>();
}

ModalState ModeEvolver::apply(const ModalState& s, double t) const {
  if (t == 0.0) return s;
  return ModalState::from(exponential(t) * s.vec());
}

double ModeEvolver::max_abs_eigenvalue() const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(evals_(i)));
  return m;
}

ModalState evolve_mode(const ParameterPoint& point, double mu,
                       const ModalState& s, double t) {
  if (!(t >= 0.0)) throw std::domain_error("evolve_mode: t must be >= 0");
  return ModeEvolver(point, mu).apply(s, t);
}

double energy(const ParameterPoint& point, const ModeData& modes) {
  double e = 0.0;
  for (const auto& [mu, s] : modes) {
    const Eigen::Vector4d w = modal_block(point, mu).weights;
    e += 0.5 * (w(0) * std::norm(s.u) + w(1) * std::norm(s.v) +
                w(2) * std::norm(s.theta) + w(3) * std::norm(s.q));
  }
  return e;
}

DissipationCheck dissipation_residual(const ParameterPoint& point,
                                      const ModeData& modes, double t,
                                      double h) {
  if (!(h > 0.0) || !(t - h >= 0.0))
    throw std::domain_error("dissipation_residual: need 0 < h <= t");
  DissipationCheck out;
  ModeData at_t, at_m, at_p;
  double fastest = 0.0;
  for (const auto& [mu, s] : modes) {
    ModeEvolver ev(point, mu);
    fastest = std::max(fastest, ev.max_abs_eigenvalue());
    at_m.emplace_back(mu, ev.apply(s, t - h));
    at_t.emplace_back(mu, ev.apply(s, t));
    at_p.emplace_back(mu, ev.apply(s, t + h));
  }
  out.step_warning = fastest > 0.0 && h > 0.1 / fastest;
  out.dEdt = (energy(point, at_p) - energy(point, at_m)) / (2.0 * h);
  for (const auto& [mu, s] : at_t) out.dissipation += std::norm(s.q);
  out.residual = std::abs(out.dEdt + out.dissipation);
  return out;
}

EnergyTrace trace_energy(const ParameterPoint& point, const ModeData& modes,
                         const std::vector<double>& times) {
  EnergyTrace tr;
  std::vector<ModeEvolver> evs;
  evs.reserve(modes.size());
  for (const auto& [mu, s] : modes) evs.emplace_back(point, mu);
  for (double t : times) {
    ModeData now;
    for (size_t i = 0; i < modes.size(); ++i)
      now.emplace_back(modes[i].first, evs[i].apply(modes[i].second, t));
    double qsq = 0.0;
    for (const auto& [mu, s] : now) qsq += std::norm(s.q);
    tr.times.push_back(t);
    tr.energies.push_back(energy(point, now));
    tr.q_norms.push_back(std::sqrt(qsq));
  }
  return tr;
}

namespace {

double block_norm_at(const ModeEvolver& ev, double t) {
  const Mat4c ainv = inverse4(ev.block().matrix.cast<std::complex<double>>());
  return weighted_operator_norm(ev.exponential(t) * ainv, ev.block().weights);
}

void require_invertible_generator(const ParameterPoint& point) {
  if (!wellposed(point))
    throw std::domain_error(
        "semigroup norm undefined: beta < 2 alpha - 1 puts 0 in the spectrum");
}

}  // namespace

SemigroupNormSample semigroup_norm(const ParameterPoint& point, double t,
                                   const std::vector<double>& modes) {
  require_invertible_generator(point);
  if (!(t > 0.0)) throw std::domain_error("semigroup_norm: t must be > 0");
  if (modes.empty()) throw std::invalid_argument("semigroup_norm: no modes");
  SemigroupNormSample best{t, -1.0, -1};
  for (size_t i = 0; i < modes.size(); ++i) {
    double n = block_norm_at(ModeEvolver(point, modes[i]), t);
    if (n > best.norm) {
      best.norm = n;
      best.argmax_index = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<SemigroupNormSample> semigroup_norm_series(
    const ParameterPoint& point, const std::vector<double>& times,
    const std::vector<double>& modes) {
  require_invertible_generator(point);
  if (modes.empty()) throw std::invalid_argument("semigroup_norm: no modes");
  std::vector<ModeEvolver> evs;
  evs.reserve(modes.size());
  for (double mu : modes) evs.emplace_back(point, mu);

  const int nt = static_cast<int>(times.size());
  const int nm = static_cast<int>(modes.size());
  std::vector<double> norms(static_cast<size_t>(nt) * nm, 0.0);
  parallel_for(nm, [&](int j) {
    const Mat4c ainv =
        inverse4(evs[j].block().matrix.cast<std::complex<double>>());
    for (int i = 0; i < nt; ++i) {
      if (!(times[i] > 0.0))
        throw std::domain_error("semigroup_norm: t must be > 0");
      norms[static_cast<size_t>(i) * nm + j] = weighted_operator_norm(
          evs[j].exponential(times[i]) * ainv, evs[j].block().weights);
    }
  });

  std::vector<SemigroupNormSample> out(nt);
  for (int i = 0; i < nt; ++i) {
    out[i].t = times[i];
    for (int j = 0; j < nm; ++j) {
      double n = norms[static_cast<size_t>(i) * nm + j];
      if (n > out[i].norm) {
        out[i].norm = n;
        out[i].argmax_index = j;
      }
    }
  }
  return out;
}

DecayFit decay_fit(const std::vector<double>& times,
                   const std::vector<double>& values, double t_lo,
                   double t_hi) {
  if (times.size() != values.size())
    throw std::invalid_argument("decay_fit: size mismatch");
  std::vector<double> lt, lv, tt;
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_lo || times[i] > t_hi || !(values[i] > 0.0)) continue;
    lt.push_back(std::log(times[i]));
    lv.push_back(std::log(values[i]));
    tt.push_back(times[i]);
  }
  if (lt.size() < 5)
    throw std::invalid_argument("decay_fit: window holds fewer than 5 samples");
  DecayFit f;
  f.powerlaw = fit_line(lt, lv);
  f.exponential_model = fit_line(tt, lv);
  f.exponential_preferred = f.exponential_model.rss < f.powerlaw.rss;
  return f;
}

}  // namespace cattaneo
