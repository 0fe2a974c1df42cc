#include "nbody/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "nbody/family5.hpp"
#include "nbody/family7.hpp"
#include "nbody/sampling.hpp"

namespace nbody {

namespace {

unsigned thread_count() {
  if (const char* env = std::getenv("NBODY_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Evaluates fn(i) for i in [0, n) into a vector, in parallel. Each result
// lands at its own index, so the reduction order downstream is fixed and the
// output never depends on the thread count.
template <typename F>
std::vector<double> parallel_map(std::uint64_t n, F fn) {
  std::vector<double> out(n);
  const unsigned threads = std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(n, 1));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < n; i += threads) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

OmegaFit fit_angular_velocity(const Configuration& config) {
  OmegaFit fit;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Complex z = config.bodies[i].z;
    const double r2 = std::norm(z);
    if (r2 < 1e-24 || std::abs(r2 - 1.0) < 1e-9) continue;  // no radial information
    const double q = 1.0 + r2;
    const Complex g = potential_gradient_conj(config, i);
    // centripetal balance of w(t) = e^{i omega t} z:
    //   omega^2 z (r^2 - 1)/(1 + r^2) = (1 + r^2)^2 / (2 m) dU/dconj(z)
    const double w2 = q * q * q * std::real(std::conj(z) * g) /
                      (2.0 * config.bodies[i].mass * r2 * (r2 - 1.0));
    if (w2 <= 0.0)
      throw NegativeOmegaSquared("omega^2 = " + std::to_string(w2) + " for body " +
                                 std::to_string(i));
    fit.per_body_omega_sq.push_back(w2);
  }
  if (fit.per_body_omega_sq.empty())
    throw Inadmissible("no body determines the rotation rate");
  double sum = 0.0, lo = fit.per_body_omega_sq.front(), hi = lo;
  for (double w2 : fit.per_body_omega_sq) {
    sum += std::sqrt(w2);
    lo = std::min(lo, w2);
    hi = std::max(hi, w2);
  }
  fit.omega = sum / static_cast<double>(fit.per_body_omega_sq.size());
  fit.consistency = (std::sqrt(hi) - std::sqrt(lo)) / fit.omega;
  return fit;
}

DriftReport rigid_rotation_check(const Configuration& config, double periods, double tol,
                                 const IntegrationSettings& settings) {
  const OmegaFit fit = fit_angular_velocity(config);
  DriftReport report;
  report.omega = fit.omega;
  report.consistency = fit.consistency;
  report.periods = periods;

  const double period = 2.0 * std::numbers::pi / fit.omega;
  IntegrationSettings s = settings;
  s.t_final = periods * period;
  const int samples_per_period = 32;
  std::vector<double> times;
  const int total = std::max(1, static_cast<int>(std::ceil(periods * samples_per_period)));
  for (int i = 1; i <= total; ++i)
    times.push_back(s.t_final * static_cast<double>(i) / total);

  const State state0 = rigid_rotation_state(config, fit.omega);
  const std::vector<State> traj = integrate(config, state0, s, times);

  const std::size_t n = config.size();
  std::vector<double> d0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d0.push_back(geodesic_distance(state0.positions[i], state0.positions[j]));
  const double e0 = total_energy(config, state0);
  const double e_scale = std::max(std::abs(e0), 1.0);

  for (const State& st : traj) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        const double d = geodesic_distance(st.positions[i], st.positions[j]);
        report.max_distance_drift =
            std::max(report.max_distance_drift, std::abs(d - d0[k]) / d0[k]);
      }
    for (std::size_t i = 0; i < n; ++i) {
      const double r0 = std::abs(state0.positions[i]);
      if (r0 < 1e-12) continue;
      report.max_radius_drift = std::max(
          report.max_radius_drift, std::abs(std::abs(st.positions[i]) - r0) / r0);
    }
    report.energy_drift =
        std::max(report.energy_drift, std::abs(total_energy(config, st) - e0) / e_scale);
  }
  report.pass = report.max_distance_drift < tol && report.max_radius_drift < tol;
  return report;
}

LemmaAudit lemma_audit(const std::string& name, std::uint64_t samples, std::uint64_t seed) {
  LemmaAudit audit;
  audit.name = name;
  audit.samples = samples;
  const HaltonSampler h(seed);

  std::vector<double> margins;
  if (name == "lema2") {
    // margin of both the full expression and its minorant H on 0 < a < r < 1
    margins = parallel_map(samples, [&](std::uint64_t i) {
      const double r = h(i, 0);
      const double a = h(i, 1) * r;
      if (a <= 0.0 || r >= 1.0 || a >= r) return 1.0;  // degenerate corner, skip
      return std::min(lemma2_expression(a, r), lemma2_h(a, r));
    });
  } else if (name == "lemma5") {
    margins = parallel_map(samples, [&](std::uint64_t i) {
      const double x = h(i, 0);
      if (x <= 0.0 || x >= 1.0) return 1.0;
      return lemma5_expression(x);
    });
  } else if (name == "lemma4") {
    // claim is A1(x) < 0 on x > 1; margin is -A1
    margins = parallel_map(samples, [&](std::uint64_t i) {
      const double x = 1.0 + 49.0 * h(i, 0);
      if (x <= 1.0) return 1.0;
      return -lemma4_a1(x);
    });
  } else {
    throw UnknownLemma(name);
  }

  audit.min_margin = margins.empty() ? 0.0 : margins.front();
  for (double m : margins) {
    audit.min_margin = std::min(audit.min_margin, m);
    if (m <= 0.0) ++audit.violations;
  }
  audit.pass = audit.violations == 0 && audit.min_margin > 0.0;
  return audit;
}

MeasureEstimate measure_estimate(const std::string& family, const std::vector<double>& lo,
                                 const std::vector<double>& hi, std::uint64_t samples,
                                 std::uint64_t seed) {
  const std::size_t dims = family == "five" ? 2 : family == "seven" ? 3 : 0;
  if (dims == 0) throw Inadmissible("family must be five or seven");
  if (lo.size() != dims || hi.size() != dims) throw Inadmissible("bounds dimension mismatch");
  for (std::size_t d = 0; d < dims; ++d)
    if (!(lo[d] < hi[d])) throw Inadmissible("empty sampling box");

  const HaltonSampler h(seed);
  const std::vector<double> ok = parallel_map(samples, [&](std::uint64_t i) {
    double p[3] = {0, 0, 0};
    for (std::size_t d = 0; d < dims; ++d)
      p[d] = lo[d] + (hi[d] - lo[d]) * h(i, static_cast<int>(d));
    try {
      if (dims == 2) {
        if (!(p[0] < p[1])) return 0.0;
        const MassSolution5 sol = solve_masses_exact(p[0], p[1]);
        return (sol.positive && sol.residual_max < 1e-10) ? 1.0 : 0.0;
      }
      if (!(p[0] < p[1] && p[1] < p[2])) return 0.0;
      const MassSolution7 sol = solve_masses_exact7(p[0], p[1], p[2]);
      return (sol.positive && sol.residual_max < 1e-10) ? 1.0 : 0.0;
    } catch (const Error&) {
      return 0.0;  // refusals (nonexistence regimes, boundaries) are failures
    }
  });

  MeasureEstimate est;
  est.family = family;
  est.lo = lo;
  est.hi = hi;
  est.samples = samples;
  for (double v : ok) est.successes += v > 0.5 ? 1 : 0;
  est.fraction =
      samples == 0 ? 0.0 : static_cast<double>(est.successes) / static_cast<double>(samples);
  // Wilson 95% interval
  if (samples > 0) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(samples);
    const double ph = est.fraction;
    const double den = 1.0 + z * z / n;
    const double center = (ph + z * z / (2.0 * n)) / den;
    const double half = z * std::sqrt(ph * (1.0 - ph) / n + z * z / (4.0 * n * n)) / den;
    est.wilson_lo = std::max(0.0, center - half);
    est.wilson_hi = std::min(1.0, center + half);
    if (est.successes == 0) est.wilson_lo = 0.0;
    if (est.successes == samples) est.wilson_hi = 1.0;
  }
  return est;
}

}  // namespace nbody
