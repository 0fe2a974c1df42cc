#include "nbody/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace nbody {

std::vector<Complex> acceleration(const Configuration& config, const State& state) {
  const std::size_t n = config.size();
  Configuration at;
  at.bodies.resize(n);
  for (std::size_t i = 0; i < n; ++i) at.bodies[i] = {config.bodies[i].mass, state.positions[i]};

  std::vector<Complex> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex zi = state.positions[i];
    const Complex vi = state.velocities[i];
    const double q = 1.0 + std::norm(zi);
    Complex a = 2.0 * std::conj(zi) * vi * vi / q;
    if (n > 1) a += q * q / (2.0 * config.bodies[i].mass) * potential_gradient_conj(at, i);
    acc[i] = a;
  }
  return acc;
}

double kinetic_energy(const Configuration& config, const State& state) {
  double t = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const double q = 1.0 + std::norm(state.positions[i]);
    t += 2.0 * config.bodies[i].mass * std::norm(state.velocities[i]) / (q * q);
  }
  return t;
}

double total_energy(const Configuration& config, const State& state) {
  if (config.size() < 2) return kinetic_energy(config, state);
  Configuration at;
  at.bodies.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    at.bodies[i] = {config.bodies[i].mass, state.positions[i]};
  return kinetic_energy(config, state) - potential(at);
}

State rigid_rotation_state(const Configuration& config, double omega) {
  State s;
  s.t = 0.0;
  s.positions.reserve(config.size());
  s.velocities.reserve(config.size());
  for (const auto& b : config.bodies) {
    s.positions.push_back(b.z);
    s.velocities.push_back(Complex{0.0, omega} * b.z);
  }
  return s;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600, 0.0,         7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

using Vec = std::vector<Complex>;

Vec rhs(const Configuration& config, const State& s) {
  const std::size_t n = config.size();
  const auto acc = acceleration(config, s);
  Vec dy(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    dy[i] = s.velocities[i];
    dy[n + i] = acc[i];
  }
  return dy;
}

State unpack(const Configuration& config, const Vec& y, double t) {
  const std::size_t n = config.size();
  State s;
  s.t = t;
  s.positions.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  s.velocities.assign(y.begin() + static_cast<std::ptrdiff_t>(n), y.end());
  return s;
}

void check_singularities(const Configuration& config, const State& s) {
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      const double c = geodesic_cos(s.positions[i], s.positions[j]);
      if (std::sqrt(std::max(0.0, 1.0 - c * c)) < kSingularSinTol)
        throw SingularityReached(s.t, static_cast<int>(i), static_cast<int>(j));
    }
}

}  // namespace

std::vector<State> integrate(const Configuration& config, const State& state0,
                             const IntegrationSettings& settings,
                             const std::vector<double>& sample_times) {
  const std::size_t n = config.size();
  const std::size_t dim = 2 * n;
  check_singularities(config, state0);

  Vec y(dim);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = state0.positions[i];
    y[n + i] = state0.velocities[i];
  }
  double t = state0.t;
  double h = std::min(settings.max_step, 1e-4);

  std::vector<State> out;
  out.reserve(sample_times.size());
  std::size_t next_sample = 0;
  while (next_sample < sample_times.size() && sample_times[next_sample] <= t) {
    out.push_back(unpack(config, y, t));
    out.back().t = sample_times[next_sample];
    ++next_sample;
  }

  Vec k[7];
  k[0] = rhs(config, unpack(config, y, t));
  const double hmin_scale = std::max(std::abs(settings.t_final), 1.0);

  while (next_sample < sample_times.size() || t < settings.t_final - 1e-15 * hmin_scale) {
    double target = settings.t_final;
    if (next_sample < sample_times.size()) target = std::min(target, sample_times[next_sample]);
    h = std::min({h, settings.max_step, target - t});
    if (h < 1e-15 * hmin_scale) throw StepSizeUnderflow(t);

    // FSAL: k[0] is the derivative at (t, y).
    Vec ytmp(dim);
    for (int stage = 1; stage < 7; ++stage) {
      for (std::size_t d = 0; d < dim; ++d) {
        Complex acc = y[d];
        for (int s = 0; s < stage; ++s) acc += h * kA[stage][s] * k[s][d];
        ytmp[d] = acc;
      }
      k[stage] = rhs(config, unpack(config, ytmp, t + kC[stage] * h));
    }

    Vec y5(dim);
    double err = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      Complex acc5 = y[d], acc4 = y[d];
      for (int s = 0; s < 7; ++s) {
        acc5 += h * kB5[s] * k[s][d];
        acc4 += h * kB4[s] * k[s][d];
      }
      y5[d] = acc5;
      const double sc = settings.abs_tol +
                        settings.rel_tol * std::max(std::abs(y[d]), std::abs(acc5));
      const double e = std::abs(acc5 - acc4) / sc;
      err = std::max(err, e);
    }

    if (err <= 1.0) {
      t += h;
      y = std::move(y5);
      k[0] = k[6];  // FSAL
      State snap = unpack(config, y, t);
      check_singularities(config, snap);
      while (next_sample < sample_times.size() &&
             sample_times[next_sample] <= t + 1e-15 * hmin_scale) {
        snap.t = sample_times[next_sample];
        out.push_back(snap);
        ++next_sample;
      }
    }
    const double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(fac, 0.2, 5.0);
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Configuration& config,
                          const std::vector<State>& samples) {
  const std::size_t n = config.size();
  os << "t";
  for (std::size_t i = 0; i < n; ++i) os << ",re_z" << i + 1 << ",im_z" << i + 1;
  os << ",energy,min_pairwise_distance\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (const auto& s : samples) {
    put(s.t);
    for (std::size_t i = 0; i < n; ++i) {
      os << ',';
      put(s.positions[i].real());
      os << ',';
      put(s.positions[i].imag());
    }
    os << ',';
    put(total_energy(config, s));
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        dmin = std::min(dmin, geodesic_distance(s.positions[i], s.positions[j]));
    os << ',';
    put(n > 1 ? dmin : std::numeric_limits<double>::quiet_NaN());
    os << '\n';
  }
}

}  // namespace nbody
