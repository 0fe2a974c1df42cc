#pragma once

#include <iosfwd>
#include <vector>

#include "nbody/geometry.hpp"

namespace nbody {

/// Positions and velocities of every body at time t.
struct State {
  std::vector<Complex> positions;
  std::vector<Complex> velocities;
  double t = 0.0;
};

struct IntegrationSettings {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = 1e-2;
  double t_final = 1.0;
};

/// Right-hand side of the second-order equations of motion:
///   zdd_i = 2 conj(z_i) zd_i^2 / (1+|z_i|^2) + (1+|z_i|^2)^2 / (2 m_i) * dU/dconj(z_i).
/// Masses come from config; positions from state.
std::vector<Complex> acceleration(const Configuration& config, const State& state);

/// T = 1/2 sum_i m_i * 4 |zd_i|^2 / (1+|z_i|^2)^2.
double kinetic_energy(const Configuration& config, const State& state);

/// Conserved total energy T - U.
double total_energy(const Configuration& config, const State& state);

/// Adaptive Dormand-Prince 5(4) integration, sampled at the requested
/// output times (must be increasing, within [state0.t, settings.t_final]).
/// Steps are clipped to hit each sample time exactly.
std::vector<State> integrate(const Configuration& config, const State& state0,
                             const IntegrationSettings& settings,
                             const std::vector<double>& sample_times);

/// State with the config's positions and rigid-rotation velocities
/// zd_i = i * omega * z_i.
State rigid_rotation_state(const Configuration& config, double omega);

/// CSV export: t, re/im of each body, energy, min pairwise geodesic distance.
void write_trajectory_csv(std::ostream& os, const Configuration& config,
                          const std::vector<State>& samples);

}  // namespace nbody
