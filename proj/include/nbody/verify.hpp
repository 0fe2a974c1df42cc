#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbody/dynamics.hpp"
#include "nbody/geometry.hpp"

namespace nbody {

struct OmegaFit {
  double omega = 0.0;        // mean fitted angular speed
  double consistency = 0.0;  // max relative spread of omega across bodies
  std::vector<double> per_body_omega_sq;
};

// Recovers the rotation rate from the per-body centripetal balance under
// w(t) = e^{i omega t} z. Bodies at the origin or on |z| = 1 carry no radial
// information and are skipped.
OmegaFit fit_angular_velocity(const Configuration& config);

struct DriftReport {
  double omega = 0.0;
  double consistency = 0.0;
  double max_distance_drift = 0.0;  // relative, over all pairs and samples
  double max_radius_drift = 0.0;
  double energy_drift = 0.0;  // relative
  double periods = 0.0;
  bool pass = false;
};

DriftReport rigid_rotation_check(const Configuration& config, double periods, double tol,
                                 const IntegrationSettings& settings = {});

struct LemmaAudit {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double min_margin = 0.0;  // positive iff the claimed inequality held everywhere
  bool pass = false;
};

// name is one of "lema2", "lemma5", "lemma4"
LemmaAudit lemma_audit(const std::string& name, std::uint64_t samples, std::uint64_t seed);

struct MeasureEstimate {
  std::string family;
  std::vector<double> lo, hi;  // sampling box
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double fraction = 0.0;
  double wilson_lo = 0.0, wilson_hi = 0.0;  // 95% confidence interval
};

// Fraction of box points whose exact solve yields strictly positive masses
// with certified residual. family is "five" (2-d box in (a, r)) or "seven"
// (3-d box in (x, y, z)); unordered points count as failures.
MeasureEstimate measure_estimate(const std::string& family, const std::vector<double>& lo,
                                 const std::vector<double>& hi, std::uint64_t samples,
                                 std::uint64_t seed);

}  // namespace nbody
