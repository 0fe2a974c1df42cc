#pragma once

#include <vector>

#include "nbody/geometry.hpp"

namespace nbody {

// Antipodal tolerance: T_ij <= kAntipodalTol * ((r_i^2+1)(r_j^2+1))^2 is singular.
inline constexpr double kAntipodalTol = 1e-12;

/// Kernel of one pair term of the equilibrium condition system.
struct PairKernel {
  double T;           // (r_i^2+1)^2(r_j^2+1)^2 - [2(z_i conj(z_j) + z_j conj(z_i)) + (r_i^2-1)(r_j^2-1)]^2
  Complex numerator;  // m_j (r_j^2+1)^2 (1 + z_i conj(z_j)) (z_j - z_i)
};

PairKernel pair_kernel(Complex zi, Complex zj, double mj);

/// Per-body left-minus-right of the condition system. Zero iff the
/// configuration with its masses is a relative equilibrium.
struct ConditionResidual {
  std::vector<Complex> per_body;
  double max_abs;
};

ConditionResidual condition_residual(const Configuration& config);

/// Specializes the condition system to a real collinear symmetric
/// configuration (mirror pairs +-p, optional origin body). Returns one real
/// scalar equation per positive-coordinate representative, ordered by
/// radius; the identically-zero origin equation is omitted. Sign convention
/// matches the per-case printed reduced systems (each value is -4x the real
/// part of the per-body residual).
std::vector<double> collinear_reduce(const Configuration& config);

/// The collinear reduced system decomposed by linearity in the free masses
/// of a symmetric family: origin mass mu (optional), innermost pair fixed at
/// mass 1, remaining pair masses free. Equation k (one per pair, ascending
/// radius) reads:
///   constant[k] + mu_coeff[k]*mu + sum_j pair_coeff[k][j]*m_j = 0.
struct ReducedMassSystem {
  std::vector<double> constant;
  std::vector<double> mu_coeff;                  // empty when no origin body
  std::vector<std::vector<double>> pair_coeff;   // [equation][free pair]
  bool has_origin;
};

/// radii must be strictly increasing positive pair radii; has_origin adds a
/// central body carrying the mu unknown.
ReducedMassSystem reduced_mass_system(const std::vector<double>& radii, bool has_origin);

/// Builds the symmetric collinear configuration (origin body first when
/// present, then +-radii pairs ascending) for given mass assignments.
/// pair_masses[0] belongs to the innermost pair.
Configuration symmetric_collinear(const std::vector<double>& radii,
                                  const std::vector<double>& pair_masses,
                                  double mu, bool has_origin);

}  // namespace nbody
