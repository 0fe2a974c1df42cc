#pragma once

#include <complex>
#include <vector>

#include "nbody/errors.hpp"

namespace nbody {

using Complex = std::complex<double>;

/// One particle: positive mass and a finite stereographic coordinate.
struct Body {
  double mass;
  Complex z;
};

/// An ordered list of bodies on the stereographic plane (curvature +1).
/// Pairwise positions must be distinct and no pair may sit on the
/// antipodal-singular set of the force law.
struct Configuration {
  std::vector<Body> bodies;

  std::size_t size() const { return bodies.size(); }
};

// A pair is treated as singular when |sin d| < this.
inline constexpr double kSingularSinTol = 1e-13;

/// cos of the geodesic distance between two stereographic points, clamped
/// to [-1, 1].
double geodesic_cos(Complex zk, Complex zj);

/// Geodesic distance in [0, pi].
double geodesic_distance(Complex zk, Complex zj);

/// Cotangent pair potential U = sum_{i<j} m_i m_j cot(d_ij).
/// Throws SingularPair if some pair is at distance 0 or pi.
double potential(const Configuration& config);

/// dU/dconj(z_i), the Wirtinger gradient of the potential with respect to
/// the conjugate coordinate of body i (includes the m_i factor).
Complex potential_gradient_conj(const Configuration& config, std::size_t i);

}  // namespace nbody
