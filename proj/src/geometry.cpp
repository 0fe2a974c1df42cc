#include "nbody/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace nbody {

double geodesic_cos(Complex zk, Complex zj) {
  const double rk2 = std::norm(zk);
  const double rj2 = std::norm(zj);
  const double num = 4.0 * (zk * std::conj(zj)).real() + (rk2 - 1.0) * (rj2 - 1.0);
  const double den = (rk2 + 1.0) * (rj2 + 1.0);
  return std::clamp(num / den, -1.0, 1.0);
}

double geodesic_distance(Complex zk, Complex zj) {
  return std::acos(geodesic_cos(zk, zj));
}

namespace {

// cot(d_ij) without the arccos round-trip. The factorization
//   p sin d = 2 |z_i - z_j| |1 + z_i conj(z_j)|,   p = (r_i^2+1)(r_j^2+1)
// is exact at both singular sets (coincident and antipodal points), unlike
// sqrt(1 - cos^2 d) which cancels there.
double pair_cot(Complex zi, Complex zj, int i, int j) {
  const double ri2 = std::norm(zi), rj2 = std::norm(zj);
  const double num = 4.0 * (zi * std::conj(zj)).real() + (ri2 - 1.0) * (rj2 - 1.0);
  const double half_p_sin = std::sqrt(std::norm(zi - zj) * std::norm(1.0 + zi * std::conj(zj)));
  const double p = (ri2 + 1.0) * (rj2 + 1.0);
  if (2.0 * half_p_sin < kSingularSinTol * p) throw SingularPair(i, j);
  return num / (2.0 * half_p_sin);
}

}  // namespace

double potential(const Configuration& config) {
  const auto& b = config.bodies;
  double u = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      u += b[i].mass * b[j].mass *
           pair_cot(b[i].z, b[j].z, static_cast<int>(i), static_cast<int>(j));
  return u;
}

Complex potential_gradient_conj(const Configuration& config, std::size_t i) {
  const auto& b = config.bodies;
  const Complex zi = b[i].z;
  const double ri2 = std::norm(zi);
  Complex g{0.0, 0.0};
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j == i) continue;
    const Complex zj = b[j].z;
    const double rj2 = std::norm(zj);
    const double p = (ri2 + 1.0) * (rj2 + 1.0);
    // T_ij = p^2 sin^2(d) = 4 |z_i - z_j|^2 |1 + z_i conj(z_j)|^2, cancellation-free
    const double t = 4.0 * std::norm(zi - zj) * std::norm(1.0 + zi * std::conj(zj));
    if (t <= kSingularSinTol * kSingularSinTol * p * p)
      throw SingularPair(static_cast<int>(i), static_cast<int>(j));
    g += 2.0 * b[i].mass * b[j].mass * (1.0 + ri2) * (1.0 + rj2) * (1.0 + rj2) *
         (1.0 + zi * std::conj(zj)) * (zj - zi) / (t * std::sqrt(t));
  }
  return g;
}

}  // namespace nbody
