#include "nbody/re_conditions.hpp"

#include <algorithm>
#include <cmath>

namespace nbody {

namespace {

PairKernel kernel_unchecked(Complex zi, Complex zj, double mj) {
  const double ri2 = std::norm(zi);
  const double rj2 = std::norm(zj);
  const double num = 4.0 * (zi * std::conj(zj)).real() + (ri2 - 1.0) * (rj2 - 1.0);
  const double p = (ri2 + 1.0) * (rj2 + 1.0);
  PairKernel k;
  k.T = (p - num) * (p + num);
  k.numerator = mj * (rj2 + 1.0) * (rj2 + 1.0) * (1.0 + zi * std::conj(zj)) * (zj - zi);
  return k;
}

bool kernel_singular(Complex zi, Complex zj, double T) {
  const double p = (std::norm(zi) + 1.0) * (std::norm(zj) + 1.0);
  return T <= kAntipodalTol * p * p;
}

}  // namespace

PairKernel pair_kernel(Complex zi, Complex zj, double mj) {
  PairKernel k = kernel_unchecked(zi, zj, mj);
  if (kernel_singular(zi, zj, k.T)) throw AntipodalSingularity(0, 1);
  return k;
}

ConditionResidual condition_residual(const Configuration& config) {
  const auto& b = config.bodies;
  ConditionResidual res;
  res.per_body.reserve(b.size());
  res.max_abs = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Complex zi = b[i].z;
    const double ri2 = std::norm(zi);
    const double q = 1.0 + ri2;
    Complex sum = (1.0 - ri2) * zi / (4.0 * q * q * q * q);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j == i) continue;
      const PairKernel k = kernel_unchecked(zi, b[j].z, b[j].mass);
      if (kernel_singular(zi, b[j].z, k.T))
        throw AntipodalSingularity(static_cast<int>(i), static_cast<int>(j));
      sum += k.numerator / (k.T * std::sqrt(k.T));
    }
    res.per_body.push_back(sum);
    res.max_abs = std::max(res.max_abs, std::abs(sum));
  }
  return res;
}

std::vector<double> collinear_reduce(const Configuration& config) {
  const auto& b = config.bodies;
  // All positions must be exactly real.
  double scale = 1.0;
  for (const auto& body : b) scale = std::max(scale, std::abs(body.z));
  for (const auto& body : b)
    if (std::abs(body.z.imag()) > 1e-14 * scale)
      throw NotCollinearSymmetric("positions are not all real");

  // Match bodies into +-pairs with equal masses, optional origin body.
  std::vector<std::size_t> pos;  // representatives with positive coordinate
  std::vector<bool> used(b.size(), false);
  int origin_count = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (used[i]) continue;
    const double x = b[i].z.real();
    if (x == 0.0) {
      ++origin_count;
      used[i] = true;
      continue;
    }
    bool matched = false;
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (used[j]) continue;
      if (b[j].z.real() == -x && b[j].mass == b[i].mass) {
        used[i] = used[j] = true;
        pos.push_back(x > 0.0 ? i : j);
        matched = true;
        break;
      }
    }
    if (!matched) throw NotCollinearSymmetric("body without mirror partner");
  }
  if (origin_count > 1) throw NotCollinearSymmetric("more than one origin body");

  std::sort(pos.begin(), pos.end(),
            [&](std::size_t i, std::size_t j) { return b[i].z.real() < b[j].z.real(); });

  const ConditionResidual res = condition_residual(config);
  std::vector<double> eqs;
  eqs.reserve(pos.size());
  for (std::size_t i : pos) eqs.push_back(-4.0 * res.per_body[i].real());
  return eqs;
}

Configuration symmetric_collinear(const std::vector<double>& radii,
                                  const std::vector<double>& pair_masses,
                                  double mu, bool has_origin) {
  Configuration c;
  if (pair_masses.size() != radii.size())
    throw Inadmissible("one mass per pair radius required");
  if (has_origin) c.bodies.push_back({mu, {0.0, 0.0}});
  for (std::size_t k = 0; k < radii.size(); ++k) {
    c.bodies.push_back({pair_masses[k], {radii[k], 0.0}});
    c.bodies.push_back({pair_masses[k], {-radii[k], 0.0}});
  }
  return c;
}

ReducedMassSystem reduced_mass_system(const std::vector<double>& radii, bool has_origin) {
  const std::size_t k = radii.size();
  const std::size_t nfree = k - 1;
  std::vector<double> base(k, 0.0);
  base[0] = 1.0;  // innermost pair mass is the unit

  // The reduced equations are linear in the free masses; evaluating at the
  // base point and at unit vectors pins every coefficient exactly.
  auto eval = [&](double mu, const std::vector<double>& pm) {
    return collinear_reduce(symmetric_collinear(radii, pm, mu, has_origin));
  };

  ReducedMassSystem sys;
  sys.has_origin = has_origin;
  sys.constant = eval(0.0, base);
  if (has_origin) {
    const auto withmu = eval(1.0, base);
    sys.mu_coeff.resize(k);
    for (std::size_t i = 0; i < k; ++i) sys.mu_coeff[i] = withmu[i] - sys.constant[i];
  }
  sys.pair_coeff.assign(k, std::vector<double>(nfree, 0.0));
  for (std::size_t j = 0; j < nfree; ++j) {
    auto pm = base;
    pm[j + 1] = 1.0;
    const auto withm = eval(0.0, pm);
    for (std::size_t i = 0; i < k; ++i) sys.pair_coeff[i][j] = withm[i] - sys.constant[i];
  }
  return sys;
}

}  // namespace nbody
