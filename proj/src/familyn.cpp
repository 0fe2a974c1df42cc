#include "nbody/familyn.hpp"

#include <cmath>

namespace nbody {

namespace {

NonexistenceWitness witness_from(const ReducedMassSystem& r, std::size_t eq,
                                 std::string label) {
  NonexistenceWitness w;
  w.equation = std::move(label);
  w.lhs = r.constant[eq];
  w.mass_coeffs.push_back(r.mu_coeff[eq]);
  for (double c : r.pair_coeff[eq]) w.mass_coeffs.push_back(c);
  w.rhs_bound = 0.0;
  w.certified = w.lhs > 0.0;
  for (double v : w.mass_coeffs) w.certified = w.certified && v > 0.0;
  return w;
}

}  // namespace

GeneralVerdict nonexistence_general(const std::vector<double>& radii) {
  const std::size_t k = radii.size();
  if (k == 0) throw Inadmissible("need at least one pair");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev + kBoundaryGuard)) throw Inadmissible("radii must be increasing and separated");
    prev = r;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (std::abs(radii[i] - 1.0) < kBoundaryGuard)
      throw Inadmissible("radius on the regime boundary |z| = 1");
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(radii[i] * radii[j] - 1.0) < kBoundaryGuard)
        throw Inadmissible("pair product = 1 is singular");
  }

  GeneralVerdict v;
  const double r1 = radii.front();
  const double rk = radii.back();

  if (rk < 1.0) {
    v.kind = GeneralVerdict::Kind::Nonexistence;
    v.regime = "all pairs inside";
    v.witness = witness_from(reduced_mass_system(radii, true), k - 1, "outermost pair");
    return v;
  }
  if (k >= 2 && r1 < 1.0 && radii[1] > 1.0 && r1 * rk < 1.0) {
    v.kind = GeneralVerdict::Kind::Nonexistence;
    v.regime = "only innermost pair inside, products below one";
    v.witness = witness_from(reduced_mass_system(radii, true), 0, "innermost pair");
    return v;
  }
  if (k >= 2 && radii[k - 2] < 1.0 && rk > 1.0 && radii[k - 2] * rk < 1.0) {
    v.kind = GeneralVerdict::Kind::Nonexistence;
    v.regime = "only outermost pair outside, products below one";
    v.witness =
        witness_from(reduced_mass_system(radii, true), k - 2, "second outermost pair");
    return v;
  }
  return v;
}

}  // namespace nbody
