#pragma once

#include <string>
#include <vector>

#include "nbody/family5.hpp"
#include "nbody/re_conditions.hpp"

namespace nbody {

// Symmetric collinear family with an odd number of bodies: one body at the
// origin plus k reflected pairs at radii 0 < r_1 < ... < r_k on a common
// geodesic. Nonexistence of relative equilibria with positive masses is
// certified from a single reduced equation whose constant term and mass
// coefficients are all positive.

struct GeneralVerdict {
  enum class Kind { Nonexistence, NotCovered };
  Kind kind = Kind::NotCovered;
  std::string regime;  // which covered regime matched, empty if NotCovered
  NonexistenceWitness witness;
};

// radii must be strictly increasing and positive; n = 2 k + 1 bodies.
GeneralVerdict nonexistence_general(const std::vector<double>& radii);

}  // namespace nbody
