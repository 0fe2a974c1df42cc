#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nbody/family5.hpp"

namespace nbody {

/// Position regimes of the symmetric collinear 7-body problem
/// (pair radii 0 < x < y < z) relative to the geodesic circle.
enum class SevenBodyCase {
  AllInside,                    // x < y < z < 1: nonexistence
  AllOutside,                   // 1 < x
  InnerPairInsideProductBelow,  // x < 1 < y, z < 1/x: nonexistence
  InnerPairInsideMid,           // x < 1 < y, y < 1/x < z
  InnerPairInsideProductAbove,  // x < 1 < y, 1/x < y
  TwoPairsInsideBelow,          // x < y < 1 < z < 1/y: nonexistence
  TwoPairsInsideMid,            // x < y < 1, 1/y < z < 1/x
  TwoPairsInsideAbove,          // x < y < 1, 1/x < z
  Unlisted,
};

const char* to_string(SevenBodyCase c);
bool case_nonexistence(SevenBodyCase c);
bool case_has_coefficients(SevenBodyCase c);

SevenBodyCase classify7(double x, double y, double z);

/// The per-case linear-in-masses structure A_i = a_i*mu + b_i*M + c_i*m of
/// the reduced condition system. Printed per-case sign patterns are audited;
/// violations are reported, not hidden (positions near a regime boundary can
/// break the pattern while the system itself stays perfectly usable).
struct CoefficientSystem {
  SevenBodyCase case_id;
  std::array<double, 3> A, a, b, c;
  std::vector<std::string> sign_violations;
};

CoefficientSystem coefficient_system(double x, double y, double z);

struct MassSolution7 {
  double mu, M, m;
  double residual_max;  // on the three reduced equations
  bool positive;
};

/// Exact 3x3 solve of A = a*mu + b*M + c*m.
MassSolution7 solve_masses_exact7(double x, double y, double z);

struct ScanPoint {
  double value;  // scanned coordinate
  double x, y, z;
  MassSolution7 solution;
};

/// Scans one coordinate over [lo, hi] on a geometric grid, solving the
/// exact 3x3 at every admissible point of the requested case. Returns the
/// points with strictly positive masses and residual < 1e-10; empty is a
/// reportable outcome, not an error.
std::vector<ScanPoint> scan7(SevenBodyCase expected, char scan_coord, double fixed1,
                             double fixed2, double lo, double hi, int points);

/// The per-case existence prescription: scan the free coordinate toward the
/// regime feature that makes the aggregated argument work (y -> z for
/// AllOutside, y -> 1/x for the inner-pair cases, z -> 1/y or z large for
/// the two-pair cases).
std::vector<ScanPoint> paper_existence_search(double fixed1, double fixed2, SevenBodyCase c,
                                              int points = 1000);

NonexistenceWitness nonexistence_witness7(double x, double y, double z);

/// 6-body corollary (mu = 0, pairs +-x, +-y, +-z with masses 1, M, m).
struct Corollary6ScanPoint {
  double y_or_z;
  double M, m;
  double residual_max;   // over all three reduced equations
  double aggregated;     // the summed-equation check at the solution
  bool positive;
};

struct Corollary6Verdict {
  enum class Kind { Nonexistence, ExistenceSearch, NotCovered } kind;
  std::optional<NonexistenceWitness> witness;
  std::vector<Corollary6ScanPoint> certified;  // positive, residual < 1e-10
  int scanned = 0;
};

Corollary6Verdict corollary_6body(double x, double y, double z);

// Lemma for the AllOutside first equation: A1(x) < 0 for x > 1.
double lemma4_a1(double x);

}  // namespace nbody
