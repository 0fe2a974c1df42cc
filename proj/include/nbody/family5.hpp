#pragma once

#include <string>
#include <vector>

#include "nbody/re_conditions.hpp"

namespace nbody {

/// Regimes of the symmetric collinear 5-body positions (a, r), 0 < a < r,
/// relative to the geodesic circle |z| = 1.
enum class FiveBodyCase {
  BothInside,             // a < r < 1: no relative equilibria
  BothOutside,            // 1 < a < r
  StraddleProductBelow,   // a < 1 < r, ar < 1: no relative equilibria
  StraddleProductAbove,   // a < 1 < r, ar > 1
};

const char* to_string(FiveBodyCase c);

/// Whether the classification admits relative equilibria at all.
bool case_solvable(FiveBodyCase c);

// Positions within this band of a = r or ar = 1 are rejected as
// Inadmissible (regime boundaries are singular for the condition system).
inline constexpr double kBoundaryGuard = 1e-6;

FiveBodyCase classify5(double a, double r);

/// Coefficients of the aggregated (summed) equation: A = B*mu + C*m for
/// BothOutside, F1 = F2*mu + F3*m for StraddleProductAbove. B, F2 < 0 and
/// C, F3 > 0 always.
struct AggregatedCoefficients {
  FiveBodyCase case_id;
  double lhs;        // A or F1
  double mu_coeff;   // B or F2
  double m_coeff;    // C or F3
};

AggregatedCoefficients aggregated_coefficients(double a, double r);

enum class SolveMethod { ExactLinearSolve, PaperAggregatedFamily };

struct MassSolution5 {
  double mu;
  double m;
  SolveMethod method;
  double residual_max;  // back-substituted into the full reduced system
  bool positive;
};

/// One-parameter family satisfying the aggregated equation only:
/// m = (lhs - mu_coeff*mu)/m_coeff, requires lhs - mu_coeff*mu > 0.
/// residual_max is reported against the full reduced system and is
/// generally nonzero.
MassSolution5 solve_masses_paper(double a, double r, double mu);

/// Exact 2x2 solve of the full reduced system in (mu, m).
MassSolution5 solve_masses_exact(double a, double r);

/// Certificate that one reduced equation has no positive-mass solution:
/// the equation reads lhs + mu_coeff*mu + sum coeff_j*m_j = 0 with lhs > 0
/// and every mass coefficient > 0, so the left side is bounded below by
/// lhs > 0 for positive masses.
struct NonexistenceWitness {
  std::string equation;           // which body equation is violated
  double lhs;                     // strictly positive constant part
  std::vector<double> mass_coeffs;  // all strictly positive
  double rhs_bound;               // sup of -(mass terms) over positive masses: 0
  bool certified;                 // all sign checks passed
};

NonexistenceWitness nonexistence_witness5(double a, double r);

/// 4-body corollary (mu = 0): nonexistence for a < r < 1 and for
/// a < 1 < r with ar < 1. covered == false means the hypotheses do not
/// apply and no claim is made.
struct Corollary4Verdict {
  bool covered;
  NonexistenceWitness witness;
};

Corollary4Verdict corollary_4body(double a, double r);

// Lemma expressions used by the nonexistence proofs (exposed for audits).
double lemma2_expression(double a, double r);   // > 0 on 0 < a < r < 1
double lemma2_h(double a, double r);            // minorant H
double lemma5_expression(double x);             // > 0 on x in (0, 1)

}  // namespace nbody
