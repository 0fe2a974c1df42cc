#include "nbody/family5.hpp"

#include <cmath>

namespace nbody {

const char* to_string(FiveBodyCase c) {
  switch (c) {
    case FiveBodyCase::BothInside: return "BothInside";
    case FiveBodyCase::BothOutside: return "BothOutside";
    case FiveBodyCase::StraddleProductBelow: return "Straddle_ProductBelow";
    case FiveBodyCase::StraddleProductAbove: return "Straddle_ProductAbove";
  }
  return "?";
}

bool case_solvable(FiveBodyCase c) {
  return c == FiveBodyCase::BothOutside || c == FiveBodyCase::StraddleProductAbove;
}

FiveBodyCase classify5(double a, double r) {
  if (!(a > 0.0) || !(r > 0.0)) throw Inadmissible("positions must be positive");
  if (!(a < r)) throw Inadmissible("need a < r");
  if (std::abs(a - r) < kBoundaryGuard) throw Inadmissible("a = r is singular");
  if (std::abs(a * r - 1.0) < kBoundaryGuard) throw Inadmissible("ar = 1 is singular");
  if (r < 1.0) return FiveBodyCase::BothInside;
  if (a > 1.0) return FiveBodyCase::BothOutside;
  return a * r < 1.0 ? FiveBodyCase::StraddleProductBelow : FiveBodyCase::StraddleProductAbove;
}

namespace {

double sq(double v) { return v * v; }

ReducedMassSystem system5(double a, double r) { return reduced_mass_system({a, r}, true); }

double residual_max5(const ReducedMassSystem& s, double mu, double m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    worst = std::max(worst,
                     std::abs(s.constant[i] + s.mu_coeff[i] * mu + s.pair_coeff[i][0] * m));
  return worst;
}

}  // namespace

AggregatedCoefficients aggregated_coefficients(double a, double r) {
  const FiveBodyCase c = classify5(a, r);
  const double a2 = a * a, r2 = r * r;
  AggregatedCoefficients out;
  out.case_id = c;
  out.mu_coeff = -0.5 * (1.0 / a2 + 1.0 / r2);
  if (c == FiveBodyCase::BothOutside) {
    out.lhs = (a2 - 1.0) * a / sq(sq(a2 + 1.0)) + (r2 - 1.0) * r / sq(sq(1.0 + r2)) +
              0.5 * sq(a2 + 1.0) *
                  (-0.25 / (a2 * sq(a2 - 1.0)) + 1.0 / (sq(a * r + 1.0) * sq(a - r)) -
                   1.0 / (sq(r + a) * sq(a * r - 1.0)));
    out.m_coeff = 0.5 * sq(r2 + 1.0) *
                  (1.0 / (sq(a * r + 1.0) * sq(a - r)) + 1.0 / (sq(r + a) * sq(a * r - 1.0)) +
                   0.25 / (r2 * sq(r2 - 1.0)));
  } else if (c == FiveBodyCase::StraddleProductAbove) {
    out.lhs = -(1.0 - a2) * a / sq(sq(1.0 + a2)) + 0.125 * sq(a2 + 1.0) / (a2 * sq(1.0 - a2)) +
              (r2 - 1.0) * r / sq(sq(1.0 + r2)) -
              2.0 * a * r * sq(a2 + 1.0) * (r2 - 1.0) * (1.0 - a2) /
                  (sq(a2 * r2 - 1.0) * sq(a2 - r2));
    out.m_coeff = 0.5 * sq(r2 + 1.0) *
                      (1.0 / (sq(a * r + 1.0) * sq(a - r)) + 1.0 / (sq(r + a) * sq(a * r - 1.0))) +
                  0.125 * sq(r2 + 1.0) / (r2 * sq(r2 - 1.0));
  } else {
    throw WrongCase("no aggregated coefficients for nonexistence cases");
  }
  if (!(out.mu_coeff < 0.0)) throw SignAssertionFailed("aggregated mu coefficient not < 0");
  if (!(out.m_coeff > 0.0)) throw SignAssertionFailed("aggregated m coefficient not > 0");
  return out;
}

MassSolution5 solve_masses_paper(double a, double r, double mu) {
  if (!(mu > 0.0)) throw MassNonpositive("mu must be positive");
  const AggregatedCoefficients agg = aggregated_coefficients(a, r);
  const double num = agg.lhs - agg.mu_coeff * mu;
  if (!(num > 0.0))
    throw MassNonpositive("mu does not satisfy lhs/mu_coeff < mu; aggregated m would be <= 0");
  MassSolution5 sol;
  sol.mu = mu;
  sol.m = num / agg.m_coeff;
  sol.method = SolveMethod::PaperAggregatedFamily;
  sol.residual_max = residual_max5(system5(a, r), sol.mu, sol.m);
  sol.positive = sol.mu > 0.0 && sol.m > 0.0;
  return sol;
}

MassSolution5 solve_masses_exact(double a, double r) {
  if (!case_solvable(classify5(a, r))) throw WrongCase("classification admits no equilibria");
  const ReducedMassSystem s = system5(a, r);
  // Cramer on [mu_coeff pair_coeff] [mu m]' = -constant.
  const double a11 = s.mu_coeff[0], a12 = s.pair_coeff[0][0];
  const double a21 = s.mu_coeff[1], a22 = s.pair_coeff[1][0];
  const double det = a11 * a22 - a12 * a21;
  const double scale = std::max({std::abs(a11) * std::abs(a22), std::abs(a12) * std::abs(a21), 1.0});
  if (std::abs(det) < 1e-14 * scale) throw SingularSystem("reduced 2x2 system is singular");
  MassSolution5 sol;
  sol.mu = (-s.constant[0] * a22 + s.constant[1] * a12) / det;
  sol.m = (-s.constant[1] * a11 + s.constant[0] * a21) / det;
  sol.method = SolveMethod::ExactLinearSolve;
  sol.residual_max = residual_max5(s, sol.mu, sol.m);
  sol.positive = sol.mu > 0.0 && sol.m > 0.0;
  return sol;
}

namespace {

NonexistenceWitness witness_from(const ReducedMassSystem& s, std::size_t eq,
                                 const std::string& label) {
  NonexistenceWitness w;
  w.equation = label;
  w.lhs = s.constant[eq];
  if (s.has_origin) w.mass_coeffs.push_back(s.mu_coeff[eq]);
  for (double c : s.pair_coeff[eq]) w.mass_coeffs.push_back(c);
  w.rhs_bound = 0.0;
  w.certified = w.lhs > 0.0;
  for (double c : w.mass_coeffs) w.certified = w.certified && c > 0.0;
  return w;
}

}  // namespace

NonexistenceWitness nonexistence_witness5(double a, double r) {
  const FiveBodyCase c = classify5(a, r);
  const ReducedMassSystem s = system5(a, r);
  if (c == FiveBodyCase::BothInside) return witness_from(s, 1, "outer pair (r)");
  if (c == FiveBodyCase::StraddleProductBelow) return witness_from(s, 0, "inner pair (a)");
  throw WrongCase("existence is possible in this regime");
}

Corollary4Verdict corollary_4body(double a, double r) {
  const FiveBodyCase c = classify5(a, r);
  Corollary4Verdict v;
  if (c != FiveBodyCase::BothInside && c != FiveBodyCase::StraddleProductBelow) {
    v.covered = false;
    return v;
  }
  const ReducedMassSystem s = reduced_mass_system({a, r}, false);
  v.covered = true;
  v.witness = witness_from(s, c == FiveBodyCase::BothInside ? 1 : 0,
                           c == FiveBodyCase::BothInside ? "outer pair (r)" : "inner pair (a)");
  return v;
}

double lemma2_expression(double a, double r) {
  const double a2 = a * a, r2 = r * r;
  return 0.5 * sq(a2 + 1.0) *
             (1.0 / (sq(a * r + 1.0) * sq(a - r)) + 1.0 / (sq(r + a) * sq(a * r - 1.0))) -
         (1.0 - r2) * r / sq(sq(1.0 + r2));
}

double lemma2_h(double a, double r) {
  const double a2 = a * a, r2 = r * r;
  return 0.5 * (a2 + 1.0) / (sq(a * r - 1.0) * sq(a + r)) - (1.0 - r2) * r / sq(sq(1.0 + r2));
}

double lemma5_expression(double x) {
  const double x2 = x * x;
  return -(1.0 - x2) * x / sq(sq(1.0 + x2)) + 0.125 * sq(x2 + 1.0) / (sq(x2 - 1.0) * x2);
}

}  // namespace nbody
