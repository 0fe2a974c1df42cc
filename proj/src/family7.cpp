#include "nbody/family7.hpp"

#include <cmath>

namespace nbody {

const char* to_string(SevenBodyCase c) {
  switch (c) {
    case SevenBodyCase::AllInside: return "AllInside";
    case SevenBodyCase::AllOutside: return "AllOutside";
    case SevenBodyCase::InnerPairInsideProductBelow: return "InnerPairInside_ProductBelow";
    case SevenBodyCase::InnerPairInsideMid: return "InnerPairInside_Mid";
    case SevenBodyCase::InnerPairInsideProductAbove: return "InnerPairInside_ProductAbove";
    case SevenBodyCase::TwoPairsInsideBelow: return "TwoPairsInside_Below";
    case SevenBodyCase::TwoPairsInsideMid: return "TwoPairsInside_Mid";
    case SevenBodyCase::TwoPairsInsideAbove: return "TwoPairsInside_Above";
    case SevenBodyCase::Unlisted: return "Unlisted";
  }
  return "?";
}

bool case_nonexistence(SevenBodyCase c) {
  return c == SevenBodyCase::AllInside || c == SevenBodyCase::InnerPairInsideProductBelow ||
         c == SevenBodyCase::TwoPairsInsideBelow;
}

bool case_has_coefficients(SevenBodyCase c) {
  return c == SevenBodyCase::AllOutside || c == SevenBodyCase::InnerPairInsideMid ||
         c == SevenBodyCase::InnerPairInsideProductAbove ||
         c == SevenBodyCase::TwoPairsInsideMid || c == SevenBodyCase::TwoPairsInsideAbove;
}

SevenBodyCase classify7(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw Inadmissible("positions must be positive");
  if (!(x < y && y < z)) throw Inadmissible("need x < y < z");
  const double guard = kBoundaryGuard;
  if (y - x < guard || z - y < guard) throw Inadmissible("equal radii are singular");
  for (double p : {x * y, x * z, y * z})
    if (std::abs(p - 1.0) < guard) throw Inadmissible("pair product = 1 is singular");
  for (double v : {x, y, z})
    if (std::abs(v - 1.0) < guard)
      throw Inadmissible("radius on the regime boundary |z| = 1");
  if (z < 1.0) return SevenBodyCase::AllInside;
  if (x > 1.0) return SevenBodyCase::AllOutside;
  if (y > 1.0) {
    // x inside, y and z outside
    if (x * y > 1.0) return SevenBodyCase::InnerPairInsideProductAbove;
    if (x * z < 1.0) return SevenBodyCase::InnerPairInsideProductBelow;
    return SevenBodyCase::InnerPairInsideMid;
  }
  if (y < 1.0 && z > 1.0) {
    // x, y inside, z outside
    if (y * z < 1.0) return SevenBodyCase::TwoPairsInsideBelow;
    if (x * z < 1.0) return SevenBodyCase::TwoPairsInsideMid;
    return SevenBodyCase::TwoPairsInsideAbove;
  }
  return SevenBodyCase::Unlisted;  // y or z exactly on the circle, etc.
}

namespace {

void audit(CoefficientSystem& s, const char* name, double v, bool expect_negative) {
  const bool ok = expect_negative ? v < 0.0 : v > 0.0;
  if (!ok)
    s.sign_violations.push_back(std::string(name) + (expect_negative ? " not < 0" : " not > 0"));
}

}  // namespace

CoefficientSystem coefficient_system(double x, double y, double z) {
  const SevenBodyCase c = classify7(x, y, z);
  if (!case_has_coefficients(c))
    throw WrongCase(std::string("no coefficient system for case ") + to_string(c));

  // Extract by linearity from the condition-system reduction.
  const ReducedMassSystem r = reduced_mass_system({x, y, z}, true);
  CoefficientSystem s;
  s.case_id = c;
  for (int i = 0; i < 3; ++i) {
    s.A[i] = r.constant[i];          // reduced eq: A_i - a_i mu - b_i M - c_i m = 0
    s.a[i] = -r.mu_coeff[i];
    s.b[i] = -r.pair_coeff[i][0];
    s.c[i] = -r.pair_coeff[i][1];
  }

  // a_i = -1/(2 * position_i^2) in every case.
  audit(s, "a1", s.a[0], true);
  audit(s, "a2", s.a[1], true);
  audit(s, "a3", s.a[2], true);
  switch (c) {
    case SevenBodyCase::AllOutside:
      audit(s, "A1", s.A[0], true);
      audit(s, "b1", s.b[0], false);
      audit(s, "b2", s.b[1], false);
      audit(s, "b3", s.b[2], false);
      audit(s, "c1", s.c[0], false);
      audit(s, "c2", s.c[1], false);
      audit(s, "c3", s.c[2], false);
      break;
    case SevenBodyCase::InnerPairInsideMid:
      audit(s, "A1", s.A[0], false);
      audit(s, "A2", s.A[1], false);
      audit(s, "b1", s.b[0], true);
      audit(s, "b2", s.b[1], false);
      audit(s, "b3", s.b[2], true);
      audit(s, "c1", s.c[0], false);
      audit(s, "c2", s.c[1], false);
      audit(s, "c3", s.c[2], false);
      break;
    case SevenBodyCase::InnerPairInsideProductAbove:
      audit(s, "A1", s.A[0], false);
      audit(s, "b1", s.b[0], false);
      audit(s, "b2", s.b[1], false);
      audit(s, "b3", s.b[2], true);
      audit(s, "c1", s.c[0], false);
      audit(s, "c2", s.c[1], false);
      audit(s, "c3", s.c[2], false);
      break;
    case SevenBodyCase::TwoPairsInsideMid:
      audit(s, "A1", s.A[0], false);
      audit(s, "A2", s.A[1], false);
      audit(s, "A3", s.A[2], false);
      audit(s, "b1", s.b[0], false);
      audit(s, "b2", s.b[1], true);
      audit(s, "b3", s.b[2], false);
      audit(s, "c1", s.c[0], true);
      audit(s, "c2", s.c[1], false);
      audit(s, "c3", s.c[2], false);
      break;
    case SevenBodyCase::TwoPairsInsideAbove:
      audit(s, "A1", s.A[0], false);
      audit(s, "A2", s.A[1], false);
      audit(s, "b1", s.b[0], false);
      audit(s, "b2", s.b[1], true);
      audit(s, "b3", s.b[2], false);
      audit(s, "c1", s.c[0], false);
      audit(s, "c2", s.c[1], false);
      audit(s, "c3", s.c[2], false);
      break;
    default:
      break;
  }
  return s;
}

MassSolution7 solve_masses_exact7(double x, double y, double z) {
  const CoefficientSystem s = coefficient_system(x, y, z);
  // Gaussian elimination with partial pivoting on the 3x3.
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = s.a[i];
    m[i][1] = s.b[i];
    m[i][2] = s.c[i];
    m[i][3] = s.A[i];
  }
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int i = col + 1; i < 3; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    if (std::abs(m[piv][col]) < 1e-14 * scale)
      throw SingularSystem("reduced 3x3 system is singular");
    if (piv != col)
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
    for (int i = col + 1; i < 3; ++i) {
      const double f = m[i][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[i][j] -= f * m[col][j];
    }
  }
  double sol[3];
  for (int i = 2; i >= 0; --i) {
    double v = m[i][3];
    for (int j = i + 1; j < 3; ++j) v -= m[i][j] * sol[j];
    sol[i] = v / m[i][i];
  }
  MassSolution7 out;
  out.mu = sol[0];
  out.M = sol[1];
  out.m = sol[2];
  out.residual_max = 0.0;
  for (int i = 0; i < 3; ++i)
    out.residual_max = std::max(
        out.residual_max,
        std::abs(s.A[i] - s.a[i] * out.mu - s.b[i] * out.M - s.c[i] * out.m));
  out.positive = out.mu > 0.0 && out.M > 0.0 && out.m > 0.0;
  return out;
}

std::vector<ScanPoint> scan7(SevenBodyCase expected, char scan_coord, double fixed1,
                             double fixed2, double lo, double hi, int points) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) throw Inadmissible("bad scan grid");
  std::vector<ScanPoint> hits;
  const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
  double v = lo;
  for (int i = 0; i < points; ++i, v *= ratio) {
    double x, y, z;
    switch (scan_coord) {
      case 'x': x = v; y = fixed1; z = fixed2; break;
      case 'y': x = fixed1; y = v; z = fixed2; break;
      case 'z': x = fixed1; y = fixed2; z = v; break;
      default: throw Inadmissible("scan coordinate must be x, y or z");
    }
    try {
      if (classify7(x, y, z) != expected) continue;
      const MassSolution7 sol = solve_masses_exact7(x, y, z);
      if (sol.positive && sol.residual_max < 1e-10) hits.push_back({v, x, y, z, sol});
    } catch (const Error&) {
      // inadmissible or singular grid point: skip, the grid reports only
      // certified solutions
    }
  }
  return hits;
}

std::vector<ScanPoint> paper_existence_search(double fixed1, double fixed2, SevenBodyCase c,
                                              int points) {
  const double g = 10.0 * kBoundaryGuard;
  switch (c) {
    case SevenBodyCase::AllOutside: {
      // fixed (x, z), y close to z from below
      const double x = fixed1, z = fixed2;
      return scan7(c, 'y', x, z, x + 0.875 * (z - x), z - g, points);
    }
    case SevenBodyCase::InnerPairInsideMid: {
      // fixed (x, z), y close to 1/x from below
      const double x = fixed1, inv = 1.0 / fixed1;
      return scan7(c, 'y', x, fixed2, 1.0 + 0.875 * (inv - 1.0), inv - g, points);
    }
    case SevenBodyCase::InnerPairInsideProductAbove: {
      // fixed (x, z), y close to 1/x from above
      const double x = fixed1, z = fixed2, inv = 1.0 / fixed1;
      return scan7(c, 'y', x, z, inv + g, inv + 0.125 * (z - inv), points);
    }
    case SevenBodyCase::TwoPairsInsideMid: {
      // fixed (x, y), z close to 1/y from above
      const double y = fixed2, invy = 1.0 / fixed2, invx = 1.0 / fixed1;
      (void)y;
      return scan7(c, 'z', fixed1, fixed2, invy + g, invy + 0.5 * (invx - invy), points);
    }
    case SevenBodyCase::TwoPairsInsideAbove: {
      // fixed (x, y), z large
      const double lo = std::max(10.0, 2.0 / fixed1);
      return scan7(c, 'z', fixed1, fixed2, lo, 10.0 * lo, points);
    }
    default:
      throw WrongCase("no existence prescription for this case");
  }
}

NonexistenceWitness nonexistence_witness7(double x, double y, double z) {
  const SevenBodyCase c = classify7(x, y, z);
  if (!case_nonexistence(c)) throw WrongCase("existence is possible in this regime");
  const ReducedMassSystem r = reduced_mass_system({x, y, z}, true);

  NonexistenceWitness w;
  std::size_t eq = 0;
  if (c == SevenBodyCase::AllInside) {
    eq = 2;  // outermost pair
    w.equation = "outer pair (z)";
  } else if (c == SevenBodyCase::InnerPairInsideProductBelow) {
    eq = 0;
    w.equation = "inner pair (x)";
  } else {
    eq = 1;  // TwoPairsInsideBelow
    w.equation = "middle pair (y)";
  }
  w.lhs = r.constant[eq];
  w.mass_coeffs = {r.mu_coeff[eq], r.pair_coeff[eq][0], r.pair_coeff[eq][1]};
  w.rhs_bound = 0.0;
  w.certified = w.lhs > 0.0;
  for (double v : w.mass_coeffs) w.certified = w.certified && v > 0.0;
  return w;
}

Corollary6Verdict corollary_6body(double x, double y, double z) {
  const SevenBodyCase c = classify7(x, y, z);
  Corollary6Verdict v;
  const ReducedMassSystem r = reduced_mass_system({x, y, z}, false);

  if (c == SevenBodyCase::AllInside || c == SevenBodyCase::InnerPairInsideProductBelow) {
    v.kind = Corollary6Verdict::Kind::Nonexistence;
    NonexistenceWitness w;
    const std::size_t eq = (c == SevenBodyCase::AllInside) ? 2 : 0;
    w.equation = (c == SevenBodyCase::AllInside) ? "outer pair (z)" : "inner pair (x)";
    w.lhs = r.constant[eq];
    w.mass_coeffs = {r.pair_coeff[eq][0], r.pair_coeff[eq][1]};
    w.rhs_bound = 0.0;
    w.certified = w.lhs > 0.0;
    for (double cf : w.mass_coeffs) w.certified = w.certified && cf > 0.0;
    v.witness = w;
    return v;
  }

  if (c == SevenBodyCase::InnerPairInsideMid || c == SevenBodyCase::InnerPairInsideProductAbove) {
    v.kind = Corollary6Verdict::Kind::ExistenceSearch;
    // Scan y toward 1/x, exactly solving equations {1, 2+3} in (M, m) and
    // certifying against the full three-equation system.
    const int points = 1000;
    const double g = 10.0 * kBoundaryGuard;
    double lo, hi;
    if (c == SevenBodyCase::InnerPairInsideMid) {
      lo = 1.0 + 0.875 * (1.0 / x - 1.0);
      hi = 1.0 / x - g;
    } else {
      lo = 1.0 / x + g;
      hi = 1.0 / x + 0.125 * (z - 1.0 / x);
    }
    const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
    double yy = lo;
    for (int i = 0; i < points; ++i, yy *= ratio) {
      try {
        if (classify7(x, yy, z) != c) continue;
        const ReducedMassSystem rs = reduced_mass_system({x, yy, z}, false);
        ++v.scanned;
        // eq0 and eq1+eq2 in unknowns (M, m)
        const double a11 = rs.pair_coeff[0][0], a12 = rs.pair_coeff[0][1];
        const double a21 = rs.pair_coeff[1][0] + rs.pair_coeff[2][0];
        const double a22 = rs.pair_coeff[1][1] + rs.pair_coeff[2][1];
        const double b1 = -rs.constant[0], b2 = -(rs.constant[1] + rs.constant[2]);
        const double det = a11 * a22 - a12 * a21;
        if (std::abs(det) < 1e-14) continue;
        Corollary6ScanPoint p;
        p.y_or_z = yy;
        p.M = (b1 * a22 - b2 * a12) / det;
        p.m = (a11 * b2 - a21 * b1) / det;
        p.residual_max = 0.0;
        for (int e = 0; e < 3; ++e)
          p.residual_max = std::max(p.residual_max,
                                    std::abs(rs.constant[e] + rs.pair_coeff[e][0] * p.M +
                                             rs.pair_coeff[e][1] * p.m));
        p.aggregated = rs.constant[1] + rs.constant[2] + a21 * p.M + a22 * p.m;
        p.positive = p.M > 0.0 && p.m > 0.0;
        if (p.positive && p.residual_max < 1e-10) v.certified.push_back(p);
      } catch (const Error&) {
      }
    }
    return v;
  }

  v.kind = Corollary6Verdict::Kind::NotCovered;
  return v;
}

double lemma4_a1(double x) {
  const double x2 = x * x;
  const double q = 1.0 + x2;
  return (x2 - 1.0) * x / (q * q * q * q) - 0.125 * q * q / ((x2 - 1.0) * (x2 - 1.0) * x2);
}

}  // namespace nbody
