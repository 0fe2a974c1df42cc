#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbody/dynamics.hpp"
#include "nbody/family5.hpp"
#include "nbody/family7.hpp"
#include "nbody/familyn.hpp"
#include "nbody/re_conditions.hpp"
#include "nbody/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

json witness_json(const nbody::NonexistenceWitness& w) {
  return {{"equation", w.equation},
          {"lhs", w.lhs},
          {"mass_coeffs", w.mass_coeffs},
          {"rhs_bound", w.rhs_bound},
          {"certified", w.certified}};
}

nbody::Configuration load_config(const std::string& path, std::optional<double>* omega) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--input", "cannot open " + path);
  json j = json::parse(in);
  nbody::Configuration config;
  for (const auto& b : j.at("bodies"))
    config.bodies.push_back(
        {b.at("mass").get<double>(),
         {b.at("re").get<double>(), b.value("im", 0.0)}});
  if (omega && j.contains("omega")) *omega = j["omega"].get<double>();
  return config;
}

int run_classify(const std::string& family, const std::vector<double>& p) {
  json out;
  if (family == "five") {
    if (p.size() != 2) throw CLI::ValidationError("--positions", "five needs a,r");
    const nbody::FiveBodyCase c = nbody::classify5(p[0], p[1]);
    out = {{"family", "five"},
           {"a", p[0]},
           {"r", p[1]},
           {"case", nbody::to_string(c)},
           {"exists", nbody::case_solvable(c)}};
  } else if (family == "seven") {
    if (p.size() != 3) throw CLI::ValidationError("--positions", "seven needs x,y,z");
    const nbody::SevenBodyCase c = nbody::classify7(p[0], p[1], p[2]);
    out = {{"family", "seven"},
           {"x", p[0]},
           {"y", p[1]},
           {"z", p[2]},
           {"case", nbody::to_string(c)},
           {"exists", !nbody::case_nonexistence(c)}};
  } else if (family == "n") {
    const nbody::GeneralVerdict v = nbody::nonexistence_general(p);
    out = {{"family", "n"}, {"radii", p}};
    if (v.kind == nbody::GeneralVerdict::Kind::Nonexistence) {
      out["verdict"] = "Nonexistence";
      out["regime"] = v.regime;
      out["witness"] = witness_json(v.witness);
    } else {
      out["verdict"] = "NotCovered";
    }
  } else {
    throw CLI::ValidationError("--family", "must be five, seven or n");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_solve_five(double a, double r, std::optional<double> mu, const std::string& method) {
  const nbody::FiveBodyCase c = nbody::classify5(a, r);
  json out = {{"family", "five"}, {"a", a}, {"r", r}, {"case", nbody::to_string(c)}};
  if (!nbody::case_solvable(c)) {
    out["exists"] = false;
    out["witness"] = witness_json(nbody::nonexistence_witness5(a, r));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  nbody::MassSolution5 sol =
      method == "paper" ? nbody::solve_masses_paper(a, r, mu.value_or(1.0))
                        : nbody::solve_masses_exact(a, r);
  out["method"] = method;
  if (method == "paper") out["mu_input"] = mu.value_or(1.0);
  out["mu"] = sol.mu;
  out["m"] = sol.m;
  out["residual_max"] = sol.residual_max;
  out["positive"] = sol.positive;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_solve_seven(double x, double y, double z) {
  const nbody::SevenBodyCase c = nbody::classify7(x, y, z);
  json out = {{"family", "seven"}, {"x", x}, {"y", y}, {"z", z},
              {"case", nbody::to_string(c)}};
  if (nbody::case_nonexistence(c)) {
    out["exists"] = false;
    out["witness"] = witness_json(nbody::nonexistence_witness7(x, y, z));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const nbody::CoefficientSystem cs = nbody::coefficient_system(x, y, z);
  const nbody::MassSolution7 sol = nbody::solve_masses_exact7(x, y, z);
  out["mu"] = sol.mu;
  out["M"] = sol.M;
  out["m"] = sol.m;
  out["residual_max"] = sol.residual_max;
  out["positive"] = sol.positive;
  out["sign_violations"] = cs.sign_violations;
  std::cout << out.dump(2) << "\n";
  return 0;
}

nbody::SevenBodyCase case_from_name(const std::string& name) {
  using SC = nbody::SevenBodyCase;
  for (SC c : {SC::AllInside, SC::AllOutside, SC::InnerPairInsideProductBelow,
               SC::InnerPairInsideMid, SC::InnerPairInsideProductAbove,
               SC::TwoPairsInsideBelow, SC::TwoPairsInsideMid, SC::TwoPairsInsideAbove})
    if (name == nbody::to_string(c)) return c;
  throw CLI::ValidationError("--case", "unknown case " + name);
}

int run_search(const std::string& case_name, const std::string& fixed, char scan_coord,
               int points, std::optional<double> lo, std::optional<double> hi,
               std::ostream& os) {
  const nbody::SevenBodyCase c = case_from_name(case_name);
  // fixed is "x=2,z=4" etc.; the two coordinates other than the scanned one
  double f[2];
  std::size_t nf = 0;
  std::stringstream ss(fixed);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || nf >= 2)
      throw CLI::ValidationError("--fixed", "expected coord=value,coord=value");
    f[nf++] = std::stod(item.substr(eq + 1));
  }
  if (nf != 2) throw CLI::ValidationError("--fixed", "need exactly two fixed coordinates");

  std::vector<nbody::ScanPoint> hits;
  if (lo && hi)
    hits = nbody::scan7(c, scan_coord, f[0], f[1], *lo, *hi, points);
  else
    hits = nbody::paper_existence_search(f[0], f[1], c, points);

  os << "value,x,y,z,mu,M,m,residual,positive\n";
  for (const auto& p : hits)
    os << fmt17(p.value) << ',' << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(p.z)
       << ',' << fmt17(p.solution.mu) << ',' << fmt17(p.solution.M) << ','
       << fmt17(p.solution.m) << ',' << fmt17(p.solution.residual_max) << ','
       << (p.solution.positive ? 1 : 0) << "\n";
  return 0;
}

int run_scan5(double a_min, double a_max, double r_min, double r_max, int grid,
              std::ostream& os) {
  os << "a,r,case,exists,mu_exact,m_exact,residual\n";
  for (int i = 0; i < grid; ++i) {
    const double a = a_min + (a_max - a_min) * (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double r = r_min + (r_max - r_min) * (j + 0.5) / grid;
      if (!(a < r)) continue;
      try {
        const nbody::FiveBodyCase c = nbody::classify5(a, r);
        os << fmt17(a) << ',' << fmt17(r) << ',' << nbody::to_string(c) << ',';
        if (!nbody::case_solvable(c)) {
          os << "0,,,\n";
          continue;
        }
        const nbody::MassSolution5 sol = nbody::solve_masses_exact(a, r);
        os << (sol.positive ? 1 : 0) << ',' << fmt17(sol.mu) << ',' << fmt17(sol.m) << ','
           << fmt17(sol.residual_max) << "\n";
      } catch (const nbody::Error&) {
        // boundary point: omit the row, the grid is a sampling not a proof
      }
    }
  }
  return 0;
}

int run_verify(const std::string& input, double periods, double tol) {
  std::optional<double> omega_in;
  const nbody::Configuration config = load_config(input, &omega_in);
  const nbody::ConditionResidual res = nbody::condition_residual(config);

  json out;
  out["inputs"] = {{"file", input}, {"periods", periods}, {"tol", tol}};
  if (omega_in) out["inputs"]["omega"] = *omega_in;
  json per;
  for (const auto& r : res.per_body) per.push_back(std::abs(r));
  out["residuals"] = {{"max_abs", res.max_abs}, {"per_body_abs", per}};

  bool verdict = res.max_abs < 1e-10;
  try {
    const nbody::OmegaFit fit = nbody::fit_angular_velocity(config);
    out["omega"] = fit.omega;
    out["consistency"] = fit.consistency;
    verdict = verdict && fit.consistency < 1e-8;
    const nbody::DriftReport drift = nbody::rigid_rotation_check(config, periods, tol);
    out["drift"] = {{"distance", drift.max_distance_drift},
                    {"radius", drift.max_radius_drift},
                    {"energy", drift.energy_drift},
                    {"pass", drift.pass}};
    verdict = verdict && drift.pass;
  } catch (const nbody::Error& e) {
    out["fit_error"] = e.what();
    verdict = false;
  }
  out["verdict"] = verdict;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_lemma(const std::string& name, std::uint64_t samples, std::uint64_t seed) {
  const nbody::LemmaAudit a = nbody::lemma_audit(name, samples, seed);
  const json out = {{"name", a.name},
                    {"samples", a.samples},
                    {"seed", seed},
                    {"violations", a.violations},
                    {"min_margin", a.min_margin},
                    {"pass", a.pass}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_measure(const std::string& family, const std::vector<double>& bounds,
                std::uint64_t samples, std::uint64_t seed) {
  const std::size_t dims = family == "seven" ? 3 : 2;
  if (bounds.size() != 2 * dims)
    throw CLI::ValidationError("--bounds", "expected lo1,hi1,... (2 per dimension)");
  std::vector<double> lo, hi;
  for (std::size_t d = 0; d < dims; ++d) {
    lo.push_back(bounds[2 * d]);
    hi.push_back(bounds[2 * d + 1]);
  }
  const nbody::MeasureEstimate est = nbody::measure_estimate(family, lo, hi, samples, seed);
  const json out = {{"family", est.family},
                    {"lo", est.lo},
                    {"hi", est.hi},
                    {"samples", est.samples},
                    {"seed", seed},
                    {"successes", est.successes},
                    {"fraction", est.fraction},
                    {"wilson_lo", est.wilson_lo},
                    {"wilson_hi", est.wilson_hi}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int error_exit(const std::string& type, const std::string& message, int code) {
  const json err = {{"error", type}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative equilibria of the collinear n-body problem on the curved plane"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a symmetric collinear setup");
  std::string family = "five", positions_arg;
  classify->add_option("--family", family, "five, seven or n")->required();
  classify->add_option("--positions", positions_arg, "comma-separated pair radii")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve for the free masses");
  std::string solve_family = "five", method = "exact";
  double a = 0, r = 0, x = 0, y = 0, z = 0;
  std::optional<double> mu_in;
  solve->add_option("--family", solve_family, "five or seven")->required();
  solve->add_option("--a", a);
  solve->add_option("--r", r);
  solve->add_option("--x", x);
  solve->add_option("--y", y);
  solve->add_option("--z", z);
  double mu_flag = 0;
  auto* mu_opt = solve->add_option("--mu", mu_flag, "origin mass for --method paper");
  solve->add_option("--method", method, "exact or paper");

  // search
  auto* search = app.add_subcommand("search", "Scan one coordinate of the 7-body system");
  std::string case_name, fixed, scan = "y", out_file;
  int points = 1000;
  std::optional<double> lo_flag, hi_flag;
  double lo_val = 0, hi_val = 0;
  search->add_option("--family", solve_family)->check(CLI::IsMember({"seven"}));
  search->add_option("--case", case_name)->required();
  search->add_option("--fixed", fixed, "e.g. x=2,z=4")->required();
  search->add_option("--scan", scan, "coordinate to scan: x, y or z");
  search->add_option("--points", points);
  auto* lo_opt = search->add_option("--lo", lo_val);
  auto* hi_opt = search->add_option("--hi", hi_val);
  search->add_option("--out", out_file, "CSV file (default stdout)");

  // scan
  auto* scan5 = app.add_subcommand("scan", "Region atlas of the 5-body (a, r) plane");
  double a_min = 0.1, a_max = 5, r_min = 0.1, r_max = 5;
  int grid = 50;
  std::string scan_out;
  scan5->add_option("--family", solve_family)->check(CLI::IsMember({"five"}));
  scan5->add_option("--a-min", a_min);
  scan5->add_option("--a-max", a_max);
  scan5->add_option("--r-min", r_min);
  scan5->add_option("--r-max", r_max);
  scan5->add_option("--grid", grid);
  scan5->add_option("--out", scan_out, "CSV file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Residual + rigid-rotation verification");
  std::string input;
  double periods = 1.0, tol = 1e-6;
  verify->add_option("--input", input, "config JSON")->required();
  verify->add_option("--periods", periods);
  verify->add_option("--tol", tol);

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Quasi-random audit of a proof inequality");
  std::string lemma_name;
  std::uint64_t samples = 1000, seed = 0;
  lemma->add_option("--name", lemma_name, "lema2, lemma5 or lemma4")->required();
  lemma->add_option("--samples", samples);
  lemma->add_option("--seed", seed);

  // measure
  auto* measure = app.add_subcommand("measure", "Monte Carlo solution-set fraction");
  std::string m_family = "five", bounds_arg;
  std::uint64_t m_samples = 10000, m_seed = 0;
  measure->add_option("--family", m_family, "five or seven")->required();
  measure->add_option("--bounds", bounds_arg, "lo1,hi1,lo2,hi2[,lo3,hi3]")->required();
  measure->add_option("--samples", m_samples);
  measure->add_option("--seed", m_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    const json err = {{"error", "BadArguments"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (*classify) return run_classify(family, parse_csv_doubles(positions_arg));
    if (*solve) {
      if (mu_opt->count()) mu_in = mu_flag;
      if (solve_family == "five") return run_solve_five(a, r, mu_in, method);
      if (solve_family == "seven") return run_solve_seven(x, y, z);
      return error_exit("BadArguments", "solve needs --family five or seven", 1);
    }
    if (*search) {
      if (lo_opt->count()) lo_flag = lo_val;
      if (hi_opt->count()) hi_flag = hi_val;
      if (!out_file.empty()) {
        std::ofstream os(out_file);
        if (!os) return error_exit("BadArguments", "cannot open " + out_file, 1);
        return run_search(case_name, fixed, scan.empty() ? 'y' : scan[0], points, lo_flag,
                          hi_flag, os);
      }
      return run_search(case_name, fixed, scan.empty() ? 'y' : scan[0], points, lo_flag,
                        hi_flag, std::cout);
    }
    if (*scan5) {
      if (!scan_out.empty()) {
        std::ofstream os(scan_out);
        if (!os) return error_exit("BadArguments", "cannot open " + scan_out, 1);
        return run_scan5(a_min, a_max, r_min, r_max, grid, os);
      }
      return run_scan5(a_min, a_max, r_min, r_max, grid, std::cout);
    }
    if (*verify) return run_verify(input, periods, tol);
    if (*lemma) return run_lemma(lemma_name, samples, seed);
    if (*measure) return run_measure(m_family, parse_csv_doubles(bounds_arg), m_samples, m_seed);
  } catch (const CLI::ValidationError& e) {
    return error_exit("BadArguments", e.what(), 1);
  } catch (const nbody::Inadmissible& e) {
    return error_exit("Inadmissible", e.what(), 2);
  } catch (const nbody::WrongCase& e) {
    return error_exit("WrongCase", e.what(), 2);
  } catch (const nbody::NotCollinearSymmetric& e) {
    return error_exit("NotCollinearSymmetric", e.what(), 2);
  } catch (const nbody::MassNonpositive& e) {
    return error_exit("MassNonpositive", e.what(), 2);
  } catch (const nbody::UnknownLemma& e) {
    return error_exit("UnknownLemma", e.what(), 2);
  } catch (const nbody::Error& e) {
    return error_exit("NumericalFailure", e.what(), 3);
  } catch (const std::exception& e) {
    return error_exit("BadArguments", e.what(), 1);
  }
  return 1;
}
