#pragma once

#include <stdexcept>
#include <string>

namespace nbody {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A pair at geodesic distance 0 or pi (cot singular).
struct SingularPair : Error {
  int i, j;
  SingularPair(int i_, int j_)
      : Error("singular pair (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

// T_ij <= tolerance: the condition-system kernel blows up.
struct AntipodalSingularity : Error {
  int i, j;
  AntipodalSingularity(int i_, int j_)
      : Error("antipodal singularity, T_ij ~ 0 for pair (" + std::to_string(i_) + "," +
              std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct NotCollinearSymmetric : Error {
  explicit NotCollinearSymmetric(const std::string& w) : Error(w) {}
};

struct Inadmissible : Error {
  explicit Inadmissible(const std::string& w) : Error(w) {}
};

struct WrongCase : Error {
  explicit WrongCase(const std::string& w) : Error(w) {}
};

struct MassNonpositive : Error {
  explicit MassNonpositive(const std::string& w) : Error(w) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& w) : Error(w) {}
};

struct SignAssertionFailed : Error {
  explicit SignAssertionFailed(const std::string& w) : Error(w) {}
};

struct NegativeOmegaSquared : Error {
  explicit NegativeOmegaSquared(const std::string& w) : Error(w) {}
};

struct SingularityReached : Error {
  double t;
  int i, j;
  SingularityReached(double t_, int i_, int j_)
      : Error("singularity reached at t=" + std::to_string(t_) + ", pair (" +
              std::to_string(i_) + "," + std::to_string(j_) + ")"),
        t(t_), i(i_), j(j_) {}
};

struct StepSizeUnderflow : Error {
  explicit StepSizeUnderflow(double t)
      : Error("step size underflow at t=" + std::to_string(t)) {}
};

struct UnknownLemma : Error {
  explicit UnknownLemma(const std::string& name) : Error("unknown lemma: " + name) {}
};

}  // namespace nbody
