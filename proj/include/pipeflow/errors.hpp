#pragma once

#include <stdexcept>
#include <string>

namespace pipeflow {

// Pressure-law singularity at m_L = rho_L, or a quadrature segment crossing it.
class SingularityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// dP/dm_L <= 0 (continuous level) or a nonpositive averaged sound speed
// (discrete level): eigenvalues would be complex.
class HyperbolicityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// No sign change on the root-finding interval.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ODE step-size underflow or unreachable integration target.
class IntegrationError : public std::runtime_error {
public:
  IntegrationError(const std::string& what, double last_xi)
      : std::runtime_error(what), last_xi(last_xi) {}
  double last_xi;
};

// |lambda_2 - lambda_1| too small to form |A|.
class DegenerateEigenvalueError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The lambda-field eigenvector coefficient blew up: a mu eigenvalue got too
// close to the lambda eigenvalue along the integral curve.
class ResonanceError : public std::runtime_error {
public:
  ResonanceError(const std::string& what, double xi)
      : std::runtime_error(what), xi(xi) {}
  double xi;
};

// A Lax/ordering check failed while assembling an exact Riemann solution.
// The message names the violated inequality; no parameters are adjusted.
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A scheme hit an invalid state mid-run; carries the offending cell index.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, int cell, double time)
      : std::runtime_error(what), cell(cell), time(time) {}
  int cell;
  double time;
};

}  // namespace pipeflow
