#pragma once

#include <stdexcept>
#include <string>

namespace strainwig {

/// Invalid user-facing configuration (bad key, out-of-range strain, ...).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Strain merged the Dirac points: |t2| > 2|t1|, no Dirac cone remains.
class GapOpenedError : public std::runtime_error {
public:
  GapOpenedError(const std::string& what, double epsilon)
      : std::runtime_error(what), epsilon_(epsilon) {}
  double epsilon() const noexcept { return epsilon_; }

private:
  double epsilon_;
};

/// The coherent-state expansion cannot reach the tail bound within the cap.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string& what, int suggested_order)
      : std::runtime_error(what), suggested_order_(suggested_order) {}
  int suggested_order() const noexcept { return suggested_order_; }

private:
  int suggested_order_;
};

/// Quadrature result changed by more than the tolerance under order doubling.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite-difference grid too coarse or too small for the stencil.
class GridTooCoarse : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace strainwig
