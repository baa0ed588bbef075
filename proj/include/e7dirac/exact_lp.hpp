#pragma once

// Exact feasibility for standard-form linear programs { x >= 0 : A x = b }
// over the rationals: two-phase-free Phase I simplex with Bland's rule.

#include "e7dirac/rational.hpp"

#include <cstdint>
#include <vector>

namespace e7dirac::lp {

struct Problem {
  std::vector<std::vector<Rational>> A;  // m rows, n columns
  std::vector<Rational> b;               // m entries
};

/// Same problem with machine-integer data.
struct IntProblem {
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> b;
};

struct Result {
  bool feasible = false;
  /// Feasible point (n entries) when feasible.
  std::vector<Rational> x;
  /// Farkas certificate (m entries) when infeasible: A^T y >= 0, b^T y < 0.
  std::vector<Rational> y;
  std::size_t pivots = 0;
};

/// Decides feasibility exactly. Terminates by Bland's rule. The returned
/// point or certificate is verified before returning (InternalError if not).
/// Integer problems run on a fraction-free tableau (same pivot sequence) and
/// fall back to GMP rationals if a 64-bit entry would overflow.
Result find_feasible(const Problem& p);
Result find_feasible(const IntProblem& p);
/// The plain rational tableau, always.
Result find_feasible_rational(const Problem& p);

/// True when x >= 0 and A x = b.
bool check_point(const Problem& p, const std::vector<Rational>& x);
/// True when A^T y >= 0 and b^T y < 0.
bool check_certificate(const Problem& p, const std::vector<Rational>& y);

}  // namespace e7dirac::lp
