#pragma once

// Exact dense linear algebra over the rationals.

#include "modform/rational.hpp"

#include <cstddef>
#include <vector>

namespace modform {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row rank by Gaussian elimination.
std::size_t rank(RationalMatrix rows);

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  /// One solution (free variables set to zero); unique when rank == unknowns.
  std::vector<Rational> x;
};

/// Solves A x = b, A given as rows of length `unknowns`.
LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t unknowns);

}  // namespace modform
