#pragma once
// Exhaustive reference computation of dim H0(D)^{p^n}, written against the
// public curve API only.
//
// Every configuration is enumerated explicitly: slack at each fixed point
// ({1} and the support of D), then for each number k of free kinks the set of
// reachable weighted position sums is built by an interval DP over actual jump
// sequences. Each hit is turned into a concrete CircleFunction which must pass
// memberH0 and the norm bound, so a positive answer always carries a witness.
#include <cstdint>
#include <optional>
#include <string>

#include "scaling/curve.hpp"

namespace oracle {

struct BruteForceResult {
  std::int64_t dim = 0;
  /// Section realizing the reported dimension (absent when dim == 0).
  std::optional<scaling::CircleFunction> witness;
  /// Number of free kinks of the witness.
  std::int64_t freeKinks = 0;
  std::uint64_t configurations = 0;
  /// Empty when every produced witness validated; otherwise what went wrong.
  std::string inconsistency;
};

/// Sum over positive coefficients of rep * d: the budget B.
scaling::Rational positiveBudget(const scaling::Divisor& d);

/// Throws std::runtime_error when the unit budget B p^n exceeds maxUnits.
BruteForceResult bruteForceDimension(const scaling::Divisor& d, unsigned n, std::int64_t maxUnits = 400);

}  // namespace oracle
