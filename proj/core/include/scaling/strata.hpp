#pragma once

// Combinatorial strata of the filtration level H^0(D)^{p^n}.
//
// A section f with ||f||_p <= p^n has all its slopes in p^-n Z on [1, p), so
// every jump of f is an integer number of units p^-n. A stratum fixes
//   * the jump (in units) at each fixed point: the class {1} and supp(D),
//     bounded below by -D there;
//   * the jumps of the k movable kinks, each >= 1 unit, whose positions
//     range over the open arc (1, p).
// Slopes then follow from the wrap equation, which lands in p^-n Z exactly
// when the total number of units is divisible by p - 1. The positions are cut
// by one linear equation, the vanishing of deg (f):
//     sum_movable m_j b_j = t := -sum_fixed rep_P u_P.
// A nonempty stratum is an open polytope of dimension k - 1 (k >= 1) times the
// line of additive constants, so it has dimension k, or 1 when k = 0.

#include <cstdint>
#include <vector>

#include "scaling/curve.hpp"
#include "scaling/lp.hpp"

namespace scaling {

struct SearchOptions {
  /// Worker threads for stratum evaluation; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Upper bound on t_max (in units) before the search refuses to run.
  std::int64_t maxUnits = 200000;
};

/// The fixed points of a filtration level and the lowest admissible jump
/// there, in units of p^-n. The class {1} always comes first.
struct FilteredProblem {
  Prime p = 2;
  unsigned n = 0;
  std::vector<Rational> reps;
  std::vector<Integer> lowerUnits;

  /// -sum rep_P * lowerUnits_P: the largest reachable right-hand side t.
  Rational maxBudget() const;
};

FilteredProblem filteredProblem(const Divisor& d, unsigned n);

struct Stratum {
  /// Jump units at each fixed point, aligned with FilteredProblem::reps.
  std::vector<Integer> fixedUnits;
  /// Jump units of the movable kinks, each >= 1.
  std::vector<std::int64_t> movableUnits;
};

/// Right-hand side t of the position equation.
Rational positionTarget(const FilteredProblem& problem, const Stratum& stratum);

/// Slopes of the stratum lie in p^-n Z.
bool latticeCompatible(const FilteredProblem& problem, const Stratum& stratum);

/// Open box (1, p) per movable kink, kinks with equal jumps aggregated into
/// their position sum, and the degree equation.
lp::System positionSystem(const FilteredProblem& problem, const Stratum& stratum);

bool stratumFeasible(const FilteredProblem& problem, const Stratum& stratum);

/// Largest stratum dimension of H^0(D)^{p^n}, 0 when it is {-inf}.
std::int64_t searchDimension(const Divisor& d, unsigned n, const SearchOptions& options = {});

}  // namespace scaling
