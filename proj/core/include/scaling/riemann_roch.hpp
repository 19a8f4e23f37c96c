#pragma once

// Riemann-Roch on C_p: the norm ||f||_p, the spaces H^0(D) and their norm
// filtration, normalized dimensions p^-n dim H^0(D)^{p^n}, and the check
//     Dim(H^0(D)) - Dim(H^0(-D)) = deg(D).

#include <cstdint>
#include <string>
#include <vector>

#include "scaling/curve.hpp"
#include "scaling/strata.hpp"

namespace scaling {

/// max over lambda in [1, p) of |slope at lambda|_p / lambda; at a kink both
/// one-sided slopes count. Throws DomainError for bottom.
Rational normP(const CircleFunction& f);

/// D + (f) >= 0. The bottom function belongs to every H^0(D).
bool memberH0(const CircleFunction& f, const Divisor& d);

/// Dimension of H^0(D)^{p^n} (largest stratum), 0 when it is {-inf}.
std::int64_t dimFiltration(const Divisor& d, unsigned n, const SearchOptions& options = {});

struct FiltrationLevel {
  unsigned n = 0;
  std::int64_t dim = 0;
  Rational normalized;  // p^-n * dim
};

struct FiltrationReport {
  Divisor divisor;
  Rational degree;
  std::vector<FiltrationLevel> levels;
  Rational limitEstimate;
  /// (1 + |deg D|) p^(1 - nMax)
  Rational tolerance;
  /// |limitEstimate - deg D| <= tolerance when deg D >= 0, limitEstimate == 0 otherwise.
  bool converged = false;
};

/// (1 + |deg D|) p^(1 - nMax)
Rational limitTolerance(const Divisor& d, unsigned nMax);

/// Levels n = 0..nMax. nMax must be at least 2.
FiltrationReport dimR(const Divisor& d, unsigned nMax, const SearchOptions& options = {});

struct RiemannRochReport {
  FiltrationReport positive;  // H^0(D)
  FiltrationReport negative;  // H^0(-D)
  Rational degree;
  Rational difference;  // estimate(D) - estimate(-D)
  Rational tolerance;
  bool holds = false;
};

RiemannRochReport rrCheck(const Divisor& d, unsigned nMax, const SearchOptions& options = {});

}  // namespace scaling
