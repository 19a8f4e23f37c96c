#include "scaling/riemann_roch.hpp"

#include "scaling/error.hpp"

namespace scaling {

Rational normP(const CircleFunction& f) {
  if (f.isBottom()) throw DomainError("the norm of -inf is undefined");
  // On an arc |s|_p / lambda is largest at the left end; the slope p s_m seen
  // just below 1 gives |s_m|_p / p, already dominated by the last arc.
  Rational best(0);
  for (std::size_t i = 0; i < f.slopes().size(); ++i) {
    Rational candidate = padicAbs(f.slopes()[i]) / f.arcStart(i);
    if (candidate > best) best = candidate;
  }
  return best;
}

bool memberH0(const CircleFunction& f, const Divisor& d) {
  if (f.prime() != d.prime()) throw MismatchError("function and divisor over different primes");
  if (f.isBottom()) return true;
  return (d + divisorOf(f)).isEffective();
}

std::int64_t dimFiltration(const Divisor& d, unsigned n, const SearchOptions& options) {
  if (degree(d) < 0) return 0;
  return searchDimension(d, n, options);
}

Rational limitTolerance(const Divisor& d, unsigned nMax) {
  Rational deg = degree(d);
  return (1 + abs(deg)) * powerOf(d.prime(), 1 - static_cast<long>(nMax));
}

FiltrationReport dimR(const Divisor& d, unsigned nMax, const SearchOptions& options) {
  if (nMax < 2) throw DomainError("dimR needs nMax >= 2");
  FiltrationReport report{d, degree(d), {}, Rational(0), limitTolerance(d, nMax), false};
  for (unsigned n = 0; n <= nMax; ++n) {
    std::int64_t dim = dimFiltration(d, n, options);
    report.levels.push_back(FiltrationLevel{n, dim, Rational(dim) * powerOf(d.prime(), -static_cast<long>(n))});
  }
  report.limitEstimate = report.levels.back().normalized;
  report.converged = report.degree >= 0 ? abs(report.limitEstimate - report.degree) <= report.tolerance
                                        : report.limitEstimate == 0;
  return report;
}

RiemannRochReport rrCheck(const Divisor& d, unsigned nMax, const SearchOptions& options) {
  RiemannRochReport report{dimR(d, nMax, options), dimR(-d, nMax, options), degree(d), Rational(0),
                           limitTolerance(d, nMax), false};
  report.difference = report.positive.limitEstimate - report.negative.limitEstimate;
  report.holds = abs(report.difference - report.degree) <= report.tolerance;
  return report;
}

}  // namespace scaling
