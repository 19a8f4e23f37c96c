#pragma once
// SVG rendering. Data stays exact; coordinates are rounded only when written.
#include <string>

#include "scaling/curve.hpp"
#include "scaling/piecewise.hpp"
#include "scaling/riemann_roch.hpp"

namespace scaling::svg {

/// Graph over the domain; an unbounded domain is cut a little past the last kink.
std::string plotFunction(const PiecewiseAffine& f, const std::string& title);

/// One period [1, p].
std::string plotCircleFunction(const CircleFunction& f, const std::string& title);

/// Normalized dimensions against n, with the degree as a reference line.
std::string plotReport(const FiltrationReport& report, const std::string& title);

}  // namespace scaling::svg
