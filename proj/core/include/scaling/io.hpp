#pragma once

// JSON and CSV file formats.
//
//   polygon   {"p": 3, "scale": "1", "vertices": [["x", "y"], ...]}          p = 0: slopes in scale*Z
//   function  {"domain": ["a", "b"|"inf"], "anchor": "v"|"-inf", "kinks": [...],
//              "slopes": [...], "convex": bool, "p": 3, "scale": "1"}          p, scale optional
//   circle    {"p": 3, "domain": ["1", "3"], "anchor": "0", "kinks": ["2"],
//              "slopes": ["1/3^1", "-1/3^1"], "convex": false}                 domain optional
//   divisor   {"p": 3, "support": [{"point": "2", "coeff": "-2/3^1"}, ...]}
//   report    {"p", "divisor", "degree", "levels": [{"n", "dim", "normalized"}], ...}
//
// Rationals are strings "a" or "a/b"; H_p scalars are "a" or "a/p^k"; -inf is "-inf".
// Parse failures throw ParseError with a line-anchored message.

#include <string>
#include <string_view>

#include "scaling/curve.hpp"
#include "scaling/newton.hpp"
#include "scaling/riemann_roch.hpp"

namespace scaling::io {

enum class DocumentKind { Polygon, Function, CircleFunction, Divisor, Report, Unknown };

/// Throws ParseError when the text is not a JSON object.
DocumentKind detectKind(std::string_view text);

NewtonPolygon parsePolygon(std::string_view text);
PiecewiseAffine parseFunction(std::string_view text);
CircleFunction parseCircleFunction(std::string_view text);
Divisor parseDivisor(std::string_view text);
FiltrationReport parseReport(std::string_view text);

std::string toJson(const NewtonPolygon& polygon);
std::string toJson(const PiecewiseAffine& f);
std::string toJson(const CircleFunction& f);
std::string toJson(const Divisor& d);
std::string toJson(const FiltrationReport& report);
std::string toJson(const PrincipalityReport& report);
std::string toJson(const RiemannRochReport& report);

/// Columns n,dim,normalized; normalized as an exact rational.
std::string toCsv(const FiltrationReport& report);

}  // namespace scaling::io
