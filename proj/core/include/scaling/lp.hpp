#pragma once

// Exact feasibility of small systems of linear constraints over Q, with
// strict and non-strict inequalities, by Fourier-Motzkin elimination.

#include <string>
#include <vector>

#include "scaling/scalars.hpp"

namespace scaling::lp {

enum class Relation { Less, LessEqual, Equal };

/// coeffs . x  (rel)  rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

class System {
 public:
  explicit System(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  System& add(std::vector<Rational> coeffs, Relation relation, Rational rhs);
  /// lower < x_i < upper
  System& addOpenBox(std::size_t var, const Rational& lower, const Rational& upper);

  bool feasible() const;

 private:
  std::size_t variables_;
  std::vector<Constraint> constraints_;
};

std::string toString(const Constraint& c);

}  // namespace scaling::lp
