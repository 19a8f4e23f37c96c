#include "scaling/lp.hpp"

#include <algorithm>

#include "scaling/error.hpp"

namespace scaling::lp {

namespace {

// Inequalities a . x < b (strict) or a . x <= b.
struct Row {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

bool constantRowHolds(const Row& r) { return r.strict ? 0 < r.b : 0 <= r.b; }

bool isConstant(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace

System& System::add(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != variables_) throw DomainError("constraint width does not match the variable count");
  constraints_.push_back(Constraint{std::move(coeffs), relation, std::move(rhs)});
  return *this;
}

System& System::addOpenBox(std::size_t var, const Rational& lower, const Rational& upper) {
  std::vector<Rational> e(variables_, Rational(0));
  e[var] = 1;
  add(e, Relation::Less, upper);
  e[var] = -1;
  return add(e, Relation::Less, -lower);
}

bool System::feasible() const {
  std::vector<Row> rows;
  std::vector<Constraint> equalities;
  for (const auto& c : constraints_) {
    if (c.relation == Relation::Equal) {
      equalities.push_back(c);
      continue;
    }
    rows.push_back(Row{c.coeffs, c.rhs, c.relation == Relation::Less});
  }

  // Substitute each equality away through one of its nonzero coefficients.
  while (!equalities.empty()) {
    Constraint eq = std::move(equalities.back());
    equalities.pop_back();
    auto pivot = std::find_if(eq.coeffs.begin(), eq.coeffs.end(), [](const Rational& c) { return c != 0; });
    if (pivot == eq.coeffs.end()) {
      if (eq.rhs != 0) return false;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(pivot - eq.coeffs.begin());
    Rational inv = 1 / eq.coeffs[j];
    auto eliminate = [&](std::vector<Rational>& a, Rational& b) {
      if (a[j] == 0) return;
      Rational factor = a[j] * inv;
      for (std::size_t i = 0; i < a.size(); ++i) a[i] -= factor * eq.coeffs[i];
      b -= factor * eq.rhs;
    };
    for (auto& r : rows) eliminate(r.a, r.b);
    for (auto& other : equalities) eliminate(other.coeffs, other.rhs);
  }

  for (std::size_t j = 0; j < variables_; ++j) {
    std::vector<Row> upper;
    std::vector<Row> lower;
    std::vector<Row> rest;
    for (auto& r : rows) {
      int s = sgn(r.a[j]);
      if (s > 0) {
        upper.push_back(std::move(r));
      } else if (s < 0) {
        lower.push_back(std::move(r));
      } else if (isConstant(r)) {
        if (!constantRowHolds(r)) return false;
      } else {
        rest.push_back(std::move(r));
      }
    }
    // x_j < (b_u - ...)/a_u and x_j > (b_l - ...)/a_l combine into one row free of x_j.
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        Rational cu = -l.a[j];
        Rational cl = u.a[j];
        Row combined{std::vector<Rational>(variables_), cu * u.b + cl * l.b, u.strict || l.strict};
        for (std::size_t i = 0; i < variables_; ++i) combined.a[i] = cu * u.a[i] + cl * l.a[i];
        combined.a[j] = 0;
        if (isConstant(combined)) {
          if (!constantRowHolds(combined)) return false;
          continue;
        }
        rest.push_back(std::move(combined));
      }
    }
    rows = std::move(rest);
  }
  return std::all_of(rows.begin(), rows.end(), constantRowHolds);
}

std::string toString(const Constraint& c) {
  using scaling::toString;
  std::string out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    out += (out.empty() ? "" : " + ") + toString(c.coeffs[i]) + "*x" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  const char* rel = c.relation == Relation::Less ? " < " : c.relation == Relation::LessEqual ? " <= " : " = ";
  return out + rel + toString(c.rhs);
}

}  // namespace scaling::lp
