#include "scaling/strata.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "scaling/error.hpp"

namespace scaling {

Rational FilteredProblem::maxBudget() const {
  Rational t(0);
  for (std::size_t i = 0; i < reps.size(); ++i) t -= reps[i] * lowerUnits[i];
  return t;
}

FilteredProblem filteredProblem(const Divisor& d, unsigned n) {
  FilteredProblem problem;
  problem.p = d.prime();
  problem.n = n;
  Rational scale = powerOf(d.prime(), static_cast<long>(n));
  problem.reps.emplace_back(1);
  problem.lowerUnits.emplace_back(0);
  for (const auto& [rep, c] : d.support()) {
    // u p^-n >= -c, i.e. u >= ceil(-c p^n).
    Integer lower = ceilOf(-c.value() * scale);
    if (rep == 1) {
      problem.lowerUnits.front() = lower;
      continue;
    }
    problem.reps.push_back(rep);
    problem.lowerUnits.push_back(lower);
  }
  return problem;
}

Rational positionTarget(const FilteredProblem& problem, const Stratum& stratum) {
  Rational t(0);
  for (std::size_t i = 0; i < problem.reps.size(); ++i) t -= problem.reps[i] * stratum.fixedUnits[i];
  return t;
}

bool latticeCompatible(const FilteredProblem& problem, const Stratum& stratum) {
  // The wrap equation s_0 (1 - p) = u_1 + p * (other units) p^-n has a solution
  // in p^-n Z iff p - 1 divides the total, since p = 1 mod p - 1.
  Integer total(0);
  for (const auto& u : stratum.fixedUnits) total += u;
  for (auto m : stratum.movableUnits) total += m;
  Integer modulus(problem.p - 1);
  return mpz_divisible_p(total.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

lp::System positionSystem(const FilteredProblem& problem, const Stratum& stratum) {
  std::map<std::int64_t, std::int64_t> groups;  // jump -> number of kinks
  for (auto m : stratum.movableUnits) {
    if (m < 1) throw DomainError("movable kinks carry at least one unit");
    ++groups[m];
  }
  lp::System system(groups.size());
  std::vector<Rational> equation;
  std::size_t var = 0;
  Rational p(problem.p);
  for (const auto& [jump, count] : groups) {
    // A sum of `count` points of (1, p) ranges over the open interval (count, count p).
    system.addOpenBox(var, Rational(count), Rational(count) * p);
    equation.emplace_back(jump);
    ++var;
  }
  system.add(std::move(equation), lp::Relation::Equal, positionTarget(problem, stratum));
  return system;
}

bool stratumFeasible(const FilteredProblem& problem, const Stratum& stratum) {
  if (stratum.fixedUnits.size() != problem.reps.size()) throw DomainError("stratum does not match the problem");
  for (std::size_t i = 0; i < problem.reps.size(); ++i) {
    if (stratum.fixedUnits[i] < problem.lowerUnits[i]) return false;
  }
  if (!latticeCompatible(problem, stratum)) return false;
  if (stratum.movableUnits.size() == 1) {
    // One free kink has its position forced; on a support point it would not be free.
    Rational beta = positionTarget(problem, stratum) / Rational(stratum.movableUnits.front());
    if (std::find(problem.reps.begin(), problem.reps.end(), beta) != problem.reps.end()) return false;
  }
  return positionSystem(problem, stratum).feasible();
}

namespace {

/// Calls visit(extra) for every extra >= 0 with sum rep_P extra_P <= budget.
void forEachAssignment(const FilteredProblem& problem, const Rational& budget,
                       const std::function<void(const std::vector<Integer>&, const Rational&)>& visit) {
  std::vector<Integer> extra(problem.reps.size(), Integer(0));
  std::function<void(std::size_t, const Rational&)> recurse = [&](std::size_t i, const Rational& left) {
    if (i == extra.size()) {
      visit(extra, left);
      return;
    }
    Integer cap = floorOf(left / problem.reps[i]);
    for (Integer e = 0; e <= cap; ++e) {
      extra[i] = e;
      recurse(i + 1, left - problem.reps[i] * e);
    }
    extra[i] = 0;
  };
  recurse(0, budget);
}

bool anyOf(std::size_t count, unsigned threads, const std::function<bool(std::size_t)>& test) {
  if (threads <= 1 || count < 2 * static_cast<std::size_t>(threads)) {
    for (std::size_t i = 0; i < count; ++i) {
      if (test(i)) return true;
    }
    return false;
  }
  std::atomic<bool> found{false};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count && !found.load(std::memory_order_relaxed); i += threads) {
        if (test(i)) found.store(true, std::memory_order_relaxed);
      }
    });
  }
  workers.clear();
  return found.load();
}

}  // namespace

std::int64_t searchDimension(const Divisor& d, unsigned n, const SearchOptions& options) {
  FilteredProblem problem = filteredProblem(d, n);
  Rational tmax = problem.maxBudget();
  if (tmax < 0) return 0;
  if (tmax > options.maxUnits) {
    throw ScaleLimitError("filtration level n = " + std::to_string(n) + " needs " + toString(tmax) +
                          " units of search budget, above the limit of " + std::to_string(options.maxUnits));
  }
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  auto fixedFrom = [&](const std::vector<Integer>& extra) {
    std::vector<Integer> units(extra.size());
    for (std::size_t i = 0; i < extra.size(); ++i) units[i] = problem.lowerUnits[i] + extra[i];
    return units;
  };

  // k movable kinks need t > M >= k. Within a fixed k, feasibility depends on
  // the movable jumps only through their total M, so one jump vector
  // (M - k + 1, 1, ..., 1) represents every split of M.
  std::int64_t kmax = ceilOf(tmax).get_si() - 1;
  for (std::int64_t k = kmax; k >= 1; --k) {
    std::vector<std::vector<Integer>> candidates;
    std::vector<Rational> targets;
    forEachAssignment(problem, tmax - Rational(k), [&](const std::vector<Integer>& extra, const Rational& left) {
      Rational t = Rational(k) + left;
      if (t <= k) return;
      candidates.push_back(fixedFrom(extra));
      targets.push_back(std::move(t));
    });
    bool found = anyOf(candidates.size(), threads, [&](std::size_t i) {
      std::int64_t mLimit = ceilOf(targets[i]).get_si() - 1;
      Stratum stratum{candidates[i], std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)};
      for (std::int64_t m = k; m <= mLimit; ++m) {
        stratum.movableUnits.front() = m - k + 1;
        if (stratumFeasible(problem, stratum)) return true;
      }
      return false;
    });
    if (found) return k;
  }

  bool constantStratum = false;
  forEachAssignment(problem, tmax, [&](const std::vector<Integer>& extra, const Rational& left) {
    if (constantStratum || left != 0) return;
    constantStratum = stratumFeasible(problem, Stratum{fixedFrom(extra), {}});
  });
  return constantStratum ? 1 : 0;
}

}  // namespace scaling
