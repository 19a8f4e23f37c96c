#include "brute_force.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "scaling/riemann_roch.hpp"

namespace oracle {

using scaling::Divisor;
using scaling::HpScalar;
using scaling::Integer;
using scaling::Prime;
using scaling::Rational;

namespace {

/// Disjoint sorted open intervals (lo, hi) with integer endpoints.
using IntervalSet = std::vector<std::pair<std::int64_t, std::int64_t>>;

IntervalSet normalize(IntervalSet set) {
  std::sort(set.begin(), set.end());
  IntervalSet out;
  for (const auto& [lo, hi] : set) {
    // Open intervals (a, b) and (b, c) do not cover b; only strict overlap merges.
    if (!out.empty() && lo < out.back().second) {
      out.back().second = std::max(out.back().second, hi);
    } else {
      out.emplace_back(lo, hi);
    }
  }
  return out;
}

bool containsStrictly(const IntervalSet& set, const Rational& x) {
  return std::any_of(set.begin(), set.end(), [&](const auto& iv) { return x > iv.first && x < iv.second; });
}

Integer ceilRational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floorRational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow(Prime p, unsigned n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n);
  return Rational(r);
}

struct FixedPoint {
  Rational rep;
  Integer lower;  // least admissible jump, in units p^-n
};

class Search {
 public:
  Search(const Divisor& d, unsigned n, std::int64_t maxUnits) : d_(d), p_(d.prime()), n_(n), unit_(pow(d.prime(), n)) {
    points_.push_back(FixedPoint{Rational(1), Integer(0)});
    for (const auto& [rep, c] : d.support()) {
      Integer lower = ceilRational(-c.value() * unit_);
      if (rep == 1) {
        points_.front().lower = lower;
      } else {
        points_.push_back(FixedPoint{rep, lower});
      }
    }
    for (const auto& fp : points_) budget_ -= fp.rep * fp.lower;
    if (budget_ > maxUnits) throw std::runtime_error("oracle budget too large: " + scaling::toString(budget_));
    limit_ = budget_ < 0 ? 0 : floorRational(budget_).get_si() + 1;
    buildReach();
  }

  BruteForceResult run() {
    BruteForceResult result;
    if (budget_ < 0) return result;
    std::vector<Integer> jumps(points_.size());
    enumerate(0, budget_, jumps, result);
    return result;
  }

 private:
  /// reach_[j][m]: sums of beta_i * m_i over j kinks with jumps m_i >= 1 totalling m.
  void buildReach() {
    auto size = static_cast<std::size_t>(limit_ + 1);
    reach_.assign(size, std::vector<IntervalSet>(size));
    reach_[0][0] = {{0, 0}};  // marker: the empty sum, exactly 0
    auto p = static_cast<std::int64_t>(p_);
    for (std::size_t j = 1; j < size; ++j) {
      for (std::size_t m = j; m < size; ++m) {
        IntervalSet acc;
        for (std::size_t last = 1; last + (j - 1) <= m; ++last) {
          const IntervalSet& prev = reach_[j - 1][m - last];
          auto lo = static_cast<std::int64_t>(last), hi = p * static_cast<std::int64_t>(last);
          for (const auto& [a, b] : prev) acc.emplace_back(a + lo, b + hi);
        }
        reach_[j][m] = normalize(std::move(acc));
      }
    }
  }

  void enumerate(std::size_t i, const Rational& left, std::vector<Integer>& jumps, BruteForceResult& result) {
    if (i == points_.size()) {
      ++result.configurations;
      consider(jumps, left, result);
      return;
    }
    Integer cap = floorRational(left / points_[i].rep);
    for (Integer e = 0; e <= cap; ++e) {
      jumps[i] = points_[i].lower + e;
      enumerate(i + 1, left - points_[i].rep * e, jumps, result);
    }
  }

  /// left = weighted slack still available for free kinks.
  void consider(const std::vector<Integer>& jumps, const Rational& left, BruteForceResult& result) {
    // Closure: sum over all points of rep * jump = 0, so free kinks must supply
    // target = -(fixed part) = left.
    const Rational& target = left;
    Integer fixedTotal(0);
    for (const auto& j : jumps) fixedTotal += j;
    Integer modulus(static_cast<long>(p_ - 1));

    auto latticeOk = [&](std::int64_t freeTotal) {
      Integer total = fixedTotal + freeTotal;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), total.get_mpz_t(), modulus.get_mpz_t());
      return r == 0;
    };

    if (target == 0 && latticeOk(0) && result.dim < 1) {
      record(jumps, {}, target, result, 1);
    }
    // m free units put every kink beyond 1, so m < target.
    std::int64_t top = std::min<std::int64_t>(limit_, ceilRational(target).get_si() - 1);
    for (std::int64_t k = top; k >= 1 && k > result.freeKinks; --k) {
      for (std::int64_t m = k; m <= top; ++m) {
        if (!latticeOk(m)) continue;
        if (!containsStrictly(reach_[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)], target)) continue;
        std::vector<std::int64_t> split = decompose(k, m, target);
        if (record(jumps, split, target, result, k)) return;
      }
    }
  }

  /// A jump sequence of length k, sum m, whose reachable interval holds target.
  std::vector<std::int64_t> decompose(std::int64_t k, std::int64_t m, Rational target) const {
    std::vector<std::int64_t> split;
    auto p = static_cast<std::int64_t>(p_);
    while (k > 0) {
      for (std::int64_t last = 1; last + (k - 1) <= m; ++last) {
        const IntervalSet& prev = reach_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - last)];
        // Need x in prev with target - x in (last, p last).
        bool ok = std::any_of(prev.begin(), prev.end(), [&](const auto& iv) {
          Rational lo = std::max<Rational>(Rational(iv.first), target - p * last);
          Rational hi = std::min<Rational>(Rational(iv.second), target - last);
          if (k == 1) return iv.first == 0 && iv.second == 0 && target > last && target < p * last;
          return lo < hi;
        });
        if (!ok) continue;
        split.push_back(last);
        // Continue with the centre of the admissible window for the remaining kinks.
        for (const auto& iv : prev) {
          Rational lo = std::max<Rational>(Rational(iv.first), target - p * last);
          Rational hi = std::min<Rational>(Rational(iv.second), target - last);
          if (k > 1 && lo < hi) {
            target = (lo + hi) / 2;
            break;
          }
        }
        m -= last;
        --k;
        break;
      }
    }
    return split;
  }

  /// Builds and validates a section for the configuration; true when it is accepted.
  bool record(const std::vector<Integer>& jumps, const std::vector<std::int64_t>& split, const Rational& target,
              BruteForceResult& result, std::int64_t dim) {
    std::optional<scaling::CircleFunction> built = buildWitness(jumps, split, target);
    if (!built) return false;
    const scaling::CircleFunction& f = *built;
    if (!scaling::memberH0(f, d_)) {
      result.inconsistency = "witness " + scaling::toString(f) + " is not in H0(D)";
      return false;
    }
    if (scaling::normP(f) > unit_) {
      result.inconsistency = "witness " + scaling::toString(f) + " exceeds the norm bound";
      return false;
    }
    result.dim = dim;
    result.freeKinks = static_cast<std::int64_t>(split.size());
    result.witness = f;
    return true;
  }

  std::optional<scaling::CircleFunction> buildWitness(const std::vector<Integer>& jumps,
                                                      const std::vector<std::int64_t>& split,
                                                      const Rational& target) const {
    // Free kinks at base + delta (j - centre), sum of m_j beta_j = target exactly.
    std::vector<std::pair<Rational, Integer>> kinks;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (jumps[i] != 0) kinks.emplace_back(points_[i].rep, jumps[i]);
    }
    if (!split.empty()) {
      Integer total(0);
      Rational weighted(0);
      for (std::size_t j = 0; j < split.size(); ++j) {
        total += split[j];
        weighted += Rational(static_cast<long>(split[j])) * static_cast<long>(j);
      }
      Rational base = target / Rational(total);
      Rational centre = weighted / Rational(total);
      Rational room = std::min<Rational>(base - 1, Rational(static_cast<long>(p_)) - base);
      Rational delta = room / Rational(static_cast<long>(2 * split.size() + 2));
      for (;;) {
        bool clash = false;
        for (std::size_t j = 0; j < split.size() && !clash; ++j) {
          Rational beta = base + delta * (Rational(static_cast<long>(j)) - centre);
          for (std::size_t i = 1; i < points_.size(); ++i) clash = clash || beta == points_[i].rep;
        }
        if (!clash) break;
        // A lone free kink has no freedom left; on a fixed point it is not free.
        if (split.size() == 1) return std::nullopt;
        delta /= 3;
      }
      for (std::size_t j = 0; j < split.size(); ++j) {
        kinks.emplace_back(base + delta * (Rational(static_cast<long>(j)) - centre), Integer(static_cast<long>(split[j])));
      }
    }
    std::sort(kinks.begin(), kinks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    // Wrap at 1: u = s_0 - p s_m with s_m = s_0 + interior jumps.
    Integer interior(0);
    for (const auto& k : kinks) interior += k.second;
    Integer numerator = jumps[0] + Integer(static_cast<long>(p_)) * interior;
    Integer denom = Integer(1) - Integer(static_cast<long>(p_));
    Integer s0 = numerator / denom;
    if (s0 * denom != numerator) throw std::logic_error("oracle: wrap equation has no lattice solution");

    std::vector<Rational> positions;
    std::vector<HpScalar> slopes{HpScalar(p_, s0, n_)};
    Integer current = s0;
    for (const auto& [pos, jump] : kinks) {
      current += jump;
      positions.push_back(pos);
      slopes.emplace_back(p_, current, n_);
    }
    return scaling::buildCircleFunction(p_, std::move(positions), std::move(slopes), scaling::RMaxValue(0));
  }

  const Divisor& d_;
  Prime p_;
  unsigned n_;
  Rational unit_;
  std::vector<FixedPoint> points_;
  Rational budget_{0};
  std::int64_t limit_ = 0;
  std::vector<std::vector<IntervalSet>> reach_;
};

}  // namespace

Rational positiveBudget(const Divisor& d) {
  Rational b(0);
  for (const auto& [rep, c] : d.support()) {
    if (c.sign() > 0) b += rep * c.value();
  }
  return b;
}

BruteForceResult bruteForceDimension(const Divisor& d, unsigned n, std::int64_t maxUnits) {
  if (scaling::degree(d) < 0) return {};
  return Search(d, n, maxUnits).run();
}

}  // namespace oracle
