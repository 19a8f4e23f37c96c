#pragma once
// Randomized property suite over every module.
//
// Each property draws its cases from a per-case seed derived from the run
// seed, the property index and the case index, so reports depend only on
// (seed, count, fault). A failing case is shrunk by searching smaller sizes
// for another counterexample before it is reported.
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scaling/generators.hpp"

namespace scaling::verify {

/// Operations under test. A fault swaps one for a deliberately broken version
/// so the harness itself can be checked.
struct Operations {
  std::function<Germ(const Germ&, const Germ&)> germJoin;
  std::function<LexElement(const LexElement&, const LexElement&)> lexJoin;
  std::function<Divisor(const CircleFunction&)> divisorOf;
};

/// Names accepted by withFault.
std::vector<std::string> knownFaults();
/// The real operations, or with one fault injected. Throws DomainError for an unknown name.
Operations withFault(const std::string& fault);

/// Returns a description of the counterexample, or nullopt when the case passes.
using Check = std::function<std::optional<std::string>(gen::Rng&, unsigned size, const Operations&)>;

struct Property {
  std::string name;
  /// Cases run = ceil(count / costDivisor).
  std::size_t costDivisor = 1;
  Check check;
};

const std::vector<Property>& properties();

struct Options {
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  std::string fault;
  /// Only properties whose name starts with this prefix.
  std::string filter;
};

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  bool ok = true;
  std::string reproducer;
};

struct Result {
  std::vector<Outcome> outcomes;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
  std::string report;
};

Result run(const Options& options);

/// Runs one property for `cases` cases; the first failure, shrunk, or nullopt.
std::optional<std::string> runProperty(const Property& property, std::uint64_t seed, std::size_t index,
                                       std::size_t cases, const Operations& ops);

}  // namespace scaling::verify
