#pragma once

// Randomized property suites behind `coarselen verify`, plus the samplers
// they use (also handy for property tests).

#include <cstdint>
#include <random>
#include <string>

#include "coarselen/region.hpp"

namespace coarselen {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, long max_num = 20, long max_den = 20);
/// i/den for i uniform in [0, den), den uniform in [1, max_den]: a rational in [0,1).
Rational random_unit_rational(Rng& rng, long max_den = 64);
AlgebraVector<Rational> random_vector(Rng& rng);

/// N <= max_blocks blocks with integer weights normalized to unit mass; some
/// weights are zero.
SigmaWord<Rational> random_sigma_word(Rng& rng, int max_blocks = 20);
SigmaWord<double> to_double(const SigmaWord<Rational>& w);

/// Rejection sample of a point with InteriorMember status, coordinates k/den.
XYPoint<Rational> random_interior_point(Rng& rng, long den = 1024);

enum class Suite { Algebra, Commutation, Invariance, Convergence };

const char* to_string(Suite suite);
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  Mode mode = Mode::Exact;
  std::uint64_t seed = 20100613;
  /// 0 picks the suite's default.
  long trials = 0;
};

struct SuiteResult {
  Suite suite;
  bool passed = false;
  long trials = 0;
  long failures = 0;
  std::string detail;
};

SuiteResult run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace coarselen
