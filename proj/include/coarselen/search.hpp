#pragma once

// Reachability over finite programs of the maps a_t / b_t.
//
// Every Sigma word arises from XY or YX by a succession of word maps, so the
// reachable part of M' after k map applications is the image of [0,1]^k under
// the planar maps, for each seed and each A/B pattern. The searches here give
// upper bounds on distances to that set; they never certify lower bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarselen/dynamics.hpp"

namespace coarselen {

enum class Seed { XY, YX };
enum class MapKind { A, B };

template <Field F>
struct BasicMapStep {
  MapKind kind;
  F t;
  friend bool operator==(const BasicMapStep&, const BasicMapStep&) = default;
};

template <Field F>
struct BasicMapSequence {
  Seed seed = Seed::XY;
  std::vector<BasicMapStep<F>> steps;
  friend bool operator==(const BasicMapSequence&, const BasicMapSequence&) = default;
};

using MapStep = BasicMapStep<double>;
using MapSequence = BasicMapSequence<double>;

namespace detail {

template <Field F>
F unit_like(const BasicMapSequence<F>& seq) {
  if (seq.steps.empty()) return F{} + 1;
  return zero_like(seq.steps.front().t) + 1;
}

}  // namespace detail

/// Folds the planar maps over the seed's projection, (1,0) for XY and (0,1) for YX.
template <Field F>
XYPoint<F> apply_sequence(const BasicMapSequence<F>& seq) {
  const F one = detail::unit_like(seq), zero = zero_like(one);
  XYPoint<F> p = seq.seed == Seed::XY ? XYPoint<F>{one, zero} : XYPoint<F>{zero, one};
  for (const auto& step : seq.steps) p = step.kind == MapKind::A ? map_a_xy(step.t, p) : map_b_xy(step.t, p);
  return p;
}

/// Same program on (u,v,w), from (1,1,1) for XY and (-1,1,1) for YX.
template <Field F>
UVWPoint<F> apply_sequence_uvw(const BasicMapSequence<F>& seq) {
  const F one = detail::unit_like(seq);
  UVWPoint<F> p{seq.seed == Seed::XY ? one : -one, one, one};
  for (const auto& step : seq.steps) p = step.kind == MapKind::A ? map_a_uvw(step.t, p) : map_b_uvw(step.t, p);
  return p;
}

/// The Sigma word produced by the word maps; eval_xy of it equals apply_sequence.
template <Field F>
SigmaWord<F> seq_to_word(const BasicMapSequence<F>& seq) {
  const F one = detail::unit_like(seq);
  SigmaWord<F> w = seq.seed == Seed::XY ? SigmaWord<F>::xy(one) : SigmaWord<F>::yx(one);
  for (const auto& step : seq.steps) w = step.kind == MapKind::A ? w.map_a(step.t) : w.map_b(step.t);
  return w;
}

/// "AB..." for the step kinds of a sequence.
template <Field F>
std::string pattern_string(const BasicMapSequence<F>& seq) {
  std::string s;
  for (const auto& step : seq.steps) s += step.kind == MapKind::A ? 'A' : 'B';
  return s;
}

enum class SearchSpace { XY, UVW };

struct SearchConfig {
  std::uint64_t seed = 20100613;
  /// All 2^k patterns are enumerated up to this k.
  int pattern_cap = 12;
  /// Beyond the cap, sample `pattern_samples` random patterns instead of failing.
  bool sample_patterns = false;
  int pattern_samples = 4096;
  int multistarts = 8;
  int max_iterations = 500;
  double parameter_tolerance = 1e-10;
  double synthesis_tolerance = 1e-9;
  double diagonal_tolerance = 1e-9;
  /// Longest map program tried by synthesize_word.
  int synthesis_max_steps = 12;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct SearchReport {
  MapSequence best_sequence;
  XYPoint<double> best_point{0.0, 0.0};
  UVWPoint<double> best_uvw{0.0, 0.0, 0.0};
  SearchSpace space = SearchSpace::XY;
  double distance = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Best approximation of `target` by k map applications, over both seeds, all
/// A/B patterns, and multistart simplex descent in t. `distance` is an upper
/// bound on the true minimum.
SearchReport nearest_reachable(const XYPoint<double>& target, int k, const SearchConfig& cfg = {});

/// Same search with the Euclidean objective in (u,v,w) through the R^3 maps.
SearchReport nearest_reachable_uvw(const UVWPoint<double>& target, int k, const SearchConfig& cfg = {});

struct ProfileRow {
  int k = 0;
  SearchReport report;
};

/// nearest_reachable for k = 1..k_max, made nonincreasing by carrying the
/// previous best forward padded with a t = 0 step.
std::vector<ProfileRow> coarse_length_profile(const XYPoint<double>& target, int k_max,
                                              const SearchConfig& cfg = {});
std::vector<ProfileRow> coarse_length_profile_uvw(const UVWPoint<double>& target, int k_max,
                                                  const SearchConfig& cfg = {});

struct DiagonalReport {
  /// d - 1/3 for the lowest diagonal point (d, d) found.
  double gap = 0.0;
  double d = 0.0;
  MapSequence sequence;
  XYPoint<double> point{0.0, 0.0};
  long evaluations = 0;
};

/// Lowest diagonal point reachable with at most k map applications. The last
/// step is solved in closed form: from (x, y) with x >= y, an a-step lands on
/// the diagonal for the unique u = 1 - t in (0, 1] with x u^2 + (1-y) u = 1
/// (mirror for b), so only the first k-1 parameters are searched.
DiagonalReport diagonal_gap(int k, const SearchConfig& cfg = {});

struct SynthesisResult {
  bool success = false;
  std::optional<SigmaWord<double>> word;
  MapSequence sequence;
  XYPoint<double> reached{0.0, 0.0};
  /// Euclidean distance between eval_xy(word) and the target.
  double residual = 0.0;
  /// "seed", "seed-step", "diagonal-step", "diagonal-source", "direct".
  std::string method;
  std::string message;
  long evaluations = 0;
};

/// Constructs a Sigma word whose image in M' is within cfg.synthesis_tolerance
/// of `target`. Throws Error{ParameterOutOfRange} if the target is Outside.
/// Failure to converge within the step budget is returned, not thrown.
SynthesisResult synthesize_word(const XYPoint<double>& target, const SearchConfig& cfg = {});

}  // namespace coarselen
