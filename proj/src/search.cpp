#include "coarselen/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "coarselen/region.hpp"
#include "nelder_mead.hpp"

namespace coarselen {

namespace {

using detail::SimplexOptions;
using detail::SimplexResult;

struct Pattern {
  Seed seed;
  std::vector<MapKind> kinds;
};

// Lexicographic: seeds XY before YX, then kind strings with A < B.
std::vector<Pattern> enumerate_patterns(int k, const SearchConfig& cfg, std::uint64_t tag) {
  if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "number of map steps must be >= 0");
  std::vector<Pattern> out;
  if (k <= cfg.pattern_cap) {
    const std::uint64_t count = std::uint64_t{1} << k;
    out.reserve(2 * count);
    for (Seed seed : {Seed::XY, Seed::YX})
      for (std::uint64_t bits = 0; bits < count; ++bits) {
        Pattern p{seed, std::vector<MapKind>(static_cast<std::size_t>(k))};
        for (int i = 0; i < k; ++i)
          p.kinds[static_cast<std::size_t>(i)] = ((bits >> (k - 1 - i)) & 1U) ? MapKind::B : MapKind::A;
        out.push_back(std::move(p));
      }
    return out;
  }
  if (!cfg.sample_patterns)
    throw Error(ErrorKind::PatternCapExceeded,
                "k = " + std::to_string(k) + " exceeds pattern cap " + std::to_string(cfg.pattern_cap) +
                    " (enable pattern sampling)");
  std::seed_seq seq{cfg.seed, tag, static_cast<std::uint64_t>(k), std::uint64_t{0xbadcafe}};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(0.5);
  out.reserve(static_cast<std::size_t>(cfg.pattern_samples));
  for (int s = 0; s < cfg.pattern_samples; ++s) {
    Pattern p{coin(rng) ? Seed::YX : Seed::XY, std::vector<MapKind>(static_cast<std::size_t>(k))};
    for (auto& kind : p.kinds) kind = coin(rng) ? MapKind::B : MapKind::A;
    out.push_back(std::move(p));
  }
  return out;
}

std::mt19937_64 item_rng(const SearchConfig& cfg, std::uint64_t tag, std::size_t item) {
  std::seed_seq seq{cfg.seed, tag, static_cast<std::uint64_t>(item)};
  return std::mt19937_64(seq);
}

/// `count` points in [0,1]^dim, one per stratum in every coordinate.
std::vector<std::vector<double>> latin_hypercube(std::size_t dim, int count, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(count);
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> strata(n);
  for (std::size_t d = 0; d < dim; ++d) {
    std::iota(strata.begin(), strata.end(), std::size_t{0});
    std::shuffle(strata.begin(), strata.end(), rng);
    for (std::size_t i = 0; i < n; ++i) pts[i][d] = (static_cast<double>(strata[i]) + unit(rng)) / static_cast<double>(n);
  }
  return pts;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

// Unchecked planar maps for the inner loops; t is already clamped to [0,1].
inline void step_xy(MapKind kind, double t, double& x, double& y) {
  const double r = 1.0 - t;
  if (kind == MapKind::A) {
    x = r * r * x;
    y = r * y + t;
  } else {
    x = r * x + t;
    y = r * r * y;
  }
}

inline void step_uvw(MapKind kind, double t, double& u, double& v, double& w) {
  const double r = 1.0 - t, c = t * (2.0 * t - 1.0);
  if (kind == MapKind::A) {
    v = r * r * v - 3.0 * t * r * u + c;
    w = r * w + t;
    u = r * u - t;
  } else {
    v = r * v + t;
    w = r * r * w + 3.0 * t * r * u + c;
    u = r * u + t;
  }
}

void fold_xy(const Pattern& p, std::span<const double> ts, double& x, double& y) {
  x = p.seed == Seed::XY ? 1.0 : 0.0;
  y = 1.0 - x;
  for (std::size_t i = 0; i < p.kinds.size(); ++i) step_xy(p.kinds[i], ts[i], x, y);
}

MapSequence make_sequence(const Pattern& p, std::span<const double> ts) {
  MapSequence seq{p.seed, {}};
  for (std::size_t i = 0; i < p.kinds.size(); ++i) seq.steps.push_back({p.kinds[i], std::clamp(ts[i], 0.0, 1.0)});
  return seq;
}

struct ItemBest {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  long evaluations = 0;
  bool converged = false;
};

// Multistart simplex descent over every pattern; deterministic reduction in
// pattern order, then start order.
template <class MakeObjective>
std::pair<std::size_t, ItemBest> minimize_over_patterns(const std::vector<Pattern>& patterns,
                                                        const std::vector<std::size_t>& dims,
                                                        const SearchConfig& cfg, std::uint64_t tag,
                                                        MakeObjective make_objective) {
  std::vector<ItemBest> results(patterns.size());
  const SimplexOptions opt{cfg.max_iterations, cfg.parameter_tolerance, 0.1};
  parallel_for(patterns.size(), cfg.threads, [&](std::size_t i) {
    const detail::Objective f = make_objective(patterns[i]);
    auto rng = item_rng(cfg, tag, i);
    ItemBest best;
    const std::size_t dim = dims[i];
    const int starts = dim == 0 ? 1 : std::max(1, cfg.multistarts);
    for (const auto& start : latin_hypercube(dim, starts, rng)) {
      SimplexResult r = detail::simplex_minimize(f, start, opt);
      best.evaluations += r.evaluations;
      if (dim > 0) {
        // one restart from the converged point guards against a collapsed simplex
        SimplexResult again = detail::simplex_minimize(f, r.x, opt);
        best.evaluations += again.evaluations;
        if (again.value <= r.value) r = std::move(again);
      }
      if (r.value < best.value) {
        best.value = r.value;
        best.x = r.x;
        best.converged = r.converged;
      }
    }
    results[i] = std::move(best);
  });

  std::size_t arg = 0;
  long evals = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    evals += results[i].evaluations;
    if (results[i].value < results[arg].value) arg = i;
  }
  ItemBest out = std::move(results[arg]);
  out.evaluations = evals;
  return {arg, std::move(out)};
}

constexpr std::uint64_t kTagXY = 1, kTagUVW = 2, kTagDiagonal = 3, kTagSynthesis = 4;

SearchReport finish_report(const Pattern& p, const ItemBest& best, SearchSpace space) {
  SearchReport report;
  report.best_sequence = make_sequence(p, best.x);
  report.best_point = apply_sequence(report.best_sequence);
  report.best_uvw = apply_sequence_uvw(report.best_sequence);
  report.space = space;
  report.evaluations = best.evaluations;
  report.converged = best.converged;
  return report;
}

template <class Point, class Search>
std::vector<ProfileRow> profile(const Point& target, int k_max, const SearchConfig& cfg, Search search) {
  if (k_max < 0) throw Error(ErrorKind::ParameterOutOfRange, "k_max must be >= 0");
  std::vector<ProfileRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    SearchReport report = search(target, k, cfg);
    if (!rows.empty() && report.distance > rows.back().report.distance) {
      const long evals = report.evaluations;
      report = rows.back().report;
      report.best_sequence.steps.push_back({MapKind::A, 0.0});
      report.evaluations = evals;
    }
    rows.push_back({k, std::move(report)});
  }
  return rows;
}

}  // namespace

SearchReport nearest_reachable(const XYPoint<double>& target, int k, const SearchConfig& cfg) {
  const auto patterns = enumerate_patterns(k, cfg, kTagXY);
  const std::vector<std::size_t> dims(patterns.size(), static_cast<std::size_t>(k));
  auto [arg, best] = minimize_over_patterns(patterns, dims, cfg, kTagXY, [&](const Pattern& p) {
    return [&p, target](std::span<const double> ts) {
      double x, y;
      fold_xy(p, ts, x, y);
      return (x - target.x) * (x - target.x) + (y - target.y) * (y - target.y);
    };
  });
  SearchReport report = finish_report(patterns[arg], best, SearchSpace::XY);
  report.distance = std::hypot(report.best_point.x - target.x, report.best_point.y - target.y);
  return report;
}

SearchReport nearest_reachable_uvw(const UVWPoint<double>& target, int k, const SearchConfig& cfg) {
  const auto patterns = enumerate_patterns(k, cfg, kTagUVW);
  const std::vector<std::size_t> dims(patterns.size(), static_cast<std::size_t>(k));
  auto [arg, best] = minimize_over_patterns(patterns, dims, cfg, kTagUVW, [&](const Pattern& p) {
    return [&p, target](std::span<const double> ts) {
      double u = p.seed == Seed::XY ? 1.0 : -1.0, v = 1.0, w = 1.0;
      for (std::size_t i = 0; i < p.kinds.size(); ++i) step_uvw(p.kinds[i], ts[i], u, v, w);
      return (u - target.u) * (u - target.u) + (v - target.v) * (v - target.v) + (w - target.w) * (w - target.w);
    };
  });
  SearchReport report = finish_report(patterns[arg], best, SearchSpace::UVW);
  const auto& p = report.best_uvw;
  report.distance = std::sqrt((p.u - target.u) * (p.u - target.u) + (p.v - target.v) * (p.v - target.v) +
                              (p.w - target.w) * (p.w - target.w));
  return report;
}

std::vector<ProfileRow> coarse_length_profile(const XYPoint<double>& target, int k_max, const SearchConfig& cfg) {
  return profile(target, k_max, cfg, [](const auto& t, int k, const SearchConfig& c) { return nearest_reachable(t, k, c); });
}

std::vector<ProfileRow> coarse_length_profile_uvw(const UVWPoint<double>& target, int k_max,
                                                  const SearchConfig& cfg) {
  return profile(target, k_max, cfg,
                 [](const auto& t, int k, const SearchConfig& c) { return nearest_reachable_uvw(t, k, c); });
}

namespace {

struct Landing {
  MapKind kind;
  double t;
  double d;
};

// The unique final step from (x, y) that lands on the diagonal.
Landing land_on_diagonal(double x, double y) {
  const bool a_step = x >= y;
  const double lead = a_step ? x : y, lin = a_step ? 1.0 - y : 1.0 - x;
  // positive root of lead u^2 + lin u - 1 = 0, in the cancellation-free form
  const double u = 2.0 / (lin + std::sqrt(lin * lin + 4.0 * lead));
  return {a_step ? MapKind::A : MapKind::B, std::clamp(1.0 - u, 0.0, 1.0), u * u * lead};
}

}  // namespace

DiagonalReport diagonal_gap(int k, const SearchConfig& cfg) {
  if (k < 1) throw Error(ErrorKind::ParameterOutOfRange, "diagonal_gap needs k >= 1");
  std::vector<Pattern> prefixes;
  std::vector<std::size_t> dims;
  for (int j = 1; j <= k; ++j)
    for (auto& p : enumerate_patterns(j - 1, cfg, kTagDiagonal)) {
      dims.push_back(p.kinds.size());
      prefixes.push_back(std::move(p));
    }

  auto [arg, best] = minimize_over_patterns(prefixes, dims, cfg, kTagDiagonal, [&](const Pattern& p) {
    return [&p](std::span<const double> ts) {
      double x, y;
      fold_xy(p, ts, x, y);
      return land_on_diagonal(x, y).d;
    };
  });

  DiagonalReport report;
  report.sequence = make_sequence(prefixes[arg], best.x);
  const XYPoint<double> before = apply_sequence(report.sequence);
  const Landing last = land_on_diagonal(before.x, before.y);
  report.sequence.steps.push_back({last.kind, last.t});
  report.point = apply_sequence(report.sequence);
  report.d = 0.5 * (report.point.x + report.point.y);
  report.gap = report.d - 1.0 / 3.0;
  report.evaluations = best.evaluations;
  if (std::abs(report.point.x - report.point.y) > cfg.diagonal_tolerance)
    throw Error(ErrorKind::ToleranceFailure, "diagonal landing missed the diagonal by more than tol");
  return report;
}

namespace {

// Damped minimum-norm Gauss-Newton on apply_sequence(t) = target, t in [0,1]^m.
struct RootResult {
  std::vector<double> t;
  double residual = std::numeric_limits<double>::infinity();
  long evaluations = 0;
};

double fold_with_jacobian(const Pattern& p, std::span<const double> ts, const XYPoint<double>& target,
                          double res[2], std::vector<double>& jac) {
  const std::size_t m = p.kinds.size();
  double x = p.seed == Seed::XY ? 1.0 : 0.0, y = 1.0 - x;
  jac.assign(2 * m, 0.0);  // row-major 2 x m
  for (std::size_t i = 0; i < m; ++i) {
    const double t = ts[i], r = 1.0 - t;
    double dx, dy, gx, gy;  // diagonal of D_p map, and d map / dt
    if (p.kinds[i] == MapKind::A) {
      dx = r * r, dy = r, gx = -2.0 * r * x, gy = 1.0 - y;
    } else {
      dx = r, dy = r * r, gx = 1.0 - x, gy = -2.0 * r * y;
    }
    for (std::size_t j = 0; j < i; ++j) {
      jac[j] *= dx;
      jac[m + j] *= dy;
    }
    jac[i] = gx;
    jac[m + i] = gy;
    step_xy(p.kinds[i], t, x, y);
  }
  res[0] = x - target.x;
  res[1] = y - target.y;
  return std::hypot(res[0], res[1]);
}

RootResult solve_to_point(const Pattern& p, std::vector<double> t, const XYPoint<double>& target, double tol) {
  const std::size_t m = p.kinds.size();
  RootResult out;
  detail::clamp_unit(t);
  std::vector<double> jac, jac_trial, trial(m);
  double res[2], res_trial[2];
  double norm = fold_with_jacobian(p, t, target, res, jac);
  ++out.evaluations;
  double lambda = 1e-3;
  for (int iter = 0; iter < 200 && norm > tol && lambda < 1e12; ++iter) {
    // (J J^T + lambda I) z = res, delta = -J^T z
    double a = lambda, b = 0.0, c = lambda;
    for (std::size_t j = 0; j < m; ++j) {
      a += jac[j] * jac[j];
      b += jac[j] * jac[m + j];
      c += jac[m + j] * jac[m + j];
    }
    const double det = a * c - b * b;
    if (!(std::abs(det) > 0.0)) {
      lambda *= 10.0;
      continue;
    }
    const double z0 = (c * res[0] - b * res[1]) / det, z1 = (a * res[1] - b * res[0]) / det;
    for (std::size_t j = 0; j < m; ++j) trial[j] = std::clamp(t[j] - (jac[j] * z0 + jac[m + j] * z1), 0.0, 1.0);
    const double trial_norm = fold_with_jacobian(p, trial, target, res_trial, jac_trial);
    ++out.evaluations;
    if (trial_norm < norm) {
      t.swap(trial);
      jac.swap(jac_trial);
      res[0] = res_trial[0];
      res[1] = res_trial[1];
      norm = trial_norm;
      lambda = std::max(lambda / 3.0, 1e-15);
    } else {
      lambda *= 4.0;
    }
  }
  out.t = std::move(t);
  out.residual = norm;
  return out;
}

std::vector<MapKind> alternating(MapKind first, int m) {
  std::vector<MapKind> kinds(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    kinds[static_cast<std::size_t>(i)] = (i % 2 == 0) == (first == MapKind::A) ? MapKind::A : MapKind::B;
  return kinds;
}

// Searches alternating programs of 1..max_steps maps for one reaching `target`
// within `inner_tol`. Programs whose first map fixes the seed are skipped.
std::optional<MapSequence> reach_numerically(const XYPoint<double>& target, int max_steps, double inner_tol,
                                             const SearchConfig& cfg, long& evaluations) {
  std::size_t item = 0;
  for (int m = 1; m <= max_steps; ++m) {
    for (Seed seed : {Seed::XY, Seed::YX}) {
      const MapKind first = seed == Seed::XY ? MapKind::A : MapKind::B;
      const Pattern p{seed, alternating(first, m)};
      auto rng = item_rng(cfg, kTagSynthesis, item++);
      auto starts = latin_hypercube(static_cast<std::size_t>(m), std::max(1, cfg.multistarts), rng);
      std::vector<double> harmonic(static_cast<std::size_t>(m)), slow(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        harmonic[static_cast<std::size_t>(i)] = 1.0 / (i + 2);
        slow[static_cast<std::size_t>(i)] = 2.0 / (i + 3);
      }
      starts.insert(starts.begin(), {harmonic, slow});
      for (auto& start : starts) {
        RootResult r = solve_to_point(p, std::move(start), target, inner_tol);
        evaluations += r.evaluations;
        if (r.residual <= inner_tol) return make_sequence(p, r.t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SynthesisResult synthesize_word(const XYPoint<double>& target, const SearchConfig& cfg) {
  if (!membership(target).member())
    throw Error(ErrorKind::ParameterOutOfRange, "synthesis target (" + format_double(target.x) + ", " +
                                                    format_double(target.y) + ") is outside M'");
  const double tol = cfg.synthesis_tolerance;
  // Root-finding aims well below tol so that evaluating the word through the
  // group law still lands within tol.
  const double inner_tol = tol * 1e-3;
  SynthesisResult result;

  auto accept = [&](MapSequence seq, const char* method) {
    SigmaWord<double> word = seq_to_word(seq);
    const XYPoint<double> reached = eval_xy(word);
    const double residual = std::hypot(reached.x - target.x, reached.y - target.y);
    if (residual > tol) return false;
    result.success = true;
    result.word = std::move(word);
    result.sequence = std::move(seq);
    result.reached = reached;
    result.residual = residual;
    result.method = method;
    return true;
  };

  // Seeds and one map from a seed.
  if (target.x == 1.0 && target.y == 0.0 && accept({Seed::XY, {}}, "seed")) return result;
  if (target.x == 0.0 && target.y == 1.0 && accept({Seed::YX, {}}, "seed")) return result;
  if (accept({Seed::XY, {{MapKind::A, target.y}}}, "seed-step")) return result;
  if (accept({Seed::YX, {{MapKind::B, target.x}}}, "seed-step")) return result;

  // One map from a diagonal source (d, d), d in (1/3, s]. For a b-step,
  // (1-t) d + t = x and (1-t)^2 d = y give t^2 - (1+x) t + (x - y) = 0.
  struct Source {
    MapKind kind;
    double t, d;
  };
  std::vector<Source> sources;
  for (MapKind kind : {MapKind::B, MapKind::A}) {
    const double lead = kind == MapKind::B ? target.x : target.y;
    const double other = kind == MapKind::B ? target.y : target.x;
    const double disc = (1.0 + lead) * (1.0 + lead) - 4.0 * (lead - other);
    if (disc < 0.0) continue;
    for (double sign : {-1.0, 1.0}) {
      const double t = 0.5 * ((1.0 + lead) + sign * std::sqrt(disc));
      if (!(t >= 0.0 && t < 1.0)) continue;
      const double d = (lead - t) / (1.0 - t);
      if (d > 1.0 / 3.0 && d <= kGoldenGap + 1e-15) sources.push_back({kind, t, d});
    }
  }
  // Larger d needs fewer maps to reach.
  std::stable_sort(sources.begin(), sources.end(), [](const Source& a, const Source& b) { return a.d > b.d; });

  for (const Source& src : sources) {
    if (std::abs(src.d - kGoldenGap) <= inner_tol) {
      MapSequence seq{Seed::XY, {{MapKind::A, kGoldenGap}, {src.kind, src.t}}};
      if (accept(std::move(seq), "diagonal-step")) return result;
    }
  }
  for (const Source& src : sources) {
    if (auto prefix = reach_numerically({src.d, src.d}, cfg.synthesis_max_steps - 1, inner_tol, cfg,
                                        result.evaluations)) {
      prefix->steps.push_back({src.kind, src.t});
      if (accept(std::move(*prefix), "diagonal-source")) return result;
    }
  }

  if (auto seq = reach_numerically(target, cfg.synthesis_max_steps, inner_tol, cfg, result.evaluations))
    if (accept(std::move(*seq), "direct")) return result;

  // Report the closest attempt.
  const SearchReport closest = nearest_reachable(target, std::min(cfg.synthesis_max_steps, 6), cfg);
  result.success = false;
  result.sequence = closest.best_sequence;
  result.word = seq_to_word(closest.best_sequence);
  result.reached = eval_xy(*result.word);
  result.residual = std::hypot(result.reached.x - target.x, result.reached.y - target.y);
  result.evaluations += closest.evaluations;
  result.method = "none";
  result.message = "residual " + format_double(result.residual) + " exceeds tolerance " + format_double(tol) +
                   " within " + std::to_string(cfg.synthesis_max_steps) + " maps";
  return result;
}

}  // namespace coarselen
