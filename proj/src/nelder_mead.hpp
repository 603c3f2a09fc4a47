#pragma once

// Nelder-Mead simplex descent on the unit box [0,1]^n. Trial points are
// projected onto the box before evaluation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

namespace coarselen::detail {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct SimplexOptions {
  int max_iterations = 500;
  double parameter_tolerance = 1e-10;
  double initial_step = 0.1;
};

using Objective = std::function<double(std::span<const double>)>;

inline void clamp_unit(std::vector<double>& x) {
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
}

inline SimplexResult simplex_minimize(const Objective& f, std::vector<double> start,
                                      const SimplexOptions& opt) {
  const std::size_t n = start.size();
  SimplexResult result;
  clamp_unit(start);
  if (n == 0) {
    result.value = f(start);
    result.evaluations = 1;
    result.converged = true;
    result.x = std::move(start);
    return result;
  }

  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double& v = pts[i + 1][i];
    v = v + opt.initial_step <= 1.0 ? v + opt.initial_step : v - opt.initial_step;
  }
  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](double coef, std::vector<double>& out) {
    const auto& worst = pts[order[n]];
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
    clamp_unit(out);
  };

  bool converged = false;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });

    double size = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        size = std::max(size, std::abs(pts[order[i]][j] - pts[order[0]][j]));
    if (size <= opt.parameter_tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[order[i]][j] / static_cast<double>(n);

    const double best = vals[order[0]], second_worst = vals[order[n - 1]], worst = vals[order[n]];
    along(-1.0, trial);
    const double fr = eval(trial);
    if (fr < best) {
      along(-2.0, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[order[n]] = trial2;
        vals[order[n]] = fe;
      } else {
        pts[order[n]] = trial;
        vals[order[n]] = fr;
      }
      continue;
    }
    if (fr < second_worst) {
      pts[order[n]] = trial;
      vals[order[n]] = fr;
      continue;
    }
    const bool outside = fr < worst;
    along(outside ? -0.5 : 0.5, trial2);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : worst)) {
      pts[order[n]] = trial2;
      vals[order[n]] = fc;
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t i = 1; i <= n; ++i) {
      auto& p = pts[order[i]];
      for (std::size_t j = 0; j < n; ++j) p[j] = pts[order[0]][j] + 0.5 * (p[j] - pts[order[0]][j]);
      vals[order[i]] = eval(p);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  result.x = pts[best];
  result.value = vals[best];
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

}  // namespace coarselen::detail
