#include <cmath>

#include "doctest.h"

#include "coarselen/io.hpp"
#include "coarselen/region.hpp"

using namespace coarselen;
using Q = Rational;

namespace {

const double s = kGoldenGap;

SearchConfig fast_config() {
  SearchConfig cfg;
  cfg.threads = 1;
  return cfg;
}

// Dense-grid oracle for one map: minimum over seeds, kinds and t on a grid.
double grid_min_one_step(const XYPoint<double>& target, int points) {
  double best = 1e9;
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1), r = 1 - t;
    const XYPoint<double> cands[] = {{r * r, t}, {1, 0}, {0, 1}, {t, r * r}};
    for (const auto& c : cands) best = std::min(best, std::hypot(c.x - target.x, c.y - target.y));
  }
  return best;
}

}  // namespace

TEST_CASE("apply_sequence") {
  CHECK(apply_sequence(MapSequence{Seed::XY, {}}) == XYPoint<double>{1, 0});
  CHECK(apply_sequence(MapSequence{Seed::YX, {}}) == XYPoint<double>{0, 1});
  const auto p = apply_sequence(MapSequence{Seed::XY, {{MapKind::A, s}}});
  CHECK(p.x == doctest::Approx(s).epsilon(1e-15));
  CHECK(p.y == s);
  const BasicMapSequence<Q> seq{Seed::XY, {{MapKind::A, Q(1, 2)}, {MapKind::B, Q(1, 2)}}};
  CHECK(apply_sequence(seq) == XYPoint<Q>{Q(5, 8), Q(1, 8)});
  CHECK(apply_sequence_uvw(BasicMapSequence<Q>{Seed::YX, {}}) == UVWPoint<Q>{-1, 1, 1});
}

TEST_CASE("seq_to_word") {
  const BasicMapSequence<Q> one{Seed::XY, {{MapKind::A, Q(1, 2)}}};
  const auto w = normalize(seq_to_word(one).to_rword());
  CHECK(format_word(w) == "X^1/2 Y^1 X^1/2");
  CHECK(coarse_length(w) == 3);
  CHECK(seq_to_word(BasicMapSequence<Q>{Seed::XY, {}}) == SigmaWord<Q>::xy(Q(1)));
  const BasicMapSequence<Q> two{Seed::XY, {{MapKind::A, Q(1, 2)}, {MapKind::B, Q(1, 2)}}};
  CHECK(seq_to_word(two) == balanced_word(2, Q(1)));
  CHECK(eval_xy(seq_to_word(two)) == apply_sequence(two));
}

TEST_CASE("nearest_reachable") {
  const auto cfg = fast_config();
  for (int k : {0, 1, 3}) CHECK(nearest_reachable({1, 0}, k, cfg).distance == 0.0);

  const auto diag = nearest_reachable({s, s}, 1, cfg);
  CHECK(diag.distance <= 1e-9);

  const XYPoint<double> third{1.0 / 3, 1.0 / 3};
  const auto r1 = nearest_reachable(third, 1, cfg);
  const double oracle = grid_min_one_step(third, 100001);
  CHECK(r1.distance > 0.0);
  CHECK(std::abs(r1.distance - oracle) <= 1e-6);

  // report consistency: the word realizes best_point and has length 2
  const auto w = seq_to_word(r1.best_sequence);
  const auto p = eval_xy(w);
  CHECK(std::hypot(p.x - r1.best_point.x, p.y - r1.best_point.y) <= 1e-10);
  CHECK(length(w.to_rword()) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r1.evaluations > 0);

  CHECK_THROWS_AS(nearest_reachable(third, 13, cfg), Error);
  CHECK_THROWS_AS(nearest_reachable(third, -1, cfg), Error);
}

TEST_CASE("pattern sampling beyond the cap") {
  auto cfg = fast_config();
  cfg.pattern_cap = 2;
  cfg.sample_patterns = true;
  cfg.pattern_samples = 16;
  cfg.multistarts = 2;
  const auto r = nearest_reachable({0.4, 0.3}, 4, cfg);
  CHECK(r.best_sequence.steps.size() == 4);
  CHECK(std::isfinite(r.distance));
}

TEST_CASE("deterministic across thread counts") {
  auto serial = fast_config();
  auto threaded = fast_config();
  threaded.threads = 4;
  const XYPoint<double> target{0.3, 0.4};
  const auto a = nearest_reachable(target, 3, serial), b = nearest_reachable(target, 3, threaded);
  CHECK(a.distance == b.distance);
  CHECK(a.best_sequence == b.best_sequence);
}

TEST_CASE("coarse_length_profile") {
  const auto cfg = fast_config();
  const auto seed_rows = coarse_length_profile({1, 0}, 3, cfg);
  REQUIRE(seed_rows.size() == 3);
  for (const auto& row : seed_rows) CHECK(row.report.distance == 0.0);

  const auto rows = coarse_length_profile({1.0 / 3, 1.0 / 3}, 4, cfg);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].k == static_cast<int>(i) + 1);
    CHECK(rows[i].report.distance > 0.0);
    if (i) CHECK(rows[i].report.distance <= rows[i - 1].report.distance);
    CHECK(rows[i].report.best_sequence.steps.size() == i + 1);
  }
  CHECK(std::abs(rows[0].report.distance - grid_min_one_step({1.0 / 3, 1.0 / 3}, 100001)) <= 1e-6);
}

TEST_CASE("uvw objective") {
  const auto cfg = fast_config();
  const auto r = nearest_reachable_uvw({1, 1, 1}, 2, cfg);
  CHECK(r.distance <= 1e-12);
  CHECK(r.space == SearchSpace::UVW);
  const auto g0 = nearest_reachable_uvw({0, 0, 0}, 2, cfg);
  CHECK(g0.distance > 0.0);
  // the planar image is no farther than the R^3 distance allows
  const auto proj = project(g0.best_uvw);
  CHECK(proj.x == doctest::Approx(g0.best_point.x).epsilon(1e-12));
}

TEST_CASE("diagonal_gap") {
  const auto cfg = fast_config();
  const auto d1 = diagonal_gap(1, cfg);
  CHECK(std::abs(d1.gap - (s - 1.0 / 3)) <= 1e-9);
  CHECK(d1.gap == doctest::Approx(0.0486).epsilon(1e-3));
  CHECK(d1.sequence.seed == Seed::XY);
  REQUIRE(d1.sequence.steps.size() == 1);
  CHECK(d1.sequence.steps[0].t == doctest::Approx(s).epsilon(1e-12));

  double previous = d1.gap;
  for (int k = 2; k <= 4; ++k) {
    const auto r = diagonal_gap(k, cfg);
    CHECK(r.gap > 0.0);
    CHECK(r.gap <= previous);
    CHECK(std::abs(r.point.x - r.point.y) <= cfg.diagonal_tolerance);
    CHECK(membership(r.point).member());
    previous = r.gap;
  }
  CHECK_THROWS_AS(diagonal_gap(0, cfg), Error);
}

TEST_CASE("synthesize_word") {
  const auto cfg = fast_config();
  const auto a = synthesize_word({0.25, 0.5}, cfg);
  REQUIRE(a.success);
  CHECK(format_word(normalize(a.word->to_rword())) == "X^0.5 Y^1 X^0.5");
  CHECK(a.residual == 0.0);

  const auto b = synthesize_word({s, s}, cfg);
  REQUIRE(b.success);
  const auto bw = normalize(b.word->to_rword());
  REQUIRE(bw.letters.size() == 3);
  CHECK(bw.letters[0].exponent == doctest::Approx(1 - s));
  CHECK(bw.letters[2].exponent == doctest::Approx(s));
  CHECK(b.residual <= 1e-9);

  const auto c = synthesize_word({1, 0}, cfg);
  REQUIRE(c.success);
  CHECK(format_word(normalize(c.word->to_rword())) == "X^1 Y^1");

  const auto d = synthesize_word({0.6, 0.2}, cfg);
  REQUIRE(d.success);
  CHECK(d.residual <= 1e-9);
  CHECK(membership(eval_xy(*d.word)).member());

  CHECK_THROWS_AS(synthesize_word({0.5, 0.5}, cfg), Error);
}
