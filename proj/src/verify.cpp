#include "coarselen/verify.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace coarselen {

Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return Rational(num(rng), den(rng));
}

Rational random_unit_rational(Rng& rng, long max_den) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Rational(std::uniform_int_distribution<long>(0, den - 1)(rng), den);
}

AlgebraVector<Rational> random_vector(Rng& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng),
          random_rational(rng)};
}

SigmaWord<Rational> random_sigma_word(Rng& rng, int max_blocks) {
  const int n = std::uniform_int_distribution<int>(1, max_blocks)(rng);
  std::uniform_int_distribution<long> weight(0, 9);
  std::vector<long> ws(static_cast<std::size_t>(n)), wt(static_cast<std::size_t>(n));
  long sum_s = 0, sum_t = 0;
  for (int i = 0; i < n; ++i) {
    sum_s += ws[static_cast<std::size_t>(i)] = weight(rng);
    sum_t += wt[static_cast<std::size_t>(i)] = weight(rng);
  }
  // all-zero draws put the whole mass in one random block
  if (sum_s == 0) sum_s = ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)] = 1;
  if (sum_t == 0) sum_t = wt[std::uniform_int_distribution<std::size_t>(0, wt.size() - 1)(rng)] = 1;
  std::vector<SigmaBlock<Rational>> blocks;
  for (int i = 0; i < n; ++i)
    blocks.push_back({Rational(ws[static_cast<std::size_t>(i)], sum_s), Rational(wt[static_cast<std::size_t>(i)], sum_t)});
  return SigmaWord<Rational>::from_blocks(std::move(blocks));
}

SigmaWord<double> to_double(const SigmaWord<Rational>& w) {
  std::vector<SigmaBlock<double>> blocks;
  for (const auto& b : w.blocks()) blocks.push_back({b.s.to_double(), b.t.to_double()});
  return SigmaWord<double>::from_blocks(std::move(blocks));
}

XYPoint<Rational> random_interior_point(Rng& rng, long den) {
  std::uniform_int_distribution<long> coord(0, den);
  for (;;) {
    XYPoint<Rational> p{Rational(coord(rng), den), Rational(coord(rng), den)};
    if (membership(p).status == RegionStatus::InteriorMember) return p;
  }
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::Algebra: return "algebra";
    case Suite::Commutation: return "commutation";
    case Suite::Invariance: return "invariance";
    case Suite::Convergence: return "convergence";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Algebra, Suite::Commutation, Suite::Invariance, Suite::Convergence})
    if (name == to_string(s)) return s;
  throw Error(ErrorKind::Parse, "unknown suite '" + name + "' (algebra, commutation, invariance, convergence)");
}

namespace {

constexpr double kAlgebraTolerance = 1e-12;
constexpr double kCommutationTolerance = 1e-10;

AlgebraVector<double> to_double(const AlgebraVector<Rational>& a) {
  return {a[0].to_double(), a[1].to_double(), a[2].to_double(), a[3].to_double(), a[4].to_double()};
}

template <Field F>
bool vec_near(const AlgebraVector<F>& a, const AlgebraVector<F>& b, double tol) {
  for (std::size_t i = 0; i < 5; ++i)
    if (!approx_equal(a[i], b[i], tol)) return false;
  return true;
}

template <Field F>
bool uvw_near(const UVWPoint<F>& a, const UVWPoint<F>& b, double tol) {
  return approx_equal(a.u, b.u, tol) && approx_equal(a.v, b.v, tol) && approx_equal(a.w, b.w, tol);
}

template <Field F>
bool xy_near(const XYPoint<F>& a, const XYPoint<F>& b, double tol) {
  return approx_equal(a.x, b.x, tol) && approx_equal(a.y, b.y, tol);
}

struct Tally {
  long trials = 0, failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++trials;
    if (!ok && failures++ == 0) first = what;
  }
};

template <Field F>
void algebra_trial(const AlgebraVector<F>& a, const AlgebraVector<F>& b, const AlgebraVector<F>& c,
                   const AlgebraVector<F>& d, Tally& tally) {
  tally.check(vec_near(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), kAlgebraTolerance),
              "associativity");
  const auto jacobi = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
  tally.check(vec_near(jacobi, zero_vector(a[0]), kAlgebraTolerance), "Jacobi identity");
  tally.check(vec_near(bracket(a, bracket(b, bracket(c, d))), zero_vector(a[0]), 0.0), "step-3 vanishing");
  const auto ab = multiply(a, b);
  tally.check(approx_equal(ab[0], a[0] + b[0], 0.0) && approx_equal(ab[1], a[1] + b[1], 0.0),
              "abelianization homomorphism");
}

template <Field F>
void commutation_trial(const SigmaWord<F>& w, const F& t, Tally& tally) {
  const auto base = eval_uvw(w);
  tally.check(uvw_near(eval_uvw(w.map_a(t)), map_a_uvw(t, base), kCommutationTolerance), "a_t commutation");
  tally.check(uvw_near(eval_uvw(w.map_b(t)), map_b_uvw(t, base), kCommutationTolerance), "b_t commutation");
  tally.check(xy_near(project(map_a_uvw(t, base)), map_a_xy(t, project(base)), kCommutationTolerance),
              "a_t intertwining");
  tally.check(xy_near(project(map_b_uvw(t, base)), map_b_xy(t, project(base)), kCommutationTolerance),
              "b_t intertwining");
}

template <Field F>
void invariance_trial(const XYPoint<F>& p, const F& t, Tally& tally) {
  tally.check(membership(map_a_xy(t, p)).member(), "a_t left the region");
  tally.check(membership(map_b_xy(t, p)).member(), "b_t left the region");
}

template <Field F>
void convergence_run(long n_max, Tally& tally) {
  const F one = F(1), third = one / 3;
  double previous = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= n_max; ++n) {
    const auto w = balanced_word(n, one);
    auto g = evaluate_word(w.to_rword());
    g[0] = g[0] - 1;
    g[1] = g[1] - 1;
    F sq = g[0] * g[0];
    for (std::size_t i = 1; i < 5; ++i) sq = sq + g[i] * g[i];
    const double norm = std::sqrt(to_float(sq));
    tally.check(norm <= 3.0 / static_cast<double>(n), "norm bound at n=" + std::to_string(n));
    tally.check(norm <= previous, "monotone norm at n=" + std::to_string(n));
    previous = norm;
    const auto p = eval_xy(w);
    const F dx = p.x - third, dy = p.y - third;
    tally.check(std::sqrt(to_float(dx * dx + dy * dy)) <= 3.0 / static_cast<double>(n),
                "xy distance bound at n=" + std::to_string(n));
  }
}

}  // namespace

SuiteResult run_suite(Suite suite, const VerifyOptions& options) {
  Rng rng(options.seed);
  Tally tally;
  const bool exact = options.mode == Mode::Exact;
  auto trials = [&](long fallback) { return options.trials > 0 ? options.trials : fallback; };

  switch (suite) {
    case Suite::Algebra:
      for (long i = 0, n = trials(10000); i < n; ++i) {
        const auto a = random_vector(rng), b = random_vector(rng), c = random_vector(rng), d = random_vector(rng);
        if (exact) {
          algebra_trial(a, b, c, d, tally);
        } else {
          // unit scale
          const Rational s(1, 20);
          algebra_trial(to_double(s * a), to_double(s * b), to_double(s * c), to_double(s * d), tally);
        }
      }
      break;
    case Suite::Commutation:
      for (long i = 0, n = trials(10000); i < n; ++i) {
        const auto w = random_sigma_word(rng);
        const auto t = random_unit_rational(rng);
        if (exact)
          commutation_trial(w, t, tally);
        else
          commutation_trial(to_double(w), t.to_double(), tally);
      }
      break;
    case Suite::Invariance:
      for (long i = 0, n = trials(100000); i < n; ++i) {
        const auto p = random_interior_point(rng);
        const auto t = random_unit_rational(rng, 1024);
        if (exact)
          invariance_trial(p, t, tally);
        else
          invariance_trial(XYPoint<double>{p.x.to_double(), p.y.to_double()}, t.to_double(), tally);
      }
      break;
    case Suite::Convergence:
      if (exact)
        convergence_run<Rational>(trials(256), tally);
      else
        convergence_run<double>(trials(256), tally);
      break;
  }

  SuiteResult result{suite, tally.failures == 0, tally.trials, tally.failures, {}};
  std::ostringstream detail;
  detail << tally.trials << " checks, " << tally.failures << " failures";
  if (tally.failures) detail << " (first: " << tally.first << ")";
  result.detail = detail.str();
  return result;
}

}  // namespace coarselen
