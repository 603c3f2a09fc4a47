#include "doctest.h"

#include "coarselen/io.hpp"
#include "coarselen/verify.hpp"
#include "tensor_oracle.hpp"

using namespace coarselen;
using Q = Rational;
using W = RWord<Q>;

namespace {

W word(std::initializer_list<std::pair<char, Q>> letters) {
  W w;
  for (const auto& [g, e] : letters) w.letters.push_back({g == 'X' ? Generator::X : Generator::Y, e});
  return w;
}

SigmaWord<Q> sigma(std::vector<SigmaBlock<Q>> blocks) { return SigmaWord<Q>::from_blocks(std::move(blocks)); }

// Word evaluation in the tensor model: product of exp(t X) / exp(t Y), then log.
AlgebraVector<Q> oracle_evaluate(const W& w) {
  oracle::Tensor acc = oracle::letter("");
  for (const auto& l : w.letters)
    acc = acc * oracle::exp(oracle::scale(l.exponent, oracle::letter(l.generator == Generator::X ? "X" : "Y")));
  return oracle::read(oracle::log(acc));
}

}  // namespace

TEST_CASE("length and coarse length") {
  CHECK(length(word({{'X', 1}, {'Y', 1}})) == 2);
  CHECK(length(W{}) == 0);
  CHECK(length(RWord<double>{{{Generator::X, 0.5}, {Generator::Y, -0.25}}}) == 0.75);
  CHECK(coarse_length(word({{'X', 1}, {'Y', 1}})) == 2);
  CHECK(coarse_length(W{}) == 0);
  for (long n : {1, 2, 5, 17}) CHECK(coarse_length(balanced_word(n, Q(1)).to_rword()) == static_cast<std::size_t>(2 * n));
}

TEST_CASE("evaluate_word") {
  CHECK(evaluate_word(word({{'X', 1}, {'Y', 1}})) == AlgebraVector<Q>{1, 1, 1, 1, 1});
  CHECK(evaluate_word(W{}) == AlgebraVector<Q>{});
  const W w = word({{'X', Q(1, 2)}, {'Y', 1}, {'X', Q(1, 2)}});
  const auto g = evaluate_word(w);
  CHECK(g[0] == 1);
  CHECK(g[1] == 1);
  CHECK(project(extract_uvw(g)) == XYPoint<Q>{Q(1, 4), Q(1, 2)});

  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const W r = random_sigma_word(rng, 6).to_rword();
    CHECK(evaluate_word(r) == oracle_evaluate(r));
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(word({{'X', Q(1, 2)}, {'X', Q(1, 2)}, {'Y', 1}})) == word({{'X', 1}, {'Y', 1}}));
  CHECK(normalize(word({{'X', 0}, {'Y', 1}})) == word({{'Y', 1}}));
  CHECK(normalize(word({{'X', 1}, {'Y', 0}, {'X', 1}})) == word({{'X', 2}}));
  CHECK(normalize(word({{'X', 1}, {'Y', 1}, {'Y', -1}, {'X', 1}})) == word({{'X', 2}}));

  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    W w;
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int j = 0; j < n; ++j)
      w.letters.push_back({rng() % 2 ? Generator::X : Generator::Y, rng() % 3 == 0 ? Q(0) : random_rational(rng, 4, 3)});
    const W nw = normalize(w);
    CHECK(evaluate_word(nw) == evaluate_word(w));
    CHECK(coarse_length(nw) <= coarse_length(w));
    CHECK(normalize(nw) == nw);
  }
}

TEST_CASE("word maps") {
  const auto xy = SigmaWord<Q>::xy(Q(1));
  CHECK(normalize(word_map_a(xy, Q(1, 2)).to_rword()) == word({{'X', Q(1, 2)}, {'Y', 1}, {'X', Q(1, 2)}}));
  CHECK(normalize(word_map_a(xy, Q(0)).to_rword()) == normalize(xy.to_rword()));
  CHECK(normalize(word_map_a(xy, Q(1)).to_rword()) == word({{'Y', 1}, {'X', 1}}));
  CHECK(normalize(word_map_b(SigmaWord<Q>::yx(Q(1)), Q(1, 4)).to_rword()) ==
        word({{'Y', Q(3, 4)}, {'X', 1}, {'Y', Q(1, 4)}}));
  CHECK_THROWS_AS(word_map_a(xy, Q(3, 2)), Error);
  CHECK_THROWS_AS(word_map_b(xy, Q(-1, 2)), Error);
}

TEST_CASE("balanced words") {
  CHECK(balanced_word(1, Q(1)) == SigmaWord<Q>::xy(Q(1)));
  CHECK(balanced_word(2, Q(1)) == sigma({{Q(1, 2), Q(1, 2)}, {Q(1, 2), Q(1, 2)}}));
  CHECK(word_map_b(word_map_a(balanced_word(1, Q(1)), Q(1, 2)), Q(1, 2)) == balanced_word(2, Q(1)));
  for (long n = 2; n <= 12; ++n)
    CHECK(word_map_b(word_map_a(balanced_word(n - 1, Q(1)), Q(1, n)), Q(1, n)) == balanced_word(n, Q(1)));
  CHECK_THROWS_AS(balanced_word(0, Q(1)), Error);
}

TEST_CASE("validate_sigma") {
  CHECK(validate_sigma(word({{'X', 1}, {'Y', 1}})).block_count() == 1);
  CHECK_THROWS_AS(validate_sigma(word({{'X', 2}, {'Y', 1}})), Error);
  CHECK(validate_sigma(word({{'Y', Q(1, 2)}, {'X', 1}, {'Y', Q(1, 2)}})) ==
        sigma({{Q(0), Q(1, 2)}, {Q(1), Q(1, 2)}}));
  CHECK_THROWS_AS(validate_sigma(word({{'X', Q(3, 2)}, {'Y', 1}, {'X', Q(-1, 2)}})), Error);
  CHECK_THROWS_AS(validate_sigma(W{}), Error);
  CHECK(validate_sigma(word({{'X', Q(1, 2)}, {'X', Q(1, 2)}, {'Y', 1}})).block_count() == 1);

  // float tolerance is 1e-12 absolute on each sum
  RWord<double> nearly{{{Generator::X, 0.5}, {Generator::Y, 1.0}, {Generator::X, 0.5 + 5e-13}}};
  CHECK_NOTHROW(validate_sigma(nearly));
  nearly.letters.back().exponent = 0.5 + 5e-12;
  CHECK_THROWS_AS(validate_sigma(nearly), Error);
}

TEST_CASE("property: Sigma invariants under word maps") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    SigmaWord<Q> w = rng() % 2 ? SigmaWord<Q>::xy(Q(1)) : SigmaWord<Q>::yx(Q(1));
    const int steps = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < steps; ++i) {
      const Q t = random_unit_rational(rng, 16);
      const auto before = normalize(w.to_rword());
      w = rng() % 2 ? word_map_a(w, t) : word_map_b(w, t);
      const auto after = normalize(w.to_rword());
      CHECK(length(after) == 2);
      CHECK(coarse_length(after) <= coarse_length(before) + 1);
    }
    const auto r = w.to_rword();
    CHECK_NOTHROW(validate_sigma(r));
    CHECK(validate_sigma(normalize(r)).blocks().size() >= 1);
    const auto g = evaluate_word(r);
    CHECK(g[0] == 1);
    CHECK(g[1] == 1);
  }
}

TEST_CASE("word text format") {
  const auto w = parse_word("X^0.5 Y^1 X^1/2", Mode::Exact);
  CHECK(format_word(w) == "X^1/2 Y^1 X^1/2");
  CHECK(parse_word("", Mode::Exact).letters.empty());
  CHECK(format_word(parse_word("  X^{0.25}  Y ", Mode::Float)) == "X^0.25 Y^1");
  CHECK_THROWS_AS(parse_word("Z^1", Mode::Exact), Error);
  CHECK_THROWS_AS(parse_word("X^", Mode::Exact), Error);
  CHECK_THROWS_AS(parse_word("X1", Mode::Exact), Error);
  CHECK_THROWS_AS(parse_word("X^abc", Mode::Float), Error);
}
