#pragma once

// R-words over {X, Y} and the subset Sigma of words
//
//   X^{s_1} Y^{t_1} ... X^{s_N} Y^{t_N},   s_i, t_i >= 0,  sum s_i = sum t_i = 1.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coarselen/lie.hpp"

namespace coarselen {

template <Field F>
struct Letter {
  Generator generator;
  F exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

template <Field F>
struct RWord {
  std::vector<Letter<F>> letters;

  friend bool operator==(const RWord&, const RWord&) = default;
};

/// Absolute tolerance on the unit X- and Y-mass of a float-mode Sigma word.
inline constexpr double kSigmaSumTolerance = 1e-12;

/// |w|: left-to-right product of the one-parameter subgroup elements.
template <Field F>
GroupElement<F> evaluate_word(const RWord<F>& w) {
  GroupElement<F> acc;
  if (!w.letters.empty()) acc = zero_vector(w.letters.front().exponent);
  for (const auto& letter : w.letters)
    acc = multiply(acc, generator_power(letter.generator, letter.exponent));
  return acc;
}

/// Sum of absolute exponents. The empty word has length F{} (exact zero for Scalar).
template <Field F>
F length(const RWord<F>& w) {
  if (w.letters.empty()) return F{};
  F total = abs(w.letters.front().exponent);
  for (std::size_t i = 1; i < w.letters.size(); ++i) total = total + abs(w.letters[i].exponent);
  return total;
}

template <Field F>
std::size_t coarse_length(const RWord<F>& w) {
  return w.letters.size();
}

/// Merges runs of equal generators and drops zero exponents until no change.
template <Field F>
RWord<F> normalize(const RWord<F>& w) {
  std::vector<Letter<F>> out;
  out.reserve(w.letters.size());
  for (const auto& letter : w.letters) {
    if (letter.exponent == 0) continue;
    if (!out.empty() && out.back().generator == letter.generator) {
      out.back().exponent = out.back().exponent + letter.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return RWord<F>{std::move(out)};
}

template <Field F>
struct SigmaBlock {
  F s;  // X exponent
  F t;  // Y exponent

  friend bool operator==(const SigmaBlock&, const SigmaBlock&) = default;
};

template <Field F>
class SigmaWord {
 public:
  /// Checks nonnegativity and unit X/Y mass; throws Error{InvalidSigmaWord}.
  static SigmaWord from_blocks(std::vector<SigmaBlock<F>> blocks);

  /// X Y
  static SigmaWord xy(const F& one) { return SigmaWord({{one, one}}); }
  /// Y X, stored as the blocks (0, 1), (1, 0).
  static SigmaWord yx(const F& one) {
    const F z = zero_like(one);
    return SigmaWord({{z, one}, {one, z}});
  }

  const std::vector<SigmaBlock<F>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// All 2N letters, zero exponents included.
  RWord<F> to_rword() const;

  /// Replaces every X^s by X^{s(1-t)} and appends X^t.
  SigmaWord map_a(const F& t) const;
  /// Replaces every Y^s by Y^{s(1-t)} and appends Y^t.
  SigmaWord map_b(const F& t) const;

  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;

 private:
  explicit SigmaWord(std::vector<SigmaBlock<F>> blocks) : blocks_(std::move(blocks)) {}

  std::vector<SigmaBlock<F>> blocks_;
};

namespace detail {

template <Field F>
void require_unit_interval(const F& t, const char* what) {
  if (t < 0 || 1 < t)
    throw Error(ErrorKind::ParameterOutOfRange,
                std::string(what) + ": t must lie in [0,1], got " + std::to_string(to_float(t)));
}

}  // namespace detail

template <Field F>
SigmaWord<F> SigmaWord<F>::from_blocks(std::vector<SigmaBlock<F>> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidSigmaWord, "sigma word needs at least one block");
  F sx = zero_like(blocks.front().s), sy = sx;
  for (const auto& b : blocks) {
    if (b.s < 0 || b.t < 0)
      throw Error(ErrorKind::InvalidSigmaWord, "negative exponent in sigma word");
    sx = sx + b.s;
    sy = sy + b.t;
  }
  const F one = sx * 0 + 1;
  if (!approx_equal(sx, one, kSigmaSumTolerance))
    throw Error(ErrorKind::InvalidSigmaWord, "X exponents sum to " + std::to_string(to_float(sx)) + ", not 1");
  if (!approx_equal(sy, one, kSigmaSumTolerance))
    throw Error(ErrorKind::InvalidSigmaWord, "Y exponents sum to " + std::to_string(to_float(sy)) + ", not 1");
  return SigmaWord(std::move(blocks));
}

template <Field F>
RWord<F> SigmaWord<F>::to_rword() const {
  RWord<F> w;
  w.letters.reserve(2 * blocks_.size());
  for (const auto& b : blocks_) {
    w.letters.push_back({Generator::X, b.s});
    w.letters.push_back({Generator::Y, b.t});
  }
  return w;
}

template <Field F>
SigmaWord<F> SigmaWord<F>::map_a(const F& t) const {
  detail::require_unit_interval(t, "word_map_a");
  const F keep = 1 - t;
  std::vector<SigmaBlock<F>> out;
  out.reserve(blocks_.size() + 1);
  for (const auto& b : blocks_) out.push_back({b.s * keep, b.t});
  // The word ends in a Y block, so the new X letter opens a block of its own.
  out.push_back({t, zero_like(t)});
  return SigmaWord(std::move(out));
}

template <Field F>
SigmaWord<F> SigmaWord<F>::map_b(const F& t) const {
  detail::require_unit_interval(t, "word_map_b");
  const F keep = 1 - t;
  std::vector<SigmaBlock<F>> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back({b.s, b.t * keep});
  // Y^t joins the trailing Y letter.
  out.back().t = out.back().t + t;
  return SigmaWord(std::move(out));
}

template <Field F>
SigmaWord<F> word_map_a(const SigmaWord<F>& w, const F& t) {
  return w.map_a(t);
}

template <Field F>
SigmaWord<F> word_map_b(const SigmaWord<F>& w, const F& t) {
  return w.map_b(t);
}

/// (X^{1/n} Y^{1/n})^n
template <Field F>
SigmaWord<F> balanced_word(long n, const F& one) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "balanced_word needs n >= 1");
  const F step = one / n;
  return SigmaWord<F>::from_blocks(std::vector<SigmaBlock<F>>(static_cast<std::size_t>(n), {step, step}));
}

/// Groups an R-word into alternating X/Y blocks, inserting zero exponents
/// where a block starts with Y or ends with X, then checks the Sigma constraints.
template <Field F>
SigmaWord<F> validate_sigma(const RWord<F>& w) {
  if (w.letters.empty()) throw Error(ErrorKind::InvalidSigmaWord, "empty word is not in Sigma");
  const F z = zero_like(w.letters.front().exponent);
  std::vector<SigmaBlock<F>> blocks;
  bool previous_x = false;
  for (const auto& letter : w.letters) {
    if (letter.generator == Generator::X) {
      if (previous_x)
        blocks.back().s = blocks.back().s + letter.exponent;
      else
        blocks.push_back({letter.exponent, z});
      previous_x = true;
    } else {
      if (blocks.empty())
        blocks.push_back({z, letter.exponent});
      else
        blocks.back().t = blocks.back().t + letter.exponent;
      previous_x = false;
    }
  }
  return SigmaWord<F>::from_blocks(std::move(blocks));
}

}  // namespace coarselen
