#pragma once

// The free 3-step nilpotent Lie algebra g on two generators X, Y, in the basis
//
//   e1 = X, e2 = Y, e3 = 1/2 [X,Y], e4 = 1/12 [X,[X,Y]], e5 = 1/12 [Y,[Y,X]].
//
// The group G is identified with g through exponential coordinates, so a
// GroupElement is the same five numbers and the product is the truncated
// Baker-Campbell-Hausdorff series
//
//   a.b = a + b + 1/2 [a,b] + 1/12 [a,[a,b]] + 1/12 [b,[b,a]].

#include <array>
#include <cstddef>

#include "coarselen/scalar.hpp"

namespace coarselen {

template <Field F>
struct AlgebraVector {
  std::array<F, 5> c;

  AlgebraVector() : c{} {}
  AlgebraVector(F c1, F c2, F c3, F c4, F c5)
      : c{std::move(c1), std::move(c2), std::move(c3), std::move(c4), std::move(c5)} {}

  const F& operator[](std::size_t i) const { return c[i]; }
  F& operator[](std::size_t i) { return c[i]; }

  friend AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
  }
  friend AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
  }
  friend AlgebraVector operator*(const F& k, const AlgebraVector& a) {
    return {k * a[0], k * a[1], k * a[2], k * a[3], k * a[4]};
  }
  AlgebraVector operator-() const { return {-c[0], -c[1], -c[2], -c[3], -c[4]}; }
  friend bool operator==(const AlgebraVector& a, const AlgebraVector& b) { return a.c == b.c; }
};

template <Field F>
using GroupElement = AlgebraVector<F>;

enum class Generator { X, Y };

/// Zero vector in the arithmetic mode of `like`.
template <Field F>
AlgebraVector<F> zero_vector(const F& like) {
  const F z = zero_like(like);
  return {z, z, z, z, z};
}

/// [a,b] using [X,Y] = 2 e3, [X,e3] = 6 e4, [Y,e3] = -6 e5; brackets of
/// degree four and higher vanish.
template <Field F>
AlgebraVector<F> bracket(const AlgebraVector<F>& a, const AlgebraVector<F>& b) {
  const F z = zero_like(a[0]);
  return {z, z,
          (a[0] * b[1] - a[1] * b[0]) * 2,
          (a[0] * b[2] - a[2] * b[0]) * 6,
          (a[1] * b[2] - a[2] * b[1]) * -6};
}

template <Field F>
GroupElement<F> multiply(const GroupElement<F>& a, const GroupElement<F>& b) {
  const AlgebraVector<F> ab = bracket(a, b);
  const AlgebraVector<F> a_ab = bracket(a, ab);
  // [b,[b,a]] = -[b,[a,b]]
  const AlgebraVector<F> b_ab = bracket(b, ab);
  GroupElement<F> out;
  for (std::size_t i = 0; i < 5; ++i)
    out[i] = a[i] + b[i] + ab[i] / 2 + a_ab[i] / 12 - b_ab[i] / 12;
  return out;
}

/// In exponential coordinates the inverse is negation.
template <Field F>
GroupElement<F> inverse(const GroupElement<F>& a) {
  return -a;
}

template <Field F>
GroupElement<F> generator_power(Generator g, const F& t) {
  const F z = zero_like(t);
  if (g == Generator::X) return {t, z, z, z, z};
  return {z, t, z, z, z};
}

/// Lower bound |s| + |t| on the length of any word representing (s, t, ...),
/// obtained from the projection to G/[G,G].
template <Field F>
F abelianization_lower_bound(const GroupElement<F>& g) {
  return abs(g[0]) + abs(g[1]);
}

}  // namespace coarselen
