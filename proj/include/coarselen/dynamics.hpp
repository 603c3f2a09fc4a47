#pragma once

// The word maps a_t, b_t seen through evaluation. A Sigma word evaluates to
// (1, 1, u, v, w); the maps act on (u, v, w) by explicit polynomials, and the
// affine projection
//
//   x = (v + 3u + 2) / 6,   y = (w - 3u + 2) / 6
//
// turns them into the planar maps
//
//   a_t(x, y) = ((1-t)^2 x, (1-t) y + t),   b_t(x, y) = ((1-t) x + t, (1-t)^2 y).
//
// The planar maps are written out independently of the R^3 ones so that the
// intertwining relation is a real check on both.

#include "coarselen/words.hpp"

namespace coarselen {

template <Field F>
struct UVWPoint {
  F u, v, w;
  friend bool operator==(const UVWPoint&, const UVWPoint&) = default;
};

template <Field F>
struct XYPoint {
  F x, y;
  friend bool operator==(const XYPoint&, const XYPoint&) = default;
};

/// Tolerance on (c1, c2) = (1, 1) for float-mode extraction.
inline constexpr double kAbelianTolerance = 1e-9;

template <Field F>
UVWPoint<F> extract_uvw(const GroupElement<F>& g) {
  const F one = g[0] * 0 + 1;
  if (!approx_equal(g[0], one, kAbelianTolerance) || !approx_equal(g[1], one, kAbelianTolerance))
    throw Error(ErrorKind::NotInSigmaImage,
                "group element does not project to (1,1) in G/[G,G]: (" +
                    std::to_string(to_float(g[0])) + ", " + std::to_string(to_float(g[1])) + ")");
  return {g[2], g[3], g[4]};
}

template <Field F>
UVWPoint<F> map_a_uvw(const F& t, const UVWPoint<F>& p) {
  detail::require_unit_interval(t, "map_a_uvw");
  const F r = 1 - t;
  return {r * p.u - t,
          r * r * p.v - t * r * p.u * 3 + t * (t * 2 - 1),
          r * p.w + t};
}

template <Field F>
UVWPoint<F> map_b_uvw(const F& t, const UVWPoint<F>& p) {
  detail::require_unit_interval(t, "map_b_uvw");
  const F r = 1 - t;
  return {r * p.u + t,
          r * p.v + t,
          r * r * p.w + t * r * p.u * 3 + t * (t * 2 - 1)};
}

template <Field F>
XYPoint<F> project(const UVWPoint<F>& p) {
  return {(p.v + p.u * 3 + 2) / 6, (p.w - p.u * 3 + 2) / 6};
}

template <Field F>
XYPoint<F> map_a_xy(const F& t, const XYPoint<F>& p) {
  detail::require_unit_interval(t, "map_a_xy");
  const F r = 1 - t;
  return {r * r * p.x, r * p.y + t};
}

template <Field F>
XYPoint<F> map_b_xy(const F& t, const XYPoint<F>& p) {
  detail::require_unit_interval(t, "map_b_xy");
  const F r = 1 - t;
  return {r * p.x + t, r * r * p.y};
}

template <Field F>
UVWPoint<F> eval_uvw(const SigmaWord<F>& w) {
  return extract_uvw(evaluate_word(w.to_rword()));
}

template <Field F>
XYPoint<F> eval_xy(const SigmaWord<F>& w) {
  return project(eval_uvw(w));
}

}  // namespace coarselen
