#pragma once

// Membership in M', the projection of the image of Sigma:
//
//   M' \ {(1,0), (0,1)} = { x < 1, y < 1, 4x > 3(1-y)^2, 4y > 3(1-x)^2,
//                           x <= (1-y)^2  or  y <= (1-x)^2 }.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coarselen/dynamics.hpp"

namespace coarselen {

enum class RegionStatus { InteriorMember, EndpointMember, Outside };

/// The defining conditions, in the order they are checked.
enum class Condition { XBelowOne, YBelowOne, QuadraticX, QuadraticY, OrClause };

const char* to_string(RegionStatus status);
/// Human-readable inequality, e.g. "4x > 3(1-y)^2".
const char* to_string(Condition condition);

struct RegionVerdict {
  RegionStatus status = RegionStatus::Outside;
  std::optional<Condition> failed_condition;
  /// The failed strict condition held with equality, i.e. the point lies on
  /// the open boundary of the region.
  bool boundary_equality = false;

  bool member() const { return status != RegionStatus::Outside; }
};

/// Strict conditions must hold with margin `eps` (float mode only).
struct EpsilonPolicy {
  double eps = 0.0;
};

template <Field F>
RegionVerdict membership(const XYPoint<F>& p, EpsilonPolicy policy = {}) {
  if (is_exact(p.x) && policy.eps != 0.0)
    throw Error(ErrorKind::ParameterOutOfRange, "exact-mode membership requires eps = 0");

  const F zero = zero_like(p.x), one = zero + 1;
  if ((p.x == one && p.y == zero) || (p.x == zero && p.y == one))
    return {RegionStatus::EndpointMember, std::nullopt, false};

  // lhs > rhs, with margin in float mode
  auto strict = [&](const F& lhs, const F& rhs) {
    if (is_exact(lhs)) return rhs < lhs;
    return to_float(lhs) - to_float(rhs) > policy.eps;
  };
  auto fail = [](Condition c, bool equality) {
    return RegionVerdict{RegionStatus::Outside, c, equality};
  };

  if (!strict(one, p.x)) return fail(Condition::XBelowOne, p.x == one);
  if (!strict(one, p.y)) return fail(Condition::YBelowOne, p.y == one);
  const F ox = one - p.x, oy = one - p.y;
  const F qx_lhs = p.x * 4, qx_rhs = oy * oy * 3;
  if (!strict(qx_lhs, qx_rhs)) return fail(Condition::QuadraticX, qx_lhs == qx_rhs);
  const F qy_lhs = p.y * 4, qy_rhs = ox * ox * 3;
  if (!strict(qy_lhs, qy_rhs)) return fail(Condition::QuadraticY, qy_lhs == qy_rhs);
  if (!(p.x <= oy * oy || p.y <= ox * ox)) return fail(Condition::OrClause, false);
  return {RegionStatus::InteriorMember, std::nullopt, false};
}

/// The diagonal of M': points (d, d) with lower < d <= upper.
struct DiagonalInterval {
  Rational lower;
  double upper;
  bool lower_open = true;
  bool upper_closed = true;
};

/// (1/3, (3 - sqrt 5)/2]. On x = y the quadratic conditions reduce to
/// 3x^2 - 10x + 3 < 0 and the or-clause to x^2 - 3x + 1 >= 0.
DiagonalInterval diagonal_interval();

struct Polyline {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// The six bounding curves of M', each sampled at `count` parameter values
/// and clipped to the unit square.
std::vector<Polyline> boundary_sample(int count);

enum class RenderFormat { Svg, Csv };

struct RenderOptions {
  int curve_samples = 201;
  int resolution = 512;
  EpsilonPolicy policy{};
};

struct Marker {
  std::string label;
  double x, y;
};

/// (1,0), (0,1), (1/3,1/3), (s,s).
std::vector<Marker> figure_markers();

std::string render_svg(const RenderOptions& options = {});
std::string render_csv(const RenderOptions& options = {});
void render_region(const std::string& path, RenderFormat format, const RenderOptions& options = {});

}  // namespace coarselen
