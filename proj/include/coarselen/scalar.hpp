#pragma once

// Number types used throughout the library.
//
// Rational is an exact, always-reduced fraction backed by GMP. Algorithms in
// lie.hpp, words.hpp, dynamics.hpp and region.hpp are templates over a field
// type F and are instantiated with Rational (exact), double (float) or Scalar,
// the runtime-tagged union of the two used at the CLI and Python boundary.
//
// Generic code only relies on F op F, F op int, int op F, comparisons, and the
// free functions abs / to_float / is_exact below.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "coarselen/error.hpp"

namespace coarselen {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q", and decimal/scientific literals ("0.25", "-1e-3"),
  /// all converted without rounding.
  static Rational parse(std::string_view text);

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  /// "p/q", or "p" when the denominator is one.
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline double abs(double a) { return a < 0 ? -a : a; }
inline double to_float(const Rational& a) { return a.to_double(); }
inline double to_float(double a) { return a; }
inline bool is_exact(const Rational&) { return true; }
inline bool is_exact(double) { return false; }

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
/// Parses a decimal or "p/q" literal to the nearest double.
double parse_double(std::string_view text);

enum class Mode { Exact, Float };

/// A number tagged with its arithmetic mode. Mixing modes in one operation
/// throws Error{ModeMismatch}; integer operands adopt the mode of the Scalar.
class Scalar {
 public:
  Scalar() : value_(Rational{}) {}
  static Scalar exact(Rational q) { return Scalar(std::move(q)); }
  static Scalar real(double d) { return Scalar(d); }
  static Scalar integer(long n, Mode mode);
  static Scalar parse(std::string_view text, Mode mode);

  Mode mode() const { return value_.index() == 0 ? Mode::Exact : Mode::Float; }
  const Rational& rational() const;
  double to_double() const;
  /// "p/q" in exact mode, shortest round-trip decimal in float mode.
  std::string str() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator+(const Scalar& a, long b) { return a + integer(b, a.mode()); }
  friend Scalar operator+(long a, const Scalar& b) { return integer(a, b.mode()) + b; }
  friend Scalar operator-(const Scalar& a, long b) { return a - integer(b, a.mode()); }
  friend Scalar operator-(long a, const Scalar& b) { return integer(a, b.mode()) - b; }
  friend Scalar operator*(const Scalar& a, long b) { return a * integer(b, a.mode()); }
  friend Scalar operator*(long a, const Scalar& b) { return integer(a, b.mode()) * b; }
  friend Scalar operator/(const Scalar& a, long b) { return a / integer(b, a.mode()); }
  friend Scalar operator/(long a, const Scalar& b) { return integer(a, b.mode()) / b; }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, long b) { return a == integer(b, a.mode()); }
  friend std::partial_ordering operator<=>(const Scalar& a, long b) {
    return a <=> integer(b, a.mode());
  }

 private:
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(double d) : value_(d) {}

  std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& a);
inline double to_float(const Scalar& a) { return a.to_double(); }
inline bool is_exact(const Scalar& a) { return a.mode() == Mode::Exact; }

template <class F>
concept Field = std::copyable<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { 1 - a } -> std::convertible_to<F>;
  { a * 2 } -> std::convertible_to<F>;
  { a / 12 } -> std::convertible_to<F>;
  { a < b } -> std::convertible_to<bool>;
  { a < 0 } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { to_float(a) } -> std::same_as<double>;
  { is_exact(a) } -> std::same_as<bool>;
  { abs(a) } -> std::convertible_to<F>;
};

/// Zero of the same mode as `like`.
template <Field F>
F zero_like(const F& like) {
  return like * 0;
}

/// Exact equality in exact mode; |a - b| <= tol in float mode.
template <Field F>
bool approx_equal(const F& a, const F& b, double tol) {
  if (is_exact(a)) return a == b;
  return abs(to_float(a) - to_float(b)) <= tol;
}

/// (3 - sqrt 5) / 2, the double nearest to the upper end of the diagonal of M'.
inline constexpr double kGoldenGap = 0.38196601125010515;

/// True iff x^2 - 3x + 1 == 0 (exact), i.e. x is (3 -+ sqrt 5)/2. No rational
/// satisfies this; in float mode the residual is compared against `tol`.
template <Field F>
bool is_golden_gap_root(const F& x, double tol = 0.0) {
  const F r = x * x - x * 3 + 1;
  if (is_exact(x)) return r == 0;
  return abs(to_float(r)) <= tol;
}

}  // namespace coarselen
