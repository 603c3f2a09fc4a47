#include "coarselen/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace coarselen {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ModeMismatch: return "mode mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::ParameterOutOfRange: return "parameter out of range";
    case ErrorKind::InvalidSigmaWord: return "invalid sigma word";
    case ErrorKind::NotInSigmaImage: return "not in sigma image";
    case ErrorKind::PatternCapExceeded: return "pattern cap exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::ToleranceFailure: return "tolerance failure";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.q_) == 0) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return numerator();
  return numerator() + "/" + denominator();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::Parse, "not a number: '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(whole);
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  std::string_view s = text;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_text = s.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
      bad_number(text);
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad_number(text);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  mpz_class mant(digits.empty() ? std::string("0") : digits, 10);
  if (neg) mant = -mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(mant, scale) : mpq_class(mant * scale, 1);
  q.canonicalize();
  return Rational(q);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return Rational::parse(text).to_double();
  std::string_view s = text;
  if (s.starts_with('+')) s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_number(text);
  return value;
}

Scalar Scalar::integer(long n, Mode mode) {
  return mode == Mode::Exact ? Scalar(Rational(n)) : Scalar(static_cast<double>(n));
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  return mode == Mode::Exact ? Scalar(Rational::parse(text)) : Scalar(parse_double(text));
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorKind::ModeMismatch, "float scalar has no exact value");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_double();
  return std::get<double>(value_);
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->str();
  return format_double(std::get<double>(value_));
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op, const char* name) {
  if (a.mode() != b.mode())
    throw Error(ErrorKind::ModeMismatch, std::string("mixed exact/float operands in ") + name);
  if (a.mode() == Mode::Exact) return Scalar::exact(op(a.rational(), b.rational()));
  return Scalar::real(op(a.to_double(), b.to_double()));
}

}  // namespace

Scalar Scalar::operator-() const {
  if (mode() == Mode::Exact) return Scalar(-rational());
  return Scalar(-to_double());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; }, "+");
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; }, "-");
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; }, "*");
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.mode() == Mode::Float && b.mode() == a.mode() && b.to_double() == 0.0)
    throw Error(ErrorKind::DivisionByZero, "float division by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; }, "/");
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw Error(ErrorKind::ModeMismatch, "mixed exact/float comparison");
  if (a.mode() == Mode::Exact) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw Error(ErrorKind::ModeMismatch, "mixed exact/float comparison");
  if (a.mode() == Mode::Exact) return a.rational() <=> b.rational();
  return a.to_double() <=> b.to_double();
}

Scalar abs(const Scalar& a) {
  if (a.mode() == Mode::Exact) return Scalar::exact(abs(a.rational()));
  return Scalar::real(std::fabs(a.to_double()));
}

}  // namespace coarselen
