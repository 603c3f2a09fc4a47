#pragma once

// Text, JSON and CSV forms of the library's values.
//
//   word text   "X^0.5 Y^1 X^1/2"   (whitespace-separated X^<num> / Y^<num>)
//   word JSON   [["X", "1/2"], ["Y", "1"]]
//   numbers     JSON strings: "p/q" in exact mode, shortest decimal in float mode
//   points      JSON arrays of numbers, [u, v, w] or [x, y]
//   elements    JSON array of the five basis coordinates

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coarselen/search.hpp"

namespace coarselen {

using json = nlohmann::json;

inline std::string number_text(const Rational& q) { return q.str(); }
inline std::string number_text(double d) { return format_double(d); }
inline std::string number_text(const Scalar& s) { return s.str(); }

const char* to_string(Generator g);
const char* to_string(Seed seed);
const char* to_string(MapKind kind);

/// Parses the word text grammar; a bare "X" means X^1.
RWord<Scalar> parse_word(std::string_view text, Mode mode);

template <Field F>
std::string format_word(const RWord<F>& w) {
  std::string out;
  for (const auto& letter : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(letter.generator);
    out += '^';
    out += number_text(letter.exponent);
  }
  return out;
}

template <Field F>
json to_json(const RWord<F>& w) {
  json arr = json::array();
  for (const auto& letter : w.letters) arr.push_back({to_string(letter.generator), number_text(letter.exponent)});
  return arr;
}

template <Field F>
json to_json(const GroupElement<F>& g) {
  json arr = json::array();
  for (const auto& c : g.c) arr.push_back(number_text(c));
  return arr;
}

template <Field F>
json to_json(const UVWPoint<F>& p) {
  return json::array({number_text(p.u), number_text(p.v), number_text(p.w)});
}

template <Field F>
json to_json(const XYPoint<F>& p) {
  return json::array({number_text(p.x), number_text(p.y)});
}

json to_json(const MapSequence& seq);
json to_json(const SearchReport& report);
json to_json(const DiagonalReport& report);
json to_json(const SynthesisResult& result);

RWord<Scalar> word_from_json(const json& j, Mode mode);
GroupElement<Scalar> element_from_json(const json& j, Mode mode);
XYPoint<Scalar> xy_from_json(const json& j, Mode mode);
UVWPoint<Scalar> uvw_from_json(const json& j, Mode mode);
MapSequence sequence_from_json(const json& j);

/// Columns: k, distance, pattern, t_vector (t values separated by ';').
std::string profile_csv(const std::vector<ProfileRow>& rows);

struct TrajectoryRow {
  long n;
  double x, y;
  /// Euclidean distance from (x, y) to (1/3, 1/3).
  double distance;
};

/// eval_xy of the balanced words for n = 1..n_max, computed exactly.
std::vector<TrajectoryRow> balanced_trajectory(long n_max);
/// Columns: n, x, y, distance.
std::string trajectory_csv(const std::vector<TrajectoryRow>& rows);

}  // namespace coarselen
