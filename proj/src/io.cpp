#include "coarselen/io.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace coarselen {

const char* to_string(Generator g) { return g == Generator::X ? "X" : "Y"; }
const char* to_string(Seed seed) { return seed == Seed::XY ? "XY" : "YX"; }
const char* to_string(MapKind kind) { return kind == MapKind::A ? "A" : "B"; }

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

Generator parse_generator(std::string_view s) {
  if (s == "X") return Generator::X;
  if (s == "Y") return Generator::Y;
  parse_fail("unknown generator '" + std::string(s) + "'");
}

std::string as_number_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return format_double(j.get<double>());
  parse_fail("expected a number, got " + j.dump());
}

void require_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    parse_fail(std::string(what) + " must be an array of " + std::to_string(size) + " numbers");
}

}  // namespace

RWord<Scalar> parse_word(std::string_view text, Mode mode) {
  RWord<Scalar> w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;

    const Generator g = parse_generator(token.substr(0, 1));
    if (token.size() == 1) {
      w.letters.push_back({g, Scalar::integer(1, mode)});
      continue;
    }
    if (token[1] != '^' || token.size() == 2)
      parse_fail("malformed letter '" + std::string(token) + "', expected X^<num> or Y^<num>");
    std::string_view exponent = token.substr(2);
    if (exponent.size() >= 2 && exponent.front() == '{' && exponent.back() == '}')
      exponent = exponent.substr(1, exponent.size() - 2);
    w.letters.push_back({g, Scalar::parse(exponent, mode)});
  }
  return w;
}

json to_json(const MapSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) steps.push_back({to_string(s.kind), number_text(s.t)});
  return {{"seed", to_string(seq.seed)}, {"steps", steps}};
}

json to_json(const SearchReport& report) {
  const char* note = report.space == SearchSpace::XY
                         ? "distance is measured in the (x,y) projection; reaching an (x,y) target is necessary "
                           "but not sufficient for reaching the (u,v,w) target, so this lower-bounds difficulty"
                         : "distance is measured in (u,v,w)";
  return {{"best_sequence", to_json(report.best_sequence)},
          {"note", note},
          {"pattern", pattern_string(report.best_sequence)},
          {"best_point", to_json(report.best_point)},
          {"best_uvw", to_json(report.best_uvw)},
          {"space", report.space == SearchSpace::XY ? "xy" : "uvw"},
          {"distance", number_text(report.distance)},
          {"evaluations", report.evaluations},
          {"converged", report.converged}};
}

json to_json(const DiagonalReport& report) {
  return {{"gap", number_text(report.gap)},
          {"d", number_text(report.d)},
          {"sequence", to_json(report.sequence)},
          {"point", to_json(report.point)},
          {"evaluations", report.evaluations}};
}

json to_json(const SynthesisResult& result) {
  json j{{"success", result.success},
         {"sequence", to_json(result.sequence)},
         {"reached", to_json(result.reached)},
         {"residual", number_text(result.residual)},
         {"method", result.method},
         {"evaluations", result.evaluations}};
  if (result.word) {
    const auto w = normalize(result.word->to_rword());
    j["word"] = to_json(w);
    j["word_text"] = format_word(w);
  }
  if (!result.message.empty()) j["message"] = result.message;
  return j;
}

RWord<Scalar> word_from_json(const json& j, Mode mode) {
  if (!j.is_array()) parse_fail("word JSON must be a list of [generator, exponent] pairs");
  RWord<Scalar> w;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
      parse_fail("word letter must be [\"X\"|\"Y\", exponent], got " + pair.dump());
    w.letters.push_back({parse_generator(pair[0].get<std::string>()), Scalar::parse(as_number_text(pair[1]), mode)});
  }
  return w;
}

GroupElement<Scalar> element_from_json(const json& j, Mode mode) {
  require_array(j, 5, "group element");
  GroupElement<Scalar> g;
  for (std::size_t i = 0; i < 5; ++i) g[i] = Scalar::parse(as_number_text(j[i]), mode);
  return g;
}

XYPoint<Scalar> xy_from_json(const json& j, Mode mode) {
  require_array(j, 2, "xy point");
  return {Scalar::parse(as_number_text(j[0]), mode), Scalar::parse(as_number_text(j[1]), mode)};
}

UVWPoint<Scalar> uvw_from_json(const json& j, Mode mode) {
  require_array(j, 3, "uvw point");
  return {Scalar::parse(as_number_text(j[0]), mode), Scalar::parse(as_number_text(j[1]), mode),
          Scalar::parse(as_number_text(j[2]), mode)};
}

MapSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("seed") || !j.contains("steps"))
    parse_fail("map sequence JSON needs \"seed\" and \"steps\"");
  MapSequence seq;
  const auto seed = j.at("seed").get<std::string>();
  if (seed == "XY")
    seq.seed = Seed::XY;
  else if (seed == "YX")
    seq.seed = Seed::YX;
  else
    parse_fail("unknown seed '" + seed + "'");
  for (const auto& step : j.at("steps")) {
    if (!step.is_array() || step.size() != 2) parse_fail("map step must be [\"A\"|\"B\", t]");
    const auto kind = step[0].get<std::string>();
    if (kind != "A" && kind != "B") parse_fail("unknown map kind '" + kind + "'");
    const double t = parse_double(as_number_text(step[1]));
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "map parameter outside [0,1]");
    seq.steps.push_back({kind == "A" ? MapKind::A : MapKind::B, t});
  }
  return seq;
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream out;
  out << "k,distance,pattern,t_vector\n";
  for (const auto& row : rows) {
    const auto& seq = row.report.best_sequence;
    out << row.k << ',' << number_text(row.report.distance) << ',' << to_string(seq.seed) << ':'
        << pattern_string(seq) << ',';
    for (std::size_t i = 0; i < seq.steps.size(); ++i) out << (i ? ";" : "") << number_text(seq.steps[i].t);
    out << '\n';
  }
  return out.str();
}

std::vector<TrajectoryRow> balanced_trajectory(long n_max) {
  std::vector<TrajectoryRow> rows;
  for (long n = 1; n <= n_max; ++n) {
    const auto p = eval_xy(balanced_word(n, Rational(1)));
    const double x = p.x.to_double(), y = p.y.to_double();
    const Rational dx = p.x - Rational(1, 3), dy = p.y - Rational(1, 3);
    rows.push_back({n, x, y, std::sqrt((dx * dx + dy * dy).to_double())});
  }
  return rows;
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  std::ostringstream out;
  out << "n,x,y,distance\n";
  for (const auto& r : rows)
    out << r.n << ',' << number_text(r.x) << ',' << number_text(r.y) << ',' << number_text(r.distance) << '\n';
  return out.str();
}

}  // namespace coarselen
