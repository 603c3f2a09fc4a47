#include "coarselen/region.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace coarselen {

const char* to_string(RegionStatus status) {
  switch (status) {
    case RegionStatus::InteriorMember: return "InteriorMember";
    case RegionStatus::EndpointMember: return "EndpointMember";
    case RegionStatus::Outside: return "Outside";
  }
  return "?";
}

const char* to_string(Condition condition) {
  switch (condition) {
    case Condition::XBelowOne: return "x < 1";
    case Condition::YBelowOne: return "y < 1";
    case Condition::QuadraticX: return "4x > 3(1-y)^2";
    case Condition::QuadraticY: return "4y > 3(1-x)^2";
    case Condition::OrClause: return "x <= (1-y)^2 or y <= (1-x)^2";
  }
  return "?";
}

DiagonalInterval diagonal_interval() {
  return {Rational(1, 3), kGoldenGap, true, true};
}

std::vector<Polyline> boundary_sample(int count) {
  if (count < 2) throw Error(ErrorKind::ParameterOutOfRange, "boundary_sample needs count >= 2");
  struct Curve {
    const char* label;
    std::pair<double, double> (*at)(double);
  };
  static constexpr Curve curves[] = {
      {"x=1", [](double s) { return std::pair{1.0, s}; }},
      {"y=1", [](double s) { return std::pair{s, 1.0}; }},
      {"4x=3(1-y)^2", [](double s) { return std::pair{0.75 * (1 - s) * (1 - s), s}; }},
      {"4y=3(1-x)^2", [](double s) { return std::pair{s, 0.75 * (1 - s) * (1 - s)}; }},
      {"x=(1-y)^2", [](double s) { return std::pair{(1 - s) * (1 - s), s}; }},
      {"y=(1-x)^2", [](double s) { return std::pair{s, (1 - s) * (1 - s)}; }},
  };
  auto inside = [](const std::pair<double, double>& p) {
    return p.first >= 0 && p.first <= 1 && p.second >= 0 && p.second <= 1;
  };

  std::vector<Polyline> out;
  for (const auto& curve : curves) {
    Polyline line{curve.label, {}};
    line.points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const auto p = curve.at(static_cast<double>(i) / (count - 1));
      if (inside(p)) line.points.push_back(p);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<Marker> figure_markers() {
  return {{"(1,0)", 1.0, 0.0},
          {"(0,1)", 0.0, 1.0},
          {"(1/3,1/3)", 1.0 / 3, 1.0 / 3},
          {"(s,s)", kGoldenGap, kGoldenGap}};
}

namespace {

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_svg(const RenderOptions& options) {
  const int n = options.resolution;
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "render resolution must be positive");
  const double cell = 1.0 / n;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-0.05 -0.05 1.1 1.1\" "
         "width=\"800\" height=\"800\">\n"
      << "<title>M' with s = (3 - sqrt 5)/2</title>\n"
      << "<g transform=\"matrix(1 0 0 -1 0 1)\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.002\"/>\n";

  // Shading: cells whose centre is a member, merged into horizontal runs.
  svg << "<g class=\"region\" fill=\"#9ecae1\" stroke=\"none\" data-resolution=\"" << n << "\">\n";
  for (int row = 0; row < n; ++row) {
    const double y = (row + 0.5) * cell;
    int run_start = -1;
    for (int col = 0; col <= n; ++col) {
      bool in = false;
      if (col < n) {
        const double x = (col + 0.5) * cell;
        in = membership(XYPoint<double>{x, y}, options.policy).member();
      }
      if (in && run_start < 0) run_start = col;
      if (!in && run_start >= 0) {
        svg << "<rect x=\"" << num(run_start * cell) << "\" y=\"" << num(row * cell) << "\" width=\""
            << num((col - run_start) * cell) << "\" height=\"" << num(cell) << "\"/>\n";
        run_start = -1;
      }
    }
  }
  svg << "</g>\n";

  for (const auto& line : boundary_sample(options.curve_samples)) {
    svg << "<path class=\"boundary\" data-label=\"" << line.label
        << "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"0.003\" d=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i)
      svg << (i == 0 ? "M" : " L") << num(line.points[i].first) << "," << num(line.points[i].second);
    svg << "\"/>\n";
  }

  for (const auto& m : figure_markers()) {
    const auto verdict = membership(XYPoint<double>{m.x, m.y});
    svg << "<circle class=\"marker\" data-label=\"" << m.label << "\" data-verdict=\""
        << to_string(verdict.status) << "\" cx=\"" << num(m.x) << "\" cy=\"" << num(m.y)
        << "\" r=\"0.008\" fill=\"#d62728\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::string render_csv(const RenderOptions& options) {
  std::ostringstream csv;
  csv << "curve_label,x,y\n";
  for (const auto& line : boundary_sample(options.curve_samples))
    for (const auto& [x, y] : line.points) csv << line.label << ',' << num(x) << ',' << num(y) << '\n';
  return csv.str();
}

void render_region(const std::string& path, RenderFormat format, const RenderOptions& options) {
  const std::string body = format == RenderFormat::Svg ? render_svg(options) : render_csv(options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace coarselen
