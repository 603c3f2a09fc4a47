// coarselen: command-line front end.
//
// Exit codes: 0 success / member, 1 domain-negative (outside, not reached,
// suite failed), 2 usage or parse error, 3 internal tolerance failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coarselen/io.hpp"
#include "coarselen/verify.hpp"

using namespace coarselen;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kTolerance = 3 };

struct CliConfig {
  std::string arith = "exact";
  double eps = 0.0;
  std::optional<double> tol;
  std::uint64_t seed = 20100613;
  int pattern_cap = 12;
  std::string format;
  std::string out;
  unsigned threads = 0;

  Mode mode() const { return arith == "float" ? Mode::Float : Mode::Exact; }

  SearchConfig search() const {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.pattern_cap = pattern_cap;
    cfg.threads = threads;
    if (tol) {
      cfg.synthesis_tolerance = *tol;
      cfg.diagonal_tolerance = *tol;
    }
    return cfg;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (path_.empty() || path_ == "-") {
      std::cout << buffer_.str();
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file || !(file << buffer_.str())) throw Error(ErrorKind::Io, "cannot write " + path_);
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

std::string format_or(const CliConfig& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw Error(ErrorKind::Parse, "--format " + format + " is not supported by this command");
}

template <Field F>
std::string joined(const std::initializer_list<F>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : " ") + number_text(v);
  return s;
}

template <Field F>
RWord<F> concrete(const RWord<Scalar>& w) {
  RWord<F> out;
  for (const auto& l : w.letters) {
    if constexpr (std::is_same_v<F, Rational>)
      out.letters.push_back({l.generator, l.exponent.rational()});
    else
      out.letters.push_back({l.generator, l.exponent.to_double()});
  }
  return out;
}

template <Field F>
F concrete(const Scalar& s) {
  if constexpr (std::is_same_v<F, Rational>)
    return s.rational();
  else
    return s.to_double();
}

template <Field F>
int eval_word(const RWord<Scalar>& parsed, const CliConfig& cfg, Output& out) {
  const RWord<F> w = concrete<F>(parsed);
  const auto g = evaluate_word(w);
  std::optional<UVWPoint<F>> uvw;
  try {
    uvw = extract_uvw(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInSigmaImage) throw;
  }
  const auto len = length(w);
  const auto coarse = coarse_length(w);
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    json j{{"word", to_json(w)}, {"element", to_json(g)}, {"length", number_text(len)}, {"coarse_length", coarse}};
    j["uvw"] = uvw ? to_json(*uvw) : json(nullptr);
    j["xy"] = uvw ? to_json(project(*uvw)) : json(nullptr);
    out.stream() << j.dump(2) << '\n';
  } else {
    auto& os = out.stream();
    os << "element: " << joined({g[0], g[1], g[2], g[3], g[4]}) << '\n';
    if (uvw) {
      const auto p = project(*uvw);
      os << "uvw: " << joined({uvw->u, uvw->v, uvw->w}) << '\n' << "xy: " << joined({p.x, p.y}) << '\n';
    } else {
      os << "uvw: none (abelianization is not (1,1))\n";
    }
    os << "length: " << number_text(len) << '\n' << "coarse_length: " << coarse << '\n';
  }
  return kOk;
}

template <Field F>
int member_point(const Scalar& sx, const Scalar& sy, const CliConfig& cfg, Output& out) {
  const XYPoint<F> p{concrete<F>(sx), concrete<F>(sy)};
  const auto v = membership(p, {cfg.eps});
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    json j{{"point", to_json(p)}, {"status", to_string(v.status)}, {"boundary_equality", v.boundary_equality}};
    j["failed_condition"] = v.failed_condition ? json(to_string(*v.failed_condition)) : json(nullptr);
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << to_string(v.status);
    if (v.failed_condition)
      out.stream() << " (fails " << to_string(*v.failed_condition) << (v.boundary_equality ? ", with equality" : "")
                   << ")";
    out.stream() << '\n';
  }
  return v.member() ? kOk : kNegative;
}

template <Field F>
int apply_map(const std::string& kind, const Scalar& st, const std::vector<Scalar>& coords, const CliConfig& cfg,
              Output& out) {
  const F t = concrete<F>(st);
  const bool a = kind == "a" || kind == "A";
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  json result;
  std::string text;
  if (coords.size() == 2) {
    const XYPoint<F> p{concrete<F>(coords[0]), concrete<F>(coords[1])};
    const auto q = a ? map_a_xy(t, p) : map_b_xy(t, p);
    result = to_json(q);
    text = joined({q.x, q.y});
  } else {
    const UVWPoint<F> p{concrete<F>(coords[0]), concrete<F>(coords[1]), concrete<F>(coords[2])};
    const auto q = a ? map_a_uvw(t, p) : map_b_uvw(t, p);
    result = to_json(q);
    text = joined({q.u, q.v, q.w});
  }
  if (format == "json")
    out.stream() << result.dump() << '\n';
  else
    out.stream() << text << '\n';
  return kOk;
}

XYPoint<double> float_point(const std::string& x, const std::string& y) { return {parse_double(x), parse_double(y)}; }

std::string sequence_text(const MapSequence& seq) {
  std::string s = to_string(seq.seed);
  for (const auto& step : seq.steps) s += std::string(" ") + to_string(step.kind) + "(" + format_double(step.t) + ")";
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Word calculus in the free 3-step nilpotent group on two generators"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--arith", cfg.arith, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--eps", cfg.eps, "Margin for strict inequalities (float mode)")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tol, "Synthesis / diagonal tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_option("--pattern-cap", cfg.pattern_cap, "Largest k enumerated exhaustively")->check(CLI::Range(0, 24));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--threads", cfg.threads, "Worker threads for searches (0 = all cores)");

  std::function<int(Output&)> action;

  auto* eval = app.add_subcommand("eval", "Evaluate a word: element, (u,v,w), (x,y), length, coarse length");
  std::string word_text;
  eval->add_option("word", word_text, "e.g. \"X^0.5 Y^1 X^0.5\"")->required();
  eval->callback([&] {
    action = [&](Output& out) {
      const auto w = parse_word(word_text, cfg.mode());
      return cfg.mode() == Mode::Exact ? eval_word<Rational>(w, cfg, out) : eval_word<double>(w, cfg, out);
    };
  });

  auto* member = app.add_subcommand("member", "Membership of (x, y) in M'");
  std::string mx, my;
  member->add_option("x", mx)->required();
  member->add_option("y", my)->required();
  member->callback([&] {
    action = [&](Output& out) {
      const auto x = Scalar::parse(mx, cfg.mode()), y = Scalar::parse(my, cfg.mode());
      return cfg.mode() == Mode::Exact ? member_point<Rational>(x, y, cfg, out) : member_point<double>(x, y, cfg, out);
    };
  });

  auto* map = app.add_subcommand("map", "Apply a_t or b_t to a point in R^2 (x y) or R^3 (u v w)");
  std::string map_kind, map_t;
  std::vector<std::string> map_coords;
  map->add_option("kind", map_kind)->required()->check(CLI::IsMember({"a", "b", "A", "B"}));
  map->add_option("t", map_t)->required();
  map->add_option("coords", map_coords)->required()->expected(2, 3);
  map->callback([&] {
    action = [&](Output& out) {
      std::vector<Scalar> coords;
      for (const auto& c : map_coords) coords.push_back(Scalar::parse(c, cfg.mode()));
      const auto t = Scalar::parse(map_t, cfg.mode());
      return cfg.mode() == Mode::Exact ? apply_map<Rational>(map_kind, t, coords, cfg, out)
                                       : apply_map<double>(map_kind, t, coords, cfg, out);
    };
  });

  auto* plot = app.add_subcommand("plot", "Draw the region M' with its boundary curves (SVG) or the curve table (CSV)");
  RenderOptions render;
  plot->add_option("--resolution", render.resolution, "Shading grid cells per side")->check(CLI::Range(1, 4096));
  plot->add_option("--samples", render.curve_samples, "Points per boundary curve")->check(CLI::Range(2, 100000));
  plot->callback([&] {
    action = [&](Output& out) {
      const std::string format = format_or(cfg, "svg");
      require_format(format, {"svg", "csv"});
      render.policy = {cfg.eps};
      out.stream() << (format == "svg" ? render_svg(render) : render_csv(render));
      return kOk;
    };
  });

  // nearest / profile take "X Y K" or, with --uvw, "U V W K".
  bool uvw = false;
  std::vector<std::string> search_args;
  auto target_and_count = [&](std::vector<double>& coords) {
    const std::size_t want = uvw ? 4 : 3;
    if (search_args.size() != want)
      throw Error(ErrorKind::Parse, uvw ? "expected U V W K" : "expected X Y K (or --uvw U V W K)");
    for (std::size_t i = 0; i + 1 < want; ++i) coords.push_back(parse_double(search_args[i]));
    try {
      const int k = std::stoi(search_args.back());
      if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "number of maps must be >= 0");
      return k;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "not an integer: '" + search_args.back() + "'");
    }
  };

  auto* nearest = app.add_subcommand("nearest", "Closest point to a target reachable with k maps");
  nearest->add_option("args", search_args, "X Y K, or U V W K with --uvw")->required()->expected(3, 4);
  nearest->add_flag("--uvw", uvw, "Measure distance in (u,v,w) using the R^3 maps");
  nearest->callback([&] {
    action = [&](Output& out) {
      std::vector<double> c;
      const int k = target_and_count(c);
      const auto r = uvw ? nearest_reachable_uvw({c[0], c[1], c[2]}, k, cfg.search())
                         : nearest_reachable({c[0], c[1]}, k, cfg.search());
      const std::string format = format_or(cfg, "text");
      require_format(format, {"text", "json"});
      if (format == "json") {
        out.stream() << to_json(r).dump(2) << '\n';
      } else {
        out.stream() << "distance: " << format_double(r.distance) << "\npoint: " << format_double(r.best_point.x)
                     << ' ' << format_double(r.best_point.y);
        if (uvw)
          out.stream() << "\nuvw: " << format_double(r.best_uvw.u) << ' ' << format_double(r.best_uvw.v) << ' '
                       << format_double(r.best_uvw.w);
        out.stream() << "\nsequence: " << sequence_text(r.best_sequence) << '\n';
      }
      return kOk;
    };
  });

  auto* profile = app.add_subcommand("profile", "Distance from a target to the k-map reachable set, k = 1..k_max");
  profile->add_option("args", search_args, "X Y K_MAX, or U V W K_MAX with --uvw")->required()->expected(3, 4);
  profile->add_flag("--uvw", uvw, "Measure distance in (u,v,w) using the R^3 maps");
  profile->callback([&] {
    action = [&](Output& out) {
      std::vector<double> c;
      const int k_max = target_and_count(c);
      const auto rows = uvw ? coarse_length_profile_uvw({c[0], c[1], c[2]}, k_max, cfg.search())
                            : coarse_length_profile({c[0], c[1]}, k_max, cfg.search());
      const std::string format = format_or(cfg, "csv");
      require_format(format, {"csv", "json", "text"});
      if (format == "csv") {
        out.stream() << profile_csv(rows);
      } else if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back({{"k", row.k}, {"report", to_json(row.report)}});
        out.stream() << arr.dump(2) << '\n';
      } else {
        for (const auto& row : rows)
          out.stream() << row.k << ' ' << format_double(row.report.distance) << '\n';
      }
      return kOk;
    };
  });

  auto* gap = app.add_subcommand("gap", "Smallest d - 1/3 over diagonal points (d, d) reachable with k maps");
  int gap_k = 1;
  gap->add_option("k", gap_k)->required()->check(CLI::PositiveNumber);
  gap->callback([&] {
    action = [&](Output& out) {
      const auto r = diagonal_gap(gap_k, cfg.search());
      const std::string format = format_or(cfg, "text");
      require_format(format, {"text", "json"});
      if (format == "json")
        out.stream() << to_json(r).dump(2) << '\n';
      else
        out.stream() << "gap: " << format_double(r.gap) << "\nd: " << format_double(r.d)
                     << "\nsequence: " << sequence_text(r.sequence) << '\n';
      return kOk;
    };
  });

  auto* synth = app.add_subcommand("synth", "Find a Sigma word whose (x, y) image is the target");
  std::string sx, sy;
  int max_steps = 12;
  synth->add_option("x", sx)->required();
  synth->add_option("y", sy)->required();
  synth->add_option("--max-steps", max_steps, "Longest map program tried")->check(CLI::Range(1, 24));
  synth->callback([&] {
    action = [&](Output& out) {
      auto search = cfg.search();
      search.synthesis_max_steps = max_steps;
      const auto r = synthesize_word(float_point(sx, sy), search);
      const std::string format = format_or(cfg, "text");
      require_format(format, {"text", "json"});
      if (format == "json") {
        out.stream() << to_json(r).dump(2) << '\n';
      } else if (r.success) {
        out.stream() << format_word(normalize(r.word->to_rword())) << "\nresidual: " << format_double(r.residual)
                     << "\nmethod: " << r.method << '\n';
      } else {
        out.stream() << "not reached: " << r.message << "\nclosest: " << format_double(r.reached.x) << ' '
                     << format_double(r.reached.y) << "\nresidual: " << format_double(r.residual) << '\n';
      }
      return r.success ? kOk : kNegative;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  std::string suite_name;
  long trials = 0;
  verify->add_option("suite", suite_name, "algebra, commutation, invariance, convergence or all")->required();
  verify->add_option("--trials", trials, "Trials (n_max for convergence); 0 = suite default")
      ->check(CLI::NonNegativeNumber);
  verify->callback([&] {
    action = [&](Output& out) {
      std::vector<Suite> suites;
      if (suite_name == "all")
        suites = {Suite::Algebra, Suite::Commutation, Suite::Invariance, Suite::Convergence};
      else
        suites = {parse_suite(suite_name)};
      const std::string format = format_or(cfg, "text");
      require_format(format, {"text", "json"});
      bool all_passed = true;
      json arr = json::array();
      for (Suite s : suites) {
        const auto r = run_suite(s, {cfg.mode(), cfg.seed, trials});
        all_passed = all_passed && r.passed;
        if (format == "json")
          arr.push_back({{"suite", to_string(s)},
                         {"passed", r.passed},
                         {"trials", r.trials},
                         {"failures", r.failures},
                         {"detail", r.detail}});
        else
          out.stream() << (r.passed ? "PASS " : "FAIL ") << to_string(s) << ": " << r.detail << '\n';
      }
      if (format == "json") out.stream() << arr.dump(2) << '\n';
      return all_passed ? kOk : kNegative;
    };
  });

  auto* balanced = app.add_subcommand("balanced", "(x, y) of the balanced words (X^1/n Y^1/n)^n, n = 1..n_max");
  long n_max = 16;
  balanced->add_option("n_max", n_max)->required()->check(CLI::PositiveNumber);
  balanced->callback([&] {
    action = [&](Output& out) {
      const std::string format = format_or(cfg, "csv");
      require_format(format, {"csv"});
      out.stream() << trajectory_csv(balanced_trajectory(n_max));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Output out(cfg.out);
  const int code = action(out);
  out.flush();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "coarselen: " << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ToleranceFailure: return kTolerance;
      case ErrorKind::NotInSigmaImage: return kNegative;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "coarselen: " << e.what() << '\n';
    return kTolerance;
  }
}
