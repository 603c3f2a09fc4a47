// Python bindings. Exact values cross the boundary as fractions.Fraction,
// float values as float; search results come back as JSON text and are
// decoded by the Python package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarselen/io.hpp"
#include "coarselen/verify.hpp"

namespace py = pybind11;
using namespace coarselen;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(q.str()));
}

// int, Fraction, float or str -> Rational (floats are taken at their exact binary value)
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  if (py::isinstance<py::float_>(h)) {
    const auto [n, d] = h.attr("as_integer_ratio")().cast<std::pair<py::object, py::object>>();
    return Rational::parse(py::str(n).cast<std::string>() + "/" + py::str(d).cast<std::string>());
  }
  const py::object n = h.attr("numerator"), d = h.attr("denominator");
  return Rational::parse(py::str(n).cast<std::string>() + "/" + py::str(d).cast<std::string>());
}

double to_real(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_double(h.cast<std::string>());
  return h.cast<double>();
}

template <Field F>
F from_py(const py::handle& h) {
  if constexpr (std::is_same_v<F, Rational>)
    return to_rational(h);
  else
    return to_real(h);
}

py::object to_py(const Rational& q) { return fraction(q); }
py::object to_py(double d) { return py::float_(d); }

template <Field F>
py::tuple tuple_of(std::initializer_list<F> values) {
  py::tuple t(values.size());
  std::size_t i = 0;
  for (const auto& v : values) t[i++] = to_py(v);
  return t;
}

template <Field F>
AlgebraVector<F> vector_from(const py::sequence& s) {
  if (py::len(s) != 5) throw Error(ErrorKind::Parse, "algebra vectors have five coordinates");
  AlgebraVector<F> v;
  for (std::size_t i = 0; i < 5; ++i) v[i] = from_py<F>(s[i]);
  return v;
}

template <Field F>
py::tuple vector_to(const AlgebraVector<F>& v) {
  return tuple_of<F>({v[0], v[1], v[2], v[3], v[4]});
}

template <Field F>
RWord<F> word_from(const std::string& text) {
  const auto w = parse_word(text, std::is_same_v<F, Rational> ? Mode::Exact : Mode::Float);
  RWord<F> out;
  for (const auto& l : w.letters) {
    if constexpr (std::is_same_v<F, Rational>)
      out.letters.push_back({l.generator, l.exponent.rational()});
    else
      out.letters.push_back({l.generator, l.exponent.to_double()});
  }
  return out;
}

template <typename Fn>
py::object dispatch(bool exact, Fn&& fn) {
  return exact ? fn(Rational{}) : fn(double{});
}

SearchConfig config(std::uint64_t seed, int pattern_cap, unsigned threads) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.pattern_cap = pattern_cap;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_coarselen, m) {
  m.doc() = "Word calculus in the free 3-step nilpotent group on two generators";

  static py::exception<Error> error(m, "CoarselenError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("GOLDEN_GAP") = kGoldenGap;

  m.def("bracket", [](const py::sequence& a, const py::sequence& b, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      return vector_to(bracket(vector_from<F>(a), vector_from<F>(b)));
    });
  }, py::arg("a"), py::arg("b"), py::arg("exact") = true);

  m.def("multiply", [](const py::sequence& a, const py::sequence& b, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      return vector_to(multiply(vector_from<F>(a), vector_from<F>(b)));
    });
  }, py::arg("a"), py::arg("b"), py::arg("exact") = true);

  m.def("evaluate_word", [](const std::string& word, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      return vector_to(evaluate_word(word_from<F>(word)));
    });
  }, py::arg("word"), py::arg("exact") = true);

  m.def("word_length", [](const std::string& word, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      return to_py(length(word_from<F>(word)));
    });
  }, py::arg("word"), py::arg("exact") = true);

  m.def("coarse_length", [](const std::string& word) { return coarse_length(word_from<double>(word)); },
        py::arg("word"));

  m.def("normalize", [](const std::string& word, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      return py::str(format_word(normalize(word_from<F>(word))));
    });
  }, py::arg("word"), py::arg("exact") = true);

  m.def("eval_uvw", [](const std::string& word, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      const auto p = extract_uvw(evaluate_word(word_from<F>(word)));
      return tuple_of<F>({p.u, p.v, p.w});
    });
  }, py::arg("word"), py::arg("exact") = true);

  m.def("eval_xy", [](const std::string& word, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      const auto p = project(extract_uvw(evaluate_word(word_from<F>(word))));
      return tuple_of<F>({p.x, p.y});
    });
  }, py::arg("word"), py::arg("exact") = true);

  m.def("balanced_word", [](long n) { return format_word(normalize(balanced_word(n, Rational(1)).to_rword())); },
        py::arg("n"));

  m.def("map_xy", [](const std::string& kind, const py::handle& t, const py::handle& x, const py::handle& y,
                     bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      const XYPoint<F> p{from_py<F>(x), from_py<F>(y)};
      const F tt = from_py<F>(t);
      if (kind != "a" && kind != "b") throw Error(ErrorKind::Parse, "map kind must be 'a' or 'b'");
      const auto q = kind == "a" ? map_a_xy(tt, p) : map_b_xy(tt, p);
      return tuple_of<F>({q.x, q.y});
    });
  }, py::arg("kind"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("exact") = true);

  m.def("map_uvw", [](const std::string& kind, const py::handle& t, const py::handle& u, const py::handle& v,
                      const py::handle& w, bool exact) {
    return dispatch(exact, [&](auto tag) -> py::object {
      using F = decltype(tag);
      const UVWPoint<F> p{from_py<F>(u), from_py<F>(v), from_py<F>(w)};
      const F tt = from_py<F>(t);
      if (kind != "a" && kind != "b") throw Error(ErrorKind::Parse, "map kind must be 'a' or 'b'");
      const auto q = kind == "a" ? map_a_uvw(tt, p) : map_b_uvw(tt, p);
      return tuple_of<F>({q.u, q.v, q.w});
    });
  }, py::arg("kind"), py::arg("t"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("exact") = true);

  m.def("membership", [](const py::handle& x, const py::handle& y, double eps, bool exact) {
    const RegionVerdict v = exact ? membership(XYPoint<Rational>{to_rational(x), to_rational(y)}, {eps})
                                  : membership(XYPoint<double>{to_real(x), to_real(y)}, {eps});
    py::dict d;
    d["status"] = to_string(v.status);
    d["member"] = v.member();
    d["failed_condition"] = v.failed_condition ? py::object(py::str(to_string(*v.failed_condition))) : py::none();
    d["boundary_equality"] = v.boundary_equality;
    return d;
  }, py::arg("x"), py::arg("y"), py::arg("eps") = 0.0, py::arg("exact") = true);

  m.def("render_svg", [](int resolution, int curve_samples, double eps) {
    return render_svg({curve_samples, resolution, {eps}});
  }, py::arg("resolution") = 512, py::arg("curve_samples") = 201, py::arg("eps") = 0.0);

  m.def("_nearest_reachable", [](double x, double y, int k, std::uint64_t seed, int cap, unsigned threads) {
    py::gil_scoped_release release;
    return to_json(nearest_reachable({x, y}, k, config(seed, cap, threads))).dump();
  });

  m.def("_coarse_length_profile", [](double x, double y, int k_max, std::uint64_t seed, int cap, unsigned threads) {
    py::gil_scoped_release release;
    json arr = json::array();
    for (const auto& row : coarse_length_profile({x, y}, k_max, config(seed, cap, threads)))
      arr.push_back({{"k", row.k}, {"report", to_json(row.report)}});
    return arr.dump();
  });

  m.def("_diagonal_gap", [](int k, std::uint64_t seed, int cap, unsigned threads) {
    py::gil_scoped_release release;
    return to_json(diagonal_gap(k, config(seed, cap, threads))).dump();
  });

  m.def("_synthesize_word", [](double x, double y, double tol, int max_steps, std::uint64_t seed, unsigned threads) {
    py::gil_scoped_release release;
    auto cfg = config(seed, 12, threads);
    cfg.synthesis_tolerance = tol;
    cfg.synthesis_max_steps = max_steps;
    return to_json(synthesize_word({x, y}, cfg)).dump();
  });

  m.def("run_suite", [](const std::string& suite, bool exact, std::uint64_t seed, long trials) {
    const auto r = run_suite(parse_suite(suite), {exact ? Mode::Exact : Mode::Float, seed, trials});
    py::dict d;
    d["suite"] = to_string(r.suite);
    d["passed"] = r.passed;
    d["trials"] = r.trials;
    d["failures"] = r.failures;
    d["detail"] = r.detail;
    return d;
  }, py::arg("suite"), py::arg("exact") = true, py::arg("seed") = 20100613, py::arg("trials") = 0);
}
