#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypergrowth/constructions.hpp"
#include "hypergrowth/core.hpp"
#include "hypergrowth/error.hpp"
#include "hypergrowth/ideals.hpp"
#include "hypergrowth/sequences.hpp"
#include "hypergrowth/structure.hpp"
#include "hypergrowth/verify.hpp"

namespace py = pybind11;
using namespace hypergrowth;

namespace {

py::object to_py(const BigInt& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict witness_dict(const WealthyWitness& w) {
  py::dict d;
  d["family"] = to_string(w.family);
  d["r"] = w.r;
  d["variant"] = to_string(w.family, w.variant);
  d["base_sets"] = w.base_sets;
  d["triples"] = w.triples;
  d["text"] = to_string(w);
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypergrowth, m) {
  m.doc() = "Growth rates of hereditary classes of edge-colored hypergraphs";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<int, int, int, Color>(), py::arg("k"), py::arg("l"), py::arg("n"), py::arg("fill") = 0)
      .def(py::init<int, int, int, std::vector<Color>>(), py::arg("k"), py::arg("l"), py::arg("n"), py::arg("colors"))
      .def_property_readonly("k", &Coloring::k)
      .def_property_readonly("l", &Coloring::l)
      .def_property_readonly("n", &Coloring::n)
      .def_property_readonly("edge_count", &Coloring::edge_count)
      .def("colors", [](const Coloring& c) {
        std::vector<Color> out(c.edge_count());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = c.at(i);
        return out;
      })
      .def("__getitem__", [](const Coloring& c, const std::vector<Vertex>& e) { return c(std::span<const Vertex>(e)); })
      .def("__setitem__", [](Coloring& c, const std::vector<Vertex>& e, Color v) { c.set(std::span<const Vertex>(e), v); })
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
      .def("__hash__", [](const Coloring& c) { return std::hash<std::string>{}(to_string(c)); })
      .def("__str__", [](const Coloring& c) { return to_string(c); })
      .def("__repr__", [](const Coloring& c) {
        return "<Coloring k=" + std::to_string(c.k()) + " l=" + std::to_string(c.l()) + " n=" + std::to_string(c.n()) + ">";
      });

  m.def("parse_coloring", &parse_coloring, py::arg("text"));
  m.def("restrict", [](const Coloring& c, const std::vector<Vertex>& s) { return restrict_normalize(c, s); },
        py::arg("coloring"), py::arg("vertices"));
  m.def("reverse", &reverse);
  m.def(
      "contains",
      [](const Coloring& small, const Coloring& big) -> std::optional<std::vector<Vertex>> {
        py::gil_scoped_release release;
        auto inj = contains(small, big);
        if (!inj) return std::nullopt;
        return inj->images;
      },
      py::arg("small"), py::arg("big"), "Vertex images of the lex-first embedding, or None");

  m.def("binomial", &binomial);
  m.def("sequence", [](const std::string& name, int n, int k) { return to_py(sequence(name, n, k)); },
        py::arg("name"), py::arg("n"), py::arg("k") = 0);
  m.def("fibonacci", [](int n) { return to_py(fibonacci(n)); });
  m.def("g_sequence", [](int n) { return to_py(g_sequence(n)); });

  m.def("nuclear_intervals", [](const Coloring& c) {
    std::vector<std::pair<int, int>> out;
    for (const auto& iv : nuclear_decomposition(c).intervals) out.emplace_back(iv.lo, iv.hi);
    return out;
  });
  m.def("is_p_tame", [](const Coloring& c, int p) { return is_p_tame(c, p).tame(); });
  m.def("is_r_rich", [](const Coloring& c, int r) { return is_r_rich(c, r).has_value(); });
  m.def("is_c_simple", [](const Coloring& c, int cpar) { return !is_c_simple(c, cpar).has_value(); });
  m.def("families", [] {
    std::vector<std::string> out;
    for (auto f : all_families()) out.push_back(to_string(f));
    return out;
  });
  m.def(
      "make_wealthy",
      [](const std::string& family, int r, const std::string& variant, Color filler) {
        const auto f = parse_family(family);
        return make_wealthy(f, r, variant.empty() ? WealthyVariant{} : parse_variant(f, variant), filler);
      },
      py::arg("family"), py::arg("r"), py::arg("variant") = "", py::arg("filler") = 0);
  m.def(
      "is_wealthy",
      [](const Coloring& c, const std::string& family, int r) -> std::optional<py::dict> {
        auto w = is_wealthy(c, parse_family(family), r);
        if (!w) return std::nullopt;
        return witness_dict(*w);
      },
      py::arg("coloring"), py::arg("family"), py::arg("r"));
  m.def("make_rich", &make_rich, py::arg("k"), py::arg("r"), py::arg("f"), py::arg("g"), py::arg("h"), py::arg("a"),
        py::arg("b"), py::arg("filler") = 0, py::arg("l") = 2);

  m.def("spec_digest", [](const std::string& spec) { return spec_digest(parse_spec_argument(spec)); });
  m.def(
      "growth",
      [](const std::string& spec, int n_max, int jobs, std::uint64_t budget) {
        const auto s = parse_spec_argument(spec);
        GrowthRecord rec;
        {
          py::gil_scoped_release release;
          rec = growth(s, {n_max, budget, jobs});
        }
        py::list counts;
        for (int n = 1; n <= n_max; ++n) {
          const auto& e = rec.counts.at(n);
          counts.append(e.count ? to_py(*e.count) : py::none());
        }
        return counts;
      },
      py::arg("spec"), py::arg("n_max"), py::arg("jobs") = 1, py::arg("budget") = 100'000'000,
      "Counts |X_1| .. |X_n_max|; None marks levels that ran out of budget");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, int jobs) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.jobs = jobs;
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(suite, opt);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("jobs") = 1);
}
