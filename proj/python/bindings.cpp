// Python bindings for the core operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zimin/density.hpp"
#include "zimin/errors.hpp"
#include "zimin/oracles.hpp"
#include "zimin/sequences.hpp"
#include "zimin/text.hpp"
#include "zimin/verify.hpp"
#include "zimin/words.hpp"

namespace py = pybind11;
using namespace zimin;

namespace {

py::int_ to_pyint(const Int& z) {
    // hex sidesteps CPython's decimal-digit conversion limit
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str(16).c_str(), nullptr, 16));
}

py::object rat_dict(const Rat& v, int digits) {
    py::dict d;
    d["num"] = to_pyint(Int(v.get_num()));
    d["den"] = to_pyint(Int(v.get_den()));
    d["decimal"] = to_decimal(v, digits);
    d["float"] = v.get_d();
    return d;
}

py::list seq_list(const std::vector<Int>& vals) {
    py::list out;
    for (const auto& v : vals) out.append(to_pyint(v));
    return out;
}

py::object bounds_dict(const BoundsResult& b, int digits) {
    py::dict d;
    d["target"] = b.target;
    d["lower"] = rat_dict(b.lower, digits);
    d["upper"] = rat_dict(b.upper, digits);
    d["N"] = b.trunc_outer;
    d["M"] = b.trunc_inner;
    return d;
}

} // namespace

PYBIND11_MODULE(zimin_words, m) {
    m.doc() = "Instance densities of Zimin words over [q], in exact arithmetic";

    py::register_exception<size_error>(m, "SizeError");
    py::register_exception<convergence_error>(m, "ConvergenceError");

    m.def("zimin_pattern", [](int n) { return format_pattern(zimin_pattern(n)); },
          py::arg("n"), "The n-th Zimin word as a pattern literal");

    m.def("is_instance",
          [](const std::string& word, const std::string& pattern,
             int q) -> py::object {
              ParsedWord w = parse_word(word, q);
              ParsedPattern p = parse_pattern(pattern);
              auto phi = instance_witness(w.word, p.pattern);
              if (!phi) return py::none();
              py::dict d;
              for (int v = 0; v < phi->variable_count(); ++v) {
                  std::string img;
                  for (Letter x : phi->image(v).letters())
                      img += w.symbols[static_cast<size_t>(x)];
                  d[py::str(p.symbols[static_cast<size_t>(v)])] = img;
              }
              return d;
          },
          py::arg("word"), py::arg("pattern"), py::arg("q") = 0,
          "Witness morphism as {variable: image} or None");

    m.def("encounters",
          [](const std::string& word, const std::string& pattern, int q) {
              return encounters(parse_word(word, q).word, parse_pattern(pattern).pattern);
          },
          py::arg("word"), py::arg("pattern"), py::arg("q") = 0);

    m.def("is_unavoidable",
          [](const std::string& pattern) {
              return is_unavoidable(parse_pattern(pattern).pattern);
          },
          py::arg("pattern"));

    m.def("is_zimin_instance",
          [](const std::string& word, int n, int q) {
              return is_zimin_instance(parse_word(word, q).word, n);
          },
          py::arg("word"), py::arg("n"), py::arg("q") = 0);

    m.def("zimin_level",
          [](const std::string& word, int q) {
              return zimin_level(parse_word(word, q).word);
          },
          py::arg("word"), py::arg("q") = 0);

    m.def("bifix_lengths",
          [](const std::string& word, int q) {
              return bifix_lengths(parse_word(word, q).word);
          },
          py::arg("word"), py::arg("q") = 0);

    m.def("seq",
          [](const std::string& kind, int q, int ell, int max_index) {
              auto k = seq_kind_from_string(kind);
              if (!k) throw std::invalid_argument("unknown sequence kind: " + kind);
              return seq_list(SeqStore::global().values(*k, q, ell, max_index));
          },
          py::arg("kind"), py::arg("q"), py::arg("ell"), py::arg("max_index"),
          "Values 0..max_index of one of the sequences a, c, d, b, bhat");

    m.def("iz2",
          [](int q, const std::string& eps, int digits) {
              return bounds_dict(iz2_bounds(q, rat_from_string(eps)), digits);
          },
          py::arg("q"), py::arg("eps") = "1e-9", py::arg("digits") = 7);

    m.def("iz3",
          [](int q, const std::string& eps, int digits) {
              return bounds_dict(iz3_auto(q, rat_from_string(eps)), digits);
          },
          py::arg("q"), py::arg("eps") = "1e-9", py::arg("digits") = 8);

    m.def("iz3_bounds",
          [](int q, int N, int M, int digits) {
              return bounds_dict(iz3_bounds(q, N, M), digits);
          },
          py::arg("q"), py::arg("N"), py::arg("M"), py::arg("digits") = 8);

    m.def("izn_generic_bounds",
          [](int n, int q, int digits) {
              return bounds_dict(izn_generic_bounds(n, q), digits);
          },
          py::arg("n"), py::arg("q"), py::arg("digits") = 8);

    m.def("izn_upper",
          [](int n, int q, const std::vector<int>& caps, int digits) {
              return rat_dict(izn_upper(n, q, caps), digits);
          },
          py::arg("n"), py::arg("q"), py::arg("caps"), py::arg("digits") = 8);

    m.def("z2_prefix_density",
          [](int q, int length, int digits) {
              return rat_dict(z2_exact_prefix_density(q, length), digits);
          },
          py::arg("q"), py::arg("length"), py::arg("digits") = 8);

    m.def("empirical_density",
          [](int zimin_n, int q, int n, const std::string& mode, long long samples,
             std::uint64_t seed, int digits) {
              auto e = empirical_density_zimin(zimin_n, q, n, mode != "montecarlo",
                                               samples, seed);
              py::dict d;
              d["value"] = rat_dict(e.value, digits);
              d["mode"] = e.exhaustive ? "exhaustive" : "montecarlo";
              d["n"] = e.word_length;
              d["samples"] = e.samples;
              d["seed"] = e.seed;
              return d;
          },
          py::arg("zimin_n"), py::arg("q"), py::arg("n"),
          py::arg("mode") = "exhaustive", py::arg("samples") = 100000,
          py::arg("seed") = 0, py::arg("digits") = 8);

    m.def("verify",
          [](const std::string& suite, bool quick) {
              std::vector<CheckResult> rs;
              if (suite == "recursions") rs = verify_recursions(quick);
              else if (suite == "cases") rs = verify_cases(quick);
              else if (suite == "sandwich") rs = verify_sandwich(quick);
              else if (suite == "tables") rs = verify_tables(quick);
              else if (suite == "all") rs = verify_all(quick);
              else throw std::invalid_argument("unknown suite: " + suite);
              py::list out;
              for (const auto& r : rs) {
                  py::dict d;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["detail"] = r.detail;
                  out.append(d);
              }
              return out;
          },
          py::arg("suite") = "all", py::arg("quick") = true);
}
