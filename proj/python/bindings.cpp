#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anfgb/problem.hpp"

namespace py = pybind11;
using namespace anfgb;

namespace {

std::vector<std::string> strings(const GroebnerBasis<NumberField>& basis) {
  std::vector<std::string> out;
  for (const auto& g : basis.polys) out.push_back(format(g));
  return out;
}

ModularConfig make_config(std::size_t threads, std::size_t initial_primes, std::size_t max_rounds,
                          std::uint64_t seed, bool allow_irreducible, bool weak_prefilter) {
  ModularConfig c;
  c.workers = threads;
  c.initial_primes = initial_primes;
  c.max_rounds = max_rounds;
  c.seed = seed;
  c.allow_irreducible = allow_irreducible;
  c.weak_prefilter = weak_prefilter;
  return c;
}

}  // namespace

PYBIND11_MODULE(_anfgb, m) {
  m.doc() = "Reduced Groebner bases over Q(a) via a two-level modular method";

  // Translators run newest first, so ParseError is registered last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Problem>(m, "Problem")
      .def_readonly("vars", &Problem::vars)
      .def_readonly("minvar", &Problem::minvar)
      .def_property_readonly("minpoly", [](const Problem& p) { return format(p.minpoly, p.minvar); })
      .def_property_readonly("order", [](const Problem& p) {
        return p.order == BaseOrder::Lex ? "lex" : "degrevlex";
      })
      .def_property_readonly("generators", [](const Problem& p) {
        return strings({p.ring_k(), p.generators_k(p.ring_k())});
      });

  py::class_<ModularStats>(m, "Stats")
      .def_readonly("rounds", &ModularStats::rounds)
      .def_readonly("primes_tried", &ModularStats::primes_tried)
      .def_readonly("type_b_rejected", &ModularStats::type_b_rejected)
      .def_readonly("unlucky_deleted", &ModularStats::unlucky_deleted)
      .def_readonly("primes_in_lift", &ModularStats::primes_in_lift);

  py::class_<NfResult>(m, "Result")
      .def_property_readonly("basis", [](const NfResult& r) { return strings(r.basis); })
      .def_property_readonly("tagged", [](const NfResult& r) {
        std::vector<std::string> out;
        for (const auto& g : r.tagged.polys) out.push_back(format(g));
        return out;
      })
      .def_readonly("stats", &NfResult::stats);

  m.def("parse_problem", [](const std::string& text) { return parse_problem(text); }, py::arg("text"));

  m.def(
      "nfmodstd",
      [](const Problem& p, std::size_t threads, std::size_t initial_primes, std::size_t max_rounds,
         std::uint64_t seed, bool allow_irreducible, bool weak_prefilter) {
        const ModularConfig c =
            make_config(threads, initial_primes, max_rounds, seed, allow_irreducible, weak_prefilter);
        py::gil_scoped_release release;
        return nfmodstd(p, c);
      },
      py::arg("problem"), py::arg("threads") = 1, py::arg("initial_primes") = 0,
      py::arg("max_rounds") = 16, py::arg("seed") = 1, py::arg("allow_irreducible") = false,
      py::arg("weak_prefilter") = true);

  m.def(
      "buchberger_direct",
      [](const Problem& p) {
        GroebnerBasis<NumberField> b;
        {
          py::gil_scoped_release release;
          b = buchberger_direct(p);
        }
        return strings(b);
      },
      py::arg("problem"));

  m.def(
      "to_json",
      [](const Problem& p, std::size_t threads, std::uint64_t seed) {
        ModularConfig c;
        c.workers = threads;
        c.seed = seed;
        return to_json(nfmodstd(p, c).basis, p);
      },
      py::arg("problem"), py::arg("threads") = 1, py::arg("seed") = 1,
      "nfmodstd followed by the JSON rendering used by the CLI");

  m.def(
      "to_text",
      [](const Problem& p, std::size_t threads, std::uint64_t seed) {
        ModularConfig c;
        c.workers = threads;
        c.seed = seed;
        return to_text(nfmodstd(p, c).basis);
      },
      py::arg("problem"), py::arg("threads") = 1, py::arg("seed") = 1);

  m.def(
      "is_admissible_type_A",
      [](const Problem& p, std::uint32_t prime) { return is_admissible_type_A(p.minpoly, prime); },
      py::arg("problem"), py::arg("prime"));
}
