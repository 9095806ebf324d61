#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycloseq/analysis.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/extfield.hpp"
#include "cycloseq/report.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace cycloseq;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

CyclotomicSystem make_system(Int p, Int q, int m, int n, Int cap) {
  return CyclotomicSystem(build_system_constants(p, q, m, n, cap));
}

Mapping mapping_or_default(const std::string& text) {
  return text.empty() ? Mapping::default_mapping() : Mapping::parse(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternary generalized cyclotomic sequences of period 2 p^m q^n";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InvalidMapping>(m, "InvalidMapping", base.ptr());
  py::register_exception<MalformedSequence>(m, "MalformedSequence", base.ptr());
  py::register_exception<PartitionViolation>(m, "PartitionViolation", base.ptr());
  py::register_exception<MethodDisagreement>(m, "MethodDisagreement", base.ptr());
  py::register_exception<Overflow>(m, "Overflow", base.ptr());

  m.attr("DEFAULT_PERIOD_CAP") = kDefaultPeriodCap;

  m.def("constants_json", [](Int p, Int q, int m_, int n, Int cap) {
    return dump(constants_json(build_system_constants(p, q, m_, n, cap)));
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("cap") = kDefaultPeriodCap);

  m.def("classes_json", [](Int p, Int q, int m_, int n, Int cap) {
    return dump(classes_json(make_system(p, q, m_, n, cap)));
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("cap") = kDefaultPeriodCap);

  m.def("generate", [](Int p, Int q, int m_, int n, const std::string& mapping, bool degenerate, Int cap) {
    const auto system = make_system(p, q, m_, n, cap);
    return to_digits(build_sequence(system, mapping_or_default(mapping), degenerate).symbols);
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("mapping") = "",
     py::arg("degenerate") = false, py::arg("cap") = kDefaultPeriodCap,
     "One period as a string of digits 0..3.");

  m.def("linear_complexity_json", [](const std::string& digits) {
    const auto symbols = from_digits(digits);
    py::gil_scoped_release release;
    return dump(to_json(analyze_symbols(symbols)));
  }, py::arg("digits"));

  m.def("analyze_json", [](Int p, Int q, int m_, int n, const std::string& mapping, bool degenerate, Int cap) {
    const auto system = make_system(p, q, m_, n, cap);
    const Mapping mp = mapping_or_default(mapping);
    py::gil_scoped_release release;
    if (degenerate && !validate_mapping(p, mp).empty()) return dump(to_json(analyze_degenerate(system, mp)));
    return dump(to_json(verify_theorem(system, mp)));
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("mapping") = "",
     py::arg("degenerate") = false, py::arg("cap") = kDefaultPeriodCap);

  m.def("structural_lemmas_json", [](Int p, Int q, int m_, int n) {
    return dump(to_json(check_structural_lemmas(make_system(p, q, m_, n, kDefaultPeriodCap))));
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"));

  m.def("root_evaluations_json", [](Int p, Int q, int m_, int n, const std::string& mapping) {
    const auto system = make_system(p, q, m_, n, kDefaultPeriodCap);
    const auto ctx = build_extension(system.constants());
    Json j;
    j["char_sums"] = to_json(verify_lemma_6_7(system, ctx));
    j["case_table"] = to_json(verify_case_table(system, ctx, mapping_or_default(mapping)));
    return dump(j);
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("mapping") = "");

  m.def("validate_mapping", [](Int p, const std::string& mapping) {
    return validate_mapping(p, Mapping::parse(mapping));
  }, py::arg("p"), py::arg("mapping"));

  m.def("attains_full_complexity", [](Int p, Int q, const std::string& mapping) {
    return attains_full_complexity(p, q, Mapping::parse(mapping));
  }, py::arg("p"), py::arg("q"), py::arg("mapping"));

  m.def("degenerate_lower_bound", &degenerate_lower_bound, py::arg("p"), py::arg("q"), py::arg("m"),
        py::arg("n"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
