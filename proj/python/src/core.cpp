#include "tamefield/commands.hpp"
#include "tamefield/error.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tamefield;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// The "result" part of a command report, as Python objects.
py::object result_of(const CommandResult& r) { return to_python(r.report["result"]); }

CommandOptions options(long prec, std::uint64_t seed = kSuiteSeed) { return CommandOptions{prec, seed}; }

// Raises tamefield._core.<name>(message) with `kind` and the extra attributes set.
void raise(const char* name, const Error& e, const std::vector<std::pair<const char*, py::object>>& attrs) {
    py::object type = py::module_::import("tamefield._core").attr(name);
    py::object inst = type(e.what());
    inst.attr("kind") = py::str(std::string(to_string(e.kind())));
    for (const auto& [k, v] : attrs) inst.attr(k) = v;
    PyErr_SetObject(type.ptr(), inst.ptr());
}

class PyField {
public:
    PyField(const std::string& text, long prec) : K_(parse_field(text, Rational(prec))) {}

    std::string name() const { return K_.name(); }
    std::int64_t characteristic() const { return K_.characteristic(); }
    std::int64_t residue_size() const { return K_.residue_field().size(); }
    std::string value_group() const { return K_.value_group().to_string(); }
    bool is_hahn() const { return K_.is_hahn(); }
    std::string element(const std::string& text) const { return K_.to_string(parse_element(K_, text)); }
    std::string value(const std::string& text) const { return K_.value(parse_element(K_, text)).to_string(); }
    std::string poly(const std::string& text) const { return kp_to_string(K_, parse_poly(K_, text)); }
    std::string mpoly(const std::string& text) const { return mpoly_to_string(K_, parse_mpoly(K_, text)); }

private:
    ValuedField K_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computation in valued fields";

    py::object error = py::reinterpret_steal<py::object>(PyErr_NewException("tamefield._core.TameFieldError", PyExc_Exception, nullptr));
    py::object parse_error = py::reinterpret_steal<py::object>(PyErr_NewException("tamefield._core.ParseError", error.ptr(), nullptr));
    m.attr("TameFieldError") = error;
    m.attr("ParseError") = parse_error;
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            raise("ParseError", e, {{"line", py::int_(e.line())}, {"column", py::int_(e.column())}});
        } catch (const Error& e) {
            raise("TameFieldError", e, {});
        } catch (const UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.attr("DEFAULT_PREC") = kDefaultHahnPrec;
    m.attr("SUITE_SEED") = kSuiteSeed;

    py::class_<PyField>(m, "Field")
        .def(py::init<const std::string&, long>(), py::arg("text"), py::arg("prec") = kDefaultHahnPrec)
        .def_property_readonly("name", &PyField::name)
        .def_property_readonly("characteristic", &PyField::characteristic)
        .def_property_readonly("residue_size", &PyField::residue_size)
        .def_property_readonly("value_group", &PyField::value_group)
        .def_property_readonly("is_hahn", &PyField::is_hahn)
        .def("element", &PyField::element, "normalized text of an element")
        .def("value", &PyField::value, "valuation of an element, as text")
        .def("poly", &PyField::poly)
        .def("mpoly", &PyField::mpoly)
        .def("__repr__", [](const PyField& f) { return "Field('" + f.name() + "')"; });

    m.def("group", [](const std::string& text) { return parse_group(text).to_string(); }, py::arg("text"));
    m.def("formula", [](const std::string& text) { return to_string(parse_formula(text)); }, py::arg("text"));

    m.def(
        "analyze_extension",
        [](const std::string& field, std::optional<std::string> poly, std::optional<std::string> as, long prec) {
            return result_of(cmd_analyze_extension(options(prec), field, poly, as));
        },
        py::arg("field"), py::arg("poly") = py::none(), py::arg("as_") = py::none(), py::arg("prec") = kDefaultHahnPrec);
    m.def(
        "classify_field",
        [](const std::string& field, long prec) { return result_of(cmd_classify_field(options(prec), field)); },
        py::arg("field"), py::arg("prec") = kDefaultHahnPrec);
    m.def(
        "gauss_value",
        [](const std::string& field, const std::string& mpoly, int nx, int ny, long prec) {
            return result_of(cmd_gauss_value(options(prec), field, mpoly, nx, ny));
        },
        py::arg("field"), py::arg("mpoly"), py::arg("nx") = -1, py::arg("ny") = -1, py::arg("prec") = kDefaultHahnPrec);
    m.def(
        "hensel_lift",
        [](const std::string& field, const std::string& poly, const std::string& y0, std::optional<std::string> target,
           int max_iterations, long prec) {
            return result_of(cmd_hensel_lift(options(prec), field, poly, y0, target, max_iterations));
        },
        py::arg("field"), py::arg("poly"), py::arg("y0") = "1", py::arg("target") = py::none(),
        py::arg("max_iterations") = 64, py::arg("prec") = kDefaultHahnPrec);
    m.def(
        "pcs_trace",
        [](const std::string& field, const std::string& gen, std::optional<std::string> poly, int steps, long prec) {
            return result_of(cmd_pcs_trace(options(prec), field, gen, poly, steps));
        },
        py::arg("field"), py::arg("gen"), py::arg("poly") = py::none(), py::arg("steps") = 8,
        py::arg("prec") = kDefaultHahnPrec);
    m.def(
        "decide_oag",
        [](const std::string& sentence, bool trivial_allowed, std::optional<std::string> group) {
            return result_of(cmd_decide_oag(options(kDefaultHahnPrec), sentence, trivial_allowed, group));
        },
        py::arg("sentence"), py::arg("trivial_allowed") = false, py::arg("group") = py::none());
    m.def(
        "run_suite",
        [](std::optional<std::string> filter, std::uint64_t seed) {
            CommandResult r;
            {
                py::gil_scoped_release release;
                r = cmd_verify_suite(options(kDefaultHahnPrec, seed), filter);
            }
            return result_of(r);
        },
        py::arg("filter") = py::none(), py::arg("seed") = kSuiteSeed);
}
