#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantorgap/difference.hpp"
#include "cantorgap/family.hpp"
#include "cantorgap/json_io.hpp"
#include "cantorgap/report.hpp"

namespace py = pybind11;
using namespace cantorgap;

// Rational <-> fractions.Fraction. Also accepts int and "p/q" strings on input; floats are refused.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src) return false;
        try {
            if (PyBool_Check(src.ptr())) return false;
            if (PyLong_Check(src.ptr())) {
                value = Rational::parse(py::str(src).cast<std::string>());
                return true;
            }
            if (PyUnicode_Check(src.ptr())) {
                value = Rational::parse(src.cast<std::string>());
                return true;
            }
            const py::object fraction = py::module_::import("fractions").attr("Fraction");
            if (py::isinstance(src, fraction)) {
                const std::string text = py::str(src.attr("numerator")).cast<std::string>() + "/" +
                                         py::str(src.attr("denominator")).cast<std::string>();
                value = Rational::parse(text);
                return true;
            }
        } catch (const std::exception&) {
            return false;
        }
        return false;
    }

    static handle cast(const Rational& r, return_value_policy, handle) {
        const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::object builtins_int = py::module_::import("builtins").attr("int");
        return fraction(builtins_int(r.numerator_str()), builtins_int(r.denominator_str())).release();
    }
};
}  // namespace pybind11::detail

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

IntervalUnion union_from_list(const std::vector<Interval>& parts) { return normalize(parts); }

}  // namespace

PYBIND11_MODULE(_cantorgap, m) {
    m.doc() = "Exact interval unions, Cantor constructions and gap-difference brackets";

    auto spec_error = py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<IncompatibleSelector>(m, "IncompatibleSelector", spec_error.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<NotCertifiable>(m, "NotCertifiable", PyExc_RuntimeError);

    py::class_<Interval>(m, "Interval")
        .def(py::init<Rational, Rational, bool, bool>(), py::arg("lo"), py::arg("hi"), py::arg("lo_closed") = true,
             py::arg("hi_closed") = true)
        .def_static("closed", &Interval::closed)
        .def_static("open", &Interval::open)
        .def_static("point", &Interval::point)
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def_property_readonly("lo_closed", &Interval::lo_closed)
        .def_property_readonly("hi_closed", &Interval::hi_closed)
        .def_property_readonly("length", &Interval::length)
        .def("is_point", &Interval::is_point)
        .def("__contains__", &Interval::contains)
        .def(py::self == py::self)
        .def("__repr__", &Interval::str);

    py::class_<IntervalUnion>(m, "IntervalUnion")
        .def(py::init<>())
        .def(py::init(&union_from_list), py::arg("parts"))
        .def(py::init<const Interval&>())
        .def_property_readonly("parts", &IntervalUnion::parts)
        .def("__len__", &IntervalUnion::size)
        .def("__iter__", [](const IntervalUnion& u) { return py::make_iterator(u.begin(), u.end()); },
             py::keep_alive<0, 1>())
        .def("__contains__", [](const IntervalUnion& u, const Rational& x) { return contains_point(u, x); })
        .def("__or__", &set_union)
        .def("__and__", &intersect)
        .def("__sub__", &set_difference)
        .def("__add__", &minkowski_sum)
        .def(py::self == py::self)
        .def("measure", &measure)
        .def("max_component_length", &max_component_length)
        .def("reflect", &reflect)
        .def("translate", &translate)
        .def("scale", &scale)
        .def("complement_within", &complement_within)
        .def("issubset", &is_subset)
        .def("point_parts", &point_parts)
        .def("to_json", [](const IntervalUnion& u) { return to_py(to_json(u)); })
        .def("__repr__", &IntervalUnion::str);

    m.def("minkowski_sum", &minkowski_sum);
    m.def("points", [](const std::vector<Rational>& xs) { return points(xs); });

    py::class_<GapRecord>(m, "GapRecord")
        .def_property_readonly("address", [](const GapRecord& g) { return g.address.label(); })
        .def_readonly("interval", &GapRecord::interval)
        .def_readonly("stage_created", &GapRecord::stage_created);

    py::class_<CantorStage>(m, "CantorStage")
        .def_readonly("n", &CantorStage::n)
        .def_readonly("components", &CantorStage::components)
        .def_readonly("gaps", &CantorStage::gaps)
        .def_readonly("endpoints", &CantorStage::endpoints)
        .def_readonly("diagnostics", &CantorStage::diagnostics)
        .def_property_readonly("family", [](const CantorStage& s) { return family_name(s.family); })
        .def("gap_table",
             [](const CantorStage& s) {
                 py::list rows;
                 for (const auto& r : gap_table(s)) rows.append(py::make_tuple(r.address, r.lo, r.hi, r.stage_created));
                 return rows;
             })
        .def("to_json", [](const CantorStage& s) { return to_py(to_json(s)); });

    py::class_<FamilySpec>(m, "FamilySpec")
        .def_static("from_json", [](const std::string& text) { return parse_family_spec(text); })
        .def_static("ternary", &FamilySpec::ternary)
        .def_static("central", &FamilySpec::central_constant, py::arg("a"))
        .def_static("perturbed", &FamilySpec::perturbed_default)
        .def_static("tab", &FamilySpec::tab_builtin)
        .def_static("greedy", &FamilySpec::greedy_default)
        .def_property_readonly("family", [](const FamilySpec& s) { return family_name(s.family); })
        .def("stage", [](const FamilySpec& s, int n, std::size_t budget) { return s.stage(n, Budget{budget}); },
             py::arg("n"), py::arg("budget") = Budget{}.max_components)
        .def("to_json", [](const FamilySpec& s) { return to_py(family_to_json(s)); });

    m.def("builtin_families", [] {
        py::dict out;
        for (const auto& [name, spec] : builtin_families()) out[py::str(name)] = spec;
        return out;
    });

    py::class_<DiffBracket>(m, "DiffBracket")
        .def_readonly("n", &DiffBracket::n)
        .def_readonly("inner", &DiffBracket::inner)
        .def_readonly("outer", &DiffBracket::outer)
        .def_readonly("missing_outer", &DiffBracket::missing_outer)
        .def_readonly("missing_inner", &DiffBracket::missing_inner)
        .def("to_json", [](const DiffBracket& b) { return to_py(to_json(b)); });

    m.def("inner_diff", &inner_diff);
    m.def("outer_diff", &outer_diff);
    m.def("diff_bracket", &diff_bracket);
    m.def(
        "theoretical_missing_set",
        [](const FamilySpec& spec, int k_max) {
            if (spec.family != Family::Central) throw SpecError("theoretical_missing_set needs a central family");
            return theoretical_missing_set(spec.central, k_max).points;
        },
        py::arg("spec"), py::arg("k_max"));

    m.def("verify_selectors", &verify_selectors);
    m.def(
        "verify",
        [](const std::string& selector, const FamilySpec& spec, int max_stage, std::size_t budget) {
            VerifyOptions opts;
            opts.max_stage = max_stage;
            opts.budget = Budget{budget};
            return to_py(verify(selector, spec, opts).to_json());
        },
        py::arg("selector"), py::arg("spec"), py::arg("max_stage") = 8,
        py::arg("budget") = Budget{}.max_components);
    m.def(
        "measure_scan",
        [](const FamilySpec& spec, int max_stage) {
            py::list rows;
            for (const auto& r : measure_scan(spec, max_stage)) {
                py::dict d;
                d["n"] = r.n;
                d["measure"] = r.set_measure;
                d["max_component"] = r.max_component;
                d["components"] = r.components;
                d["missing_central"] = r.missing_central;
                d["missing_total"] = r.missing_total;
                d["outer"] = r.outer_measure;
                rows.append(d);
            }
            return rows;
        },
        py::arg("spec"), py::arg("max_stage") = 8);
}
