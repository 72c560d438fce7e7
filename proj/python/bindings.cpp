#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "effalg/constructions.hpp"
#include "effalg/decomposition.hpp"
#include "effalg/io.hpp"
#include "effalg/laws.hpp"
#include "effalg/state.hpp"

namespace py = pybind11;
using namespace effalg;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

Rational from_python(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

ElementId lookup(const Analysis& a, const std::string& name) {
    auto id = a.algebra().find(name);
    if (!id) throw py::key_error("unknown element '" + name + "'");
    return *id;
}

py::object maybe_name(const Analysis& a, std::optional<ElementId> x) {
    if (!x) return py::none();
    return py::str(a.name(*x));
}

std::vector<std::string> names_of(const Analysis& a, const std::vector<ElementId>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(a.name(x));
    return out;
}

py::dict values_of(const EffectAlgebra& algebra, const State& state) {
    py::dict out;
    for (auto x : algebra.elements()) out[py::str(algebra.name(x))] = fraction(state[x]);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite effect algebras: validation, structure, decompositions and states";

    py::register_exception<Error>(m, "EffalgError", PyExc_ValueError);

    py::class_<Analysis, std::shared_ptr<Analysis>>(m, "Algebra")
        .def_static("from_eaf", [](const std::string& text) { return std::make_shared<Analysis>(load_eaf(text)); },
                    py::arg("text"))
        .def("to_eaf", [](const Analysis& a) { return serialize_eaf(a.algebra()); })
        .def_property_readonly("size", [](const Analysis& a) { return a.algebra().size(); })
        .def_property_readonly("names", [](const Analysis& a) { return a.algebra().names(); })
        .def_property_readonly("zero", [](const Analysis& a) { return a.name(a.algebra().zero()); })
        .def_property_readonly("one", [](const Analysis& a) { return a.name(a.algebra().one()); })
        .def_property_readonly("is_lattice", &Analysis::is_lattice)
        .def_property_readonly("is_mv", [](const Analysis& a) { return a.order().is_mv(); })
        .def_property_readonly("atoms", [](const Analysis& a) { return names_of(a, a.profile().atoms); })
        .def_property_readonly("sharp", [](const Analysis& a) { return names_of(a, a.profile().sharp); })
        .def_property_readonly("meager", [](const Analysis& a) { return names_of(a, a.profile().meager); })
        .def_property_readonly("flags",
                               [](const Analysis& a) {
                                   const auto& f = a.profile().flags;
                                   py::dict d;
                                   d["lattice"] = a.is_lattice();
                                   d["mv"] = a.order().is_mv();
                                   d["atomic"] = f.atomic;
                                   d["archimedean"] = f.archimedean;
                                   d["sharply_dominating"] = f.sharply_dominating;
                                   d["s_dominating"] = f.s_dominating;
                                   return d;
                               })
        .def("ord", [](const Analysis& a, const std::string& x) { return a.ord(lookup(a, x)); })
        .def("sum",
             [](const Analysis& a, const std::string& x, const std::string& y) {
                 return maybe_name(a, a.algebra().sum(lookup(a, x), lookup(a, y)));
             })
        .def("leq",
             [](const Analysis& a, const std::string& x, const std::string& y) {
                 return a.algebra().leq(lookup(a, x), lookup(a, y));
             })
        .def("supplement",
             [](const Analysis& a, const std::string& x) { return a.name(a.algebra().supplement(lookup(a, x))); })
        .def("meet",
             [](const Analysis& a, const std::string& x, const std::string& y) {
                 return maybe_name(a, a.order().meet(lookup(a, x), lookup(a, y)));
             })
        .def("join",
             [](const Analysis& a, const std::string& x, const std::string& y) {
                 return maybe_name(a, a.order().join(lookup(a, x), lookup(a, y)));
             })
        .def("__len__", [](const Analysis& a) { return a.algebra().size(); })
        .def("__repr__", [](const Analysis& a) {
            return "<Algebra with " + std::to_string(a.algebra().size()) + " elements>";
        });

    auto wrap = [](EffectAlgebra e) { return std::make_shared<Analysis>(std::move(e)); };
    m.def("mv_chain", [wrap](std::size_t n, const std::string& g) { return wrap(mv_chain(n, g)); }, py::arg("n"),
          py::arg("generator") = "a");
    m.def("boolean_algebra", [wrap](std::size_t k) { return wrap(boolean_algebra(k)); }, py::arg("k"));
    m.def("horizontal_sum", [wrap](const std::vector<std::shared_ptr<Analysis>>& parts) {
        std::vector<EffectAlgebra> blocks;
        for (const auto& p : parts) blocks.push_back(p->algebra());
        return wrap(horizontal_sum(blocks));
    });
    m.def("direct_product", [wrap](const Analysis& l, const Analysis& r) {
        return wrap(direct_product(l.algebra(), r.algebra()));
    });
    m.def("fixture", [wrap](const std::string& name) { return wrap(fixture(name)); }, py::arg("name"));
    m.def("fixture_names", &fixture_names);

    m.def(
        "verify_eaf",
        [](const std::string& text) {
            const auto doc = parse_eaf(text);
            py::list out;
            try {
                build_effect_algebra(doc);
            } catch (const AxiomViolation& e) {
                for (const auto& v : e.report().violations) {
                    py::list witnesses;
                    for (auto w : v.witnesses) witnesses.append(doc.names.at(w.index));
                    out.append(py::dict(py::arg("axiom") = std::string(axiom_label(v.axiom)),
                                        py::arg("witnesses") = witnesses, py::arg("detail") = v.detail));
                }
            }
            return out;
        },
        py::arg("text"), "Axiom violations of an EAF document; empty when it is an effect algebra.");

    m.def(
        "decompose",
        [](const Analysis& a, const std::string& name) {
            const ElementId x = lookup(a, name);
            py::dict out;
            AtomicDecomposition parts;
            if (a.is_lattice()) {
                auto basic = basic_decomposition(a, x);
                out["mode"] = "basic";
                out["sharp_part"] = a.name(basic.sharp_part);
                parts = std::move(basic.meager_parts);
            } else {
                out["mode"] = "atomic-degraded";
                out["sharp_part"] = py::none();
                parts = atomic_decomposition(a, x);
            }
            py::list list;
            for (const auto& p : parts.parts) list.append(py::make_tuple(a.name(p.atom), p.multiplicity));
            out["parts"] = list;
            return out;
        },
        py::arg("algebra"), py::arg("element"));

    m.def(
        "find_state",
        [](const Analysis& a) -> py::object {
            auto result = find_state(a.algebra());
            if (auto* s = std::get_if<State>(&result)) return values_of(a.algebra(), *s);
            return py::none();
        },
        py::arg("algebra"), "A state as {name: Fraction}, or None when the algebra has none.");

    m.def(
        "certify_no_state",
        [](const Analysis& a) -> py::object {
            auto result = find_state(a.algebra());
            const auto* cert = std::get_if<InfeasibilityCertificate>(&result);
            if (!cert) return py::none();
            const auto system = state_system(a.algebra());
            const auto check = check_certificate(system, *cert);
            py::list rows;
            for (std::size_t i = 0; i < system.equalities.size(); ++i) {
                if (cert->row_multipliers[i] != 0) {
                    rows.append(py::make_tuple(system.equalities[i].label, fraction(cert->row_multipliers[i])));
                }
            }
            py::dict out;
            out["rows"] = rows;
            out["gap"] = fraction(check.gap);
            out["verified"] = check.valid;
            return out;
        },
        py::arg("algebra"), "Infeasibility certificate when no state exists, otherwise None.");

    m.def(
        "smear",
        [](const Analysis& a, const py::dict& sharp_values) {
            const auto& sub = a.sharp_part();
            State omega;
            for (auto x : sub.algebra.elements()) {
                const auto& name = sub.algebra.name(x);
                if (!sharp_values.contains(name)) throw py::key_error("no value for sharp element '" + name + "'");
                omega.values.push_back(from_python(sharp_values[py::str(name)]));
            }
            return values_of(a.algebra(), smear_state(a, omega));
        },
        py::arg("algebra"), py::arg("sharp_values"));

    m.def(
        "run_laws",
        [](const Analysis& a, bool counterexample_mode, std::vector<std::string> laws) {
            const auto report = run_law_suite(a, {counterexample_mode, std::move(laws)});
            py::list out;
            for (const auto& r : report.results) {
                out.append(py::dict(py::arg("law") = r.law, py::arg("status") = std::string(status_label(r.status)),
                                    py::arg("witnesses") = r.witnesses, py::arg("detail") = r.detail));
            }
            return out;
        },
        py::arg("algebra"), py::arg("counterexample_mode") = false, py::arg("laws") = std::vector<std::string>{});
    m.def("law_ids", &law_ids);
}
