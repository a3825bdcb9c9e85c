#include "fpalg/algebras.hpp"
#include "fpalg/homs.hpp"
#include "fpalg/parse.hpp"
#include "fpalg/presentation_file.hpp"
#include "fpalg/print.hpp"
#include "fpalg/repmat.hpp"
#include "fpalg/report.hpp"
#include "fpalg/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

const fpalg::Presentation& algebra_or_throw(const std::string& name) {
    auto which = fpalg::builtin_from_name(name);
    if (!which)
        throw fpalg::Error("unknown algebra '" + name + "'");
    return fpalg::builtin(*which);
}

const fpalg::RewriteSystem& system_or_throw(const fpalg::Presentation& pres) {
    if (!pres.system)
        throw fpalg::Error("'" + pres.name + "' carries no rewrite system");
    return *pres.system;
}

const fpalg::Hom& hom_or_throw(const std::string& name) {
    auto which = fpalg::builtin_hom_from_name(name);
    if (!which)
        throw fpalg::Error("unknown homomorphism '" + name + "'");
    return fpalg::builtin_hom(*which);
}

bool is_racah_source(const fpalg::Hom& hom) {
    return hom.source.alphabet == fpalg::builtin(fpalg::Builtin::Racah).alphabet;
}

py::object json_to_py(const fpalg::OrderedJson& value) {
    using Json = fpalg::OrderedJson;
    switch (value.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(value.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(value.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(value.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(value.get<double>());
        case Json::value_t::string:
            return py::str(value.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, item] : value.items())
                out[py::str(key)] = json_to_py(item);
            return out;
        }
        default:
            return py::none();
    }
}

std::string py_normalize(const std::string& algebra, const std::string& expr) {
    const auto& pres = algebra_or_throw(algebra);
    const auto& system = system_or_throw(pres);
    fpalg::Poly p = fpalg::parse_expr(expr, pres.alphabet);
    return fpalg::to_string(system.normalize(p), pres.alphabet);
}

std::string py_expand(const std::string& algebra, const std::string& expr) {
    const auto& pres = algebra_or_throw(algebra);
    fpalg::Poly p = fpalg::parse_expr(expr, pres.alphabet);
    return fpalg::to_string(p, pres.alphabet);
}

py::object py_confluence(const std::string& algebra) {
    const auto& pres = algebra_or_throw(algebra);
    const auto& system = system_or_throw(pres);
    return json_to_py(fpalg::render_json(system.check_confluence(), pres.alphabet));
}

std::size_t py_pbw_count(const std::string& algebra, std::size_t degree) {
    const auto& pres = algebra_or_throw(algebra);
    return fpalg::pbw_count(system_or_throw(pres), degree);
}

py::object py_verify_hom(const std::string& name) {
    const fpalg::Hom& hom = hom_or_throw(name);
    fpalg::Report report = is_racah_source(hom) ? fpalg::verify_racah_hom(hom)
                                                : fpalg::verify_hom(hom);
    return json_to_py(fpalg::render_json(report));
}

py::object py_verify_hom_file(const std::string& path) {
    fpalg::PresentationFile file = fpalg::load_presentation_file(path);
    if (file.homs.empty())
        throw fpalg::Error("'" + path + "' declares no homomorphism blocks");
    py::list out;
    for (const auto& hom : file.homs)
        out.append(json_to_py(fpalg::render_json(fpalg::verify_hom(hom))));
    return out;
}

py::object py_verify_inverse(const std::string& first, const std::string& second) {
    fpalg::Report report =
        fpalg::verify_mutually_inverse(hom_or_throw(first), hom_or_throw(second));
    return json_to_py(fpalg::render_json(report));
}

py::object py_verify_diagram() {
    using fpalg::BuiltinHom;
    std::vector<fpalg::Hom> top{fpalg::builtin_hom(BuiltinHom::RacahToSl2),
                                fpalg::builtin_hom(BuiltinHom::InclSl2InSl2Z2),
                                fpalg::builtin_hom(BuiltinHom::Sl2Z2ToAcsaZ2)};
    std::vector<fpalg::Hom> bottom{fpalg::builtin_hom(BuiltinHom::RacahToAcsa),
                                   fpalg::builtin_hom(BuiltinHom::InclAcsaInAcsaZ2)};
    std::vector<fpalg::Hom> top2{fpalg::builtin_hom(BuiltinHom::RacahToSl2),
                                 fpalg::builtin_hom(BuiltinHom::InclSl2InSl2Z2)};
    std::vector<fpalg::Hom> bottom2{
        fpalg::builtin_hom(BuiltinHom::RacahToAcsa),
        fpalg::builtin_hom(BuiltinHom::InclAcsaInAcsaZ2),
        fpalg::builtin_hom(BuiltinHom::AcsaZ2ToSl2Z2)};
    py::list out;
    out.append(json_to_py(fpalg::render_json(fpalg::verify_diagram(top, bottom))));
    out.append(json_to_py(fpalg::render_json(fpalg::verify_diagram(top2, bottom2))));
    return out;
}

py::object py_rep_check(const std::string& algebra, unsigned n) {
    const auto& pres = algebra_or_throw(algebra);
    auto which = *fpalg::builtin_from_name(algebra);
    fpalg::RepReport report = [&] {
        switch (which) {
            case fpalg::Builtin::Sl2:
                return fpalg::verify_rep(*pres.system, fpalg::sl2_irrep(n));
            case fpalg::Builtin::So3:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::So3, n));
            case fpalg::Builtin::Acsa:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::Acsa, n));
            case fpalg::Builtin::Sl2Z2:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::Sl2Z2, n));
            case fpalg::Builtin::AcsaZ2:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::AcsaZ2, n));
            case fpalg::Builtin::Racah:
                return fpalg::verify_racah_rep(
                    fpalg::induced_rep(fpalg::InducedRep::RacahImages, n));
        }
        throw fpalg::Error("unreachable");
    }();
    return json_to_py(fpalg::render_json(report));
}

py::object py_verify_all() {
    return json_to_py(fpalg::render_json(fpalg::run_acceptance_suite()));
}

} // namespace

PYBIND11_MODULE(_fpalg, m) {
    m.doc() = "Exact verification engine for finitely presented algebras";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fpalg::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const fpalg::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("builtins", [] { return fpalg::builtin_names(); },
          "Names of the built-in algebra presentations.");
    m.def("builtin_homs", [] { return fpalg::builtin_hom_names(); },
          "Names of the built-in homomorphisms.");
    m.def("normalize", &py_normalize, py::arg("algebra"), py::arg("expr"),
          "Parse an expression and return its normal form as a string.");
    m.def("expand", &py_expand, py::arg("algebra"), py::arg("expr"),
          "Parse an expression and return its canonical form without rewriting.");
    m.def("confluence", &py_confluence, py::arg("algebra"),
          "Critical-pair report for a built-in rewrite system as a dict.");
    m.def("pbw_count", &py_pbw_count, py::arg("algebra"), py::arg("degree"),
          "Number of irreducible words of the given degree.");
    m.def("verify_hom", &py_verify_hom, py::arg("name"),
          "Verify one built-in homomorphism; returns the report dict.");
    m.def("verify_hom_file", &py_verify_hom_file, py::arg("path"),
          "Verify every homomorphism block of a presentation file.");
    m.def("verify_inverse", &py_verify_inverse, py::arg("first"), py::arg("second"),
          "Verify that two built-in homomorphisms are mutually inverse.");
    m.def("verify_diagram", &py_verify_diagram,
          "Verify both orientations of the built-in commuting square.");
    m.def("rep_check", &py_rep_check, py::arg("algebra"), py::arg("n"),
          "Check defining relations in the exact matrix representation of "
          "weight n (matrices of size n+1).");
    m.def("verify_all", &py_verify_all,
          "Run the full acceptance suite; returns the criteria dict.");
}
