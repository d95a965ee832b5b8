#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "linkhom/catalog.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/homology.hpp"
#include "linkhom/oracle.hpp"
#include "linkhom/weights.hpp"

namespace py = pybind11;
using namespace linkhom;

namespace {

// weights, degrees and torsion coefficients are arbitrary-precision; go
// through decimal strings so Python ints of any size survive the boundary
Int to_int(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>());
}

py::int_ from_int(const Int& x) {
    const std::string s = x.str();
    PyObject* v = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!v) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(v);
}

std::vector<Int> to_int_list(const py::sequence& seq) {
    std::vector<Int> out;
    out.reserve(py::len(seq));
    for (const py::handle& item : seq) out.push_back(to_int(item));
    return out;
}

py::list from_int_list(const std::vector<Int>& xs) {
    py::list out;
    for (const Int& x : xs) out.append(from_int(x));
    return out;
}

LinkDescriptor make_link(const py::sequence& weights, const py::handle& degree) {
    return link_descriptor(validate_weights(to_int_list(weights)), to_int(degree));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact integral homology of links of weighted homogeneous hypersurface "
              "singularities";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ConventionViolation>(m, "ConventionViolation", PyExc_ArithmeticError);

    py::class_<PolynomialForm>(m, "PolynomialForm")
        .def_property_readonly("variant",
                               [](const PolynomialForm& f) {
                                   return f.variant == PolynomialVariant::BrieskornPham
                                              ? "bp"
                                              : "chain";
                               })
        .def_property_readonly("exponents",
                               [](const PolynomialForm& f) { return from_int_list(f.exponents); })
        .def_readonly("ordering", &PolynomialForm::ordering)
        .def_readonly("unit_exponents", &PolynomialForm::unit_exponents)
        .def("__repr__", [](const PolynomialForm& f) {
            std::string out = f.variant == PolynomialVariant::BrieskornPham
                                  ? std::string("PolynomialForm(bp, [")
                                  : std::string("PolynomialForm(chain, [");
            for (std::size_t i = 0; i < f.exponents.size(); ++i) {
                if (i) out += ", ";
                out += f.exponents[i].str();
            }
            return out + "])";
        });

    py::class_<HomologyResult>(m, "HomologyResult")
        .def_property_readonly("betti",
                               [](const HomologyResult& h) { return from_int(h.betti); })
        .def_property_readonly("torsion",
                               [](const HomologyResult& h) { return from_int_list(h.torsion); })
        .def_readonly("label", &HomologyResult::group_label)
        .def("__repr__", [](const HomologyResult& h) {
            return "HomologyResult(" + h.group_label + ")";
        });

    m.def(
        "validate_weights",
        [](const py::sequence& weights) {
            return from_int_list(validate_weights(to_int_list(weights)).weights());
        },
        py::arg("weights"), "check positivity and primitivity of a weight list");

    m.def(
        "fano_degree",
        [](const py::sequence& weights) {
            return from_int(fano_degree(validate_weights(to_int_list(weights))));
        },
        py::arg("weights"), "degree under the Fano convention: sum(weights) - 1");

    m.def(
        "betti",
        [](const py::sequence& weights, const py::int_& degree) {
            return from_int(betti(make_link(weights, degree)));
        },
        py::arg("weights"), py::arg("degree"));

    m.def(
        "torsion",
        [](const py::sequence& weights, const py::int_& degree) {
            return from_int_list(orlik_torsion(make_link(weights, degree)));
        },
        py::arg("weights"), py::arg("degree"));

    m.def(
        "homology",
        [](const py::sequence& weights, const py::int_& degree) {
            return homology_summary(make_link(weights, degree));
        },
        py::arg("weights"), py::arg("degree"));

    m.def(
        "bp_exponents",
        [](const py::sequence& weights, const py::int_& degree) -> std::optional<PolynomialForm> {
            return bp_exponents(validate_weights(to_int_list(weights)), to_int(degree));
        },
        py::arg("weights"), py::arg("degree"));

    m.def(
        "chain_exponents",
        [](const py::sequence& weights, const py::int_& degree) -> std::optional<PolynomialForm> {
            return chain_exponents(validate_weights(to_int_list(weights)), to_int(degree));
        },
        py::arg("weights"), py::arg("degree"), "chain test in the given weight order");

    m.def(
        "find_chain_orderings",
        [](const py::sequence& weights, const py::int_& degree) {
            return find_chain_orderings(validate_weights(to_int_list(weights)), to_int(degree));
        },
        py::arg("weights"), py::arg("degree"),
        "all weight orderings admitting chain exponents, canonical first");

    m.def("milnor_number", [](const PolynomialForm& f) { return from_int(milnor_number(f)); },
          py::arg("form"));

    m.def(
        "eigen1_count",
        [](const py::sequence& exponents, long long cap) {
            return from_int(eigen1_count(to_int_list(exponents), cap));
        },
        py::arg("exponents"), py::arg("cap") = kDefaultMatrixCap);

    m.def(
        "oracle_homology",
        [](const py::sequence& exponents, long long cap) {
            return oracle_homology(to_int_list(exponents), cap);
        },
        py::arg("exponents"), py::arg("cap") = kDefaultMatrixCap,
        "homology from the monodromy cokernel (Brieskorn-Pham only)");

    m.def(
        "bp_link",
        [](const py::sequence& exponents) {
            LinkDescriptor link = bp_link(to_int_list(exponents));
            return py::make_tuple(from_int_list(link.weights.weights()), from_int(link.degree));
        },
        py::arg("exponents"), "canonical (weights, degree) of a Brieskorn-Pham exponent list");

    m.def(
        "smith_normal_form",
        [](const py::sequence& rows) {
            std::vector<std::vector<Int>> data;
            for (const py::handle& row : rows)
                data.push_back(to_int_list(row.cast<py::sequence>()));
            if (data.empty()) throw InvalidInput("empty matrix");
            IntMatrix mat(data.size(), data[0].size());
            for (std::size_t i = 0; i < data.size(); ++i) {
                if (data[i].size() != mat.cols)
                    throw InvalidInput("ragged matrix rows");
                for (std::size_t j = 0; j < mat.cols; ++j) mat.at(i, j) = data[i][j];
            }
            return from_int_list(smith_normal_form(std::move(mat)).invariant_factors);
        },
        py::arg("rows"), "invariant factors, nonzero first in divisibility order");

    m.def(
        "scan_csv",
        [](const std::string& text, bool test_bp, bool test_chain, bool ke_only, bool homology,
           const std::string& format) {
            ParsedCatalog parsed = parse_catalog(std::string_view(text));
            ScanOptions opts;
            opts.test_bp = test_bp;
            opts.test_chain = test_chain;
            opts.ke_only = ke_only;
            opts.homology = homology;
            py::list errors;
            for (const RowError& err : parsed.errors)
                errors.append(py::make_tuple(err.line, err.message));
            return py::make_tuple(emit_report(scan(parsed.entries, opts), format), errors);
        },
        py::arg("text"), py::arg("test_bp") = true, py::arg("test_chain") = true,
        py::arg("ke_only") = false, py::arg("homology") = true, py::arg("format") = "json",
        "scan a catalog given as CSV text; returns (report, row_errors)");

#ifdef LINKHOM_VERSION
    m.attr("__version__") = LINKHOM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
