// Python bindings for the laukit core. Scalars cross the boundary as strings
// in the same exact-rational grammar the file formats use ("3/2", "-1+2i"),
// so Python callers never see rounded values.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laukit/address.hpp"
#include "laukit/analysis.hpp"
#include "laukit/constructions.hpp"
#include "laukit/corpus.hpp"
#include "laukit/error.hpp"
#include "laukit/io.hpp"
#include "laukit/lab.hpp"

namespace py = pybind11;
using namespace laukit;

namespace {

std::vector<Scalar> parse_coeffs(const std::vector<std::string>& text) {
    std::vector<Scalar> out;
    out.reserve(text.size());
    for (const std::string& t : text) out.push_back(parse_scalar(t));
    return out;
}

std::vector<std::string> format_coeffs(const std::vector<Scalar>& coeffs) {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const Scalar& c : coeffs) out.push_back(to_string(c));
    return out;
}

std::vector<std::vector<std::string>> format_matrix(const Mat& m) {
    std::vector<std::vector<std::string>> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        rows[i].resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = to_string(m.at(i, j));
    }
    return rows;
}

LinearMap map_from_lists(const AlgebraPtr& domain, const AlgebraPtr& codomain,
                         const std::vector<std::vector<std::string>>& rows) {
    Mat m(codomain->dim(), domain->dim());
    if (rows.size() != m.rows) throw ParseError("matrix must have dim(codomain) rows");
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (rows[i].size() != m.cols) throw ParseError("matrix rows must have dim(domain) entries");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = parse_scalar(rows[i][j]);
    }
    return LinearMap(domain, codomain, std::move(m));
}

std::string witness_or_empty(const std::optional<MultiplicativityWitness>& w) {
    return w ? w->to_string() : std::string();
}

// pybind11 cannot hold shared_ptr<const T>, so the bound Algebra is a thin
// value wrapper around the immutable library handle.
struct PyAlgebra {
    AlgebraPtr ptr;
};

PyAlgebra wrap(AlgebraPtr p) { return PyAlgebra{std::move(p)}; }

}  // namespace

PYBIND11_MODULE(laukit, m) {
    m.doc() = "Finite-dimensional complex algebras with exact arithmetic: direct sums, "
              "unitizations, Lau products, and the checks that verify them.";
    m.attr("__version__") = "0.1.0";

    // translators run newest-first, so the base Error goes in first and the
    // most derived kinds take precedence
    py::register_exception<Error>(m, "LaukitError", PyExc_RuntimeError);
    py::register_exception<MathError>(m, "LaukitCheckError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "LaukitParseError", PyExc_ValueError);

    py::class_<Element>(m, "Element")
        .def_property_readonly("algebra", [](const Element& e) { return wrap(e.algebra()); })
        .def_property_readonly("coeffs", [](const Element& e) { return format_coeffs(e.coeffs()); })
        .def("is_zero", &Element::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const Element& a, const Element& b) { return multiply(a, b); })
        .def("scale", [](const Element& e, const std::string& s) { return parse_scalar(s) * e; })
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__repr__", [](const Element& e) { return "<Element " + e.to_string() + ">"; });

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const PyAlgebra& a) { return a.ptr->name(); })
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.ptr->dim(); })
        .def_property_readonly("basis_labels",
                               [](const PyAlgebra& a) { return a.ptr->basis_labels(); })
        .def("basis_element",
             [](const PyAlgebra& a, std::size_t i) { return a.ptr->basis_element(i); },
             py::arg("i"))
        .def("zero", [](const PyAlgebra& a) { return a.ptr->zero(); })
        .def("element",
             [](const PyAlgebra& a, const std::vector<std::string>& coeffs) {
                 return a.ptr->element(parse_coeffs(coeffs));
             },
             py::arg("coeffs"))
        .def("structure_constant",
             [](const PyAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
                 if (i >= a.ptr->dim() || j >= a.ptr->dim() || k >= a.ptr->dim())
                     throw ParseError("structure constant index out of range");
                 return to_string(a.ptr->c(i, j, k));
             })
        .def("same_structure",
             [](const PyAlgebra& a, const PyAlgebra& b) { return a.ptr->same_structure(*b.ptr); })
        .def("__eq__", [](const PyAlgebra& a, const PyAlgebra& b) { return *a.ptr == *b.ptr; })
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra " + a.ptr->name() + " dim=" + std::to_string(a.ptr->dim()) + ">";
        });

    py::class_<LinearMap>(m, "LinearMap")
        .def(py::init([](const PyAlgebra& domain, const PyAlgebra& codomain,
                         const std::vector<std::vector<std::string>>& rows) {
                 return map_from_lists(domain.ptr, codomain.ptr, rows);
             }),
             py::arg("domain"), py::arg("codomain"), py::arg("matrix"))
        .def_property_readonly("domain", [](const LinearMap& t) { return wrap(t.domain()); })
        .def_property_readonly("codomain", [](const LinearMap& t) { return wrap(t.codomain()); })
        .def_property_readonly("matrix", [](const LinearMap& t) { return format_matrix(t.matrix()); })
        .def("__call__", &LinearMap::apply, py::arg("x"))
        .def("inverse", &LinearMap::inverse)
        .def("__repr__", [](const LinearMap& t) { return "<LinearMap " + t.to_string() + ">"; });
    m.def("zero_map",
          [](const PyAlgebra& domain, const PyAlgebra& codomain) {
              return LinearMap::zero_map(domain.ptr, codomain.ptr);
          },
          py::arg("domain"), py::arg("codomain"));
    m.def("identity_map", [](const PyAlgebra& a) { return LinearMap::identity(a.ptr); },
          py::arg("algebra"));
    m.def("compose", &compose, py::arg("f"), py::arg("g"), "f after g");

    py::class_<Subspace>(m, "Subspace")
        .def(py::init([](const PyAlgebra& ambient, std::vector<Element> spanning) {
                 return Subspace(ambient.ptr, std::move(spanning));
             }),
             py::arg("ambient"), py::arg("spanning"))
        .def_property_readonly("ambient", [](const Subspace& s) { return wrap(s.ambient()); })
        .def_property_readonly("rank", &Subspace::rank)
        .def_property_readonly("codimension", &Subspace::codimension)
        .def_property_readonly("reduced_basis", &Subspace::reduced_basis)
        .def("contains", &Subspace::contains, py::arg("x"));

    py::class_<AssociativityReport>(m, "AssociativityReport")
        .def_readonly("passed", &AssociativityReport::pass)
        .def_property_readonly("witness",
                               [](const AssociativityReport& r) {
                                   return r.witness ? r.witness->to_string() : std::string();
                               })
        .def("__bool__", [](const AssociativityReport& r) { return r.pass; })
        .def("__repr__", [](const AssociativityReport& r) {
            return std::string("<AssociativityReport ") + (r.pass ? "pass" : "fail") + ">";
        });

    py::class_<HomReport>(m, "HomReport")
        .def_readonly("passed", &HomReport::pass)
        .def_readonly("note", &HomReport::note)
        .def_property_readonly("witness",
                               [](const HomReport& r) { return witness_or_empty(r.witness); })
        .def("__bool__", [](const HomReport& r) { return r.pass; });

    py::class_<CharReport>(m, "CharReport")
        .def_readonly("passed", &CharReport::pass)
        .def_readonly("nonzero", &CharReport::nonzero)
        .def_readonly("multiplicative", &CharReport::multiplicative)
        .def_property_readonly("witness",
                               [](const CharReport& r) { return witness_or_empty(r.witness); })
        .def("__bool__", [](const CharReport& r) { return r.pass; });

    py::class_<IsoReport>(m, "IsoReport")
        .def_readonly("passed", &IsoReport::pass)
        .def_readonly("square", &IsoReport::square)
        .def_readonly("bijective", &IsoReport::bijective)
        .def_readonly("multiplicative", &IsoReport::multiplicative)
        .def_readonly("failed_clause", &IsoReport::failed_clause)
        .def_property_readonly("determinant",
                               [](const IsoReport& r) { return to_string(r.determinant); })
        .def_property_readonly("witness",
                               [](const IsoReport& r) { return witness_or_empty(r.witness); })
        .def("__bool__", [](const IsoReport& r) { return r.pass; })
        .def("__repr__", [](const IsoReport& r) {
            return std::string("<IsoReport ") + (r.pass ? "pass" : "fail: " + r.failed_clause) + ">";
        });

    py::class_<SubspaceReport>(m, "SubspaceReport")
        .def_readonly("rank", &SubspaceReport::rank)
        .def_readonly("codimension", &SubspaceReport::codimension)
        .def_readonly("is_subalgebra", &SubspaceReport::is_subalgebra)
        .def_readonly("is_left_ideal", &SubspaceReport::is_left_ideal)
        .def_readonly("is_right_ideal", &SubspaceReport::is_right_ideal)
        .def_readonly("is_ideal", &SubspaceReport::is_ideal)
        .def_property_readonly("ideal_witness", [](const SubspaceReport& r) {
            if (r.left_ideal_witness) return r.left_ideal_witness->to_string();
            if (r.right_ideal_witness) return r.right_ideal_witness->to_string();
            return std::string();
        });

    py::class_<Fingerprint>(m, "Fingerprint")
        .def_readonly("dim", &Fingerprint::dim)
        .def_readonly("unital", &Fingerprint::unital)
        .def_readonly("commutative", &Fingerprint::commutative)
        .def_readonly("center_dim", &Fingerprint::center_dim)
        .def_readonly("radical_dim", &Fingerprint::radical_dim)
        .def_property_readonly("semisimple", &Fingerprint::semisimple)
        .def("__eq__", [](const Fingerprint& a, const Fingerprint& b) { return a == b; })
        .def("__repr__", [](const Fingerprint& f) {
            return "<Fingerprint dim=" + std::to_string(f.dim) +
                   " unital=" + (f.unital ? "True" : "False") +
                   " commutative=" + (f.commutative ? "True" : "False") +
                   " center_dim=" + std::to_string(f.center_dim) +
                   " radical_dim=" + std::to_string(f.radical_dim) + ">";
        });

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("field", &Certificate::field)
        .def_readonly("left", &Certificate::left)
        .def_readonly("right", &Certificate::right)
        .def("__repr__", [](const Certificate& c) { return "<Certificate " + c.to_string() + ">"; });

    py::class_<NormReport>(m, "NormReport")
        .def_readonly("mult_constant", &NormReport::mult_constant)
        .def_readonly("renorm_factor", &NormReport::renorm_factor)
        .def_readonly("samples_checked", &NormReport::samples_checked)
        .def_readonly("max_violation", &NormReport::max_violation)
        .def_property_readonly("passed", &NormReport::pass)
        .def("__bool__", [](const NormReport& r) { return r.pass(); });

    py::class_<LabFailure>(m, "LabFailure")
        .def_readonly("description", &LabFailure::description)
        .def_readonly("replay", &LabFailure::replay)
        .def("__repr__", [](const LabFailure& f) { return "<LabFailure " + f.description + ">"; });

    py::class_<LabSection>(m, "LabSection")
        .def_readonly("cases", &LabSection::cases)
        .def_readonly("failures", &LabSection::failures);

    py::class_<LabReport>(m, "LabReport")
        .def_readonly("predicate", &LabReport::predicate)
        .def_readonly("h1_unitization", &LabReport::h1_unitization)
        .def_readonly("h2_direct_sum", &LabReport::h2_direct_sum)
        .def_readonly("h3_finite_codim", &LabReport::h3_finite_codim)
        .def_readonly("conclusion_lau", &LabReport::conclusion_lau)
        .def_property_readonly("all_passed", &LabReport::all_passed)
        .def("to_json", [](const LabReport& r) { return dump_canonical(lab_report_to_json(r)); });

    // catalog and addressing
    m.def("catalog",
          [](const std::string& spec) { return wrap(catalog_algebra(CatalogSpec::parse(spec))); },
          py::arg("spec"), "Deterministic catalog algebra, e.g. catalog(\"matrix:2\")");
    m.def("resolve",
          [](const std::string& arg) { return wrap(resolve_algebra(arg).algebra); }, py::arg("arg"),
          "Algebra from a catalog spec, construction expression, or file path");
    m.def("catalog_character",
          [](const std::string& spec, const std::string& which) {
              return catalog_character(CatalogSpec::parse(spec), which);
          },
          py::arg("algebra_spec"), py::arg("which"),
          "Named character: id, coord:k, eval0, or aug");
    m.def("random_element",
          [](const PyAlgebra& a, std::uint64_t seed, long bound) {
              return random_element(a.ptr, seed, bound);
          },
          py::arg("algebra"), py::arg("seed"), py::arg("bound"));

    // core checks
    m.def("multiply", &multiply, py::arg("x"), py::arg("y"));
    m.def("is_associative", [](const PyAlgebra& a) { return is_associative(a.ptr); },
          py::arg("algebra"));
    m.def("find_identity", [](const PyAlgebra& a) { return find_identity(a.ptr); },
          py::arg("algebra"));
    m.def("complex_algebra", [] { return wrap(complex_algebra()); });

    // constructions
    m.def("direct_sum",
          [](const PyAlgebra& a, const PyAlgebra& b) { return wrap(direct_sum(a.ptr, b.ptr)); },
          py::arg("a"), py::arg("b"));
    m.def("unitization",
          [](const PyAlgebra& a) {
              Unitization u = unitization(a.ptr);
              return py::make_tuple(wrap(u.algebra), u.inclusion);
          },
          py::arg("a"), "Returns (A_sharp, inclusion map)");
    m.def("generalized_lau_product",
          [](const PyAlgebra& a, const PyAlgebra& b, const LinearMap& t) {
              return wrap(generalized_lau_product(a.ptr, b.ptr, t));
          },
          py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("lau_product",
          [](const PyAlgebra& a, const PyAlgebra& b, const LinearMap& chi) {
              return wrap(lau_product(a.ptr, b.ptr, chi));
          },
          py::arg("a"), py::arg("b"), py::arg("chi"));
    m.def("character_to_hom",
          [](const PyAlgebra& a, const LinearMap& chi) { return character_to_hom(a.ptr, chi); },
          py::arg("a"), py::arg("chi"));
    m.def("trivializing_isomorphism",
          [](const PyAlgebra& a, const PyAlgebra& b, const LinearMap& t) {
              return trivializing_isomorphism(a.ptr, b.ptr, t);
          },
          py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("unitization_embedding",
          [](const PyAlgebra& a, const PyAlgebra& b, const LinearMap& chi) {
              return unitization_embedding(a.ptr, b.ptr, chi);
          },
          py::arg("a"), py::arg("b"), py::arg("chi"));

    // morphism verdicts
    m.def("is_homomorphism", &is_homomorphism, py::arg("t"));
    m.def("is_character", &is_character, py::arg("chi"));
    m.def("verify_isomorphism", &verify_isomorphism, py::arg("f"));
    m.def("subspace_report", &subspace_report, py::arg("subspace"));
    m.def("subspace_algebra",
          [](const Subspace& s, const std::string& name) { return wrap(subspace_algebra(s, name)); },
          py::arg("subspace"), py::arg("name"));

    // analysis
    m.def("fingerprint", [](const PyAlgebra& a) { return fingerprint(a.ptr); }, py::arg("algebra"));
    m.def("distinguish",
          [](const PyAlgebra& a, const PyAlgebra& b) { return distinguish(a.ptr, b.ptr); },
          py::arg("a"), py::arg("b"));
    m.def("norm_report",
          [](const PyAlgebra& a, long samples, std::uint64_t seed) {
              return norm_report(a.ptr, samples, seed);
          },
          py::arg("algebra"), py::arg("samples"), py::arg("seed"));

    // files
    m.def("algebra_to_json", [](const PyAlgebra& a) { return write_algebra(*a.ptr); }, py::arg("a"));
    m.def("algebra_from_json",
          [](const std::string& text, bool checked) { return wrap(read_algebra(text, checked)); },
          py::arg("text"), py::arg("checked") = true);
    m.def("map_to_json", [](const LinearMap& t) { return write_map(t); }, py::arg("t"));
    m.def("map_from_json",
          [](const std::string& text, bool checked) { return read_map(text, checked); },
          py::arg("text"), py::arg("checked") = true);
    m.def("parse_scalar_canonical",
          [](const std::string& text) { return to_string(parse_scalar(text)); }, py::arg("text"),
          "Parse a scalar and return its canonical form");

    // the property lab
    m.def("run_lab",
          [](const std::string& predicate) {
              std::optional<Predicate> p = parse_predicate(predicate);
              if (!p) throw ParseError("unknown predicate \"" + predicate + "\"");
              return run_lab(*p);
          },
          py::arg("predicate"), "Run the preservation lab: unital, commutative, or semisimple");
}
