// Python bindings: thin text-in / dict-out wrappers around the core
// operations. All rational values cross the boundary as "p/q" strings so the
// arithmetic stays exact on both sides.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "torinv/errors.hpp"
#include "torinv/holonomy.hpp"
#include "torinv/ingredients.hpp"
#include "torinv/invariants.hpp"
#include "torinv/orbitspace.hpp"
#include "torinv/torus.hpp"

namespace py = pybind11;
using namespace torinv;

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

py::list qvec_list(const QVec& v) {
    py::list out;
    for (const auto& x : v) out.append(rat_str(x));
    return out;
}

py::list zmatrix_rows(const ZMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(m.at(i, j).str());
        rows.append(row);
    }
    return rows;
}

py::dict validate_text(const std::string& text) {
    IngredientList list = parse(text);
    ValidationReport report = validate(list);
    py::dict out;
    out["all_pass"] = report.all_pass();
    py::list conditions;
    for (const auto& c : report.conditions) {
        py::dict entry;
        entry["name"] = c.name;
        entry["verdict"] = c.verdict == Verdict::Pass     ? "pass"
                           : c.verdict == Verdict::Fail   ? "fail"
                                                          : "skipped";
        entry["detail"] = c.detail;
        conditions.append(entry);
    }
    out["conditions"] = conditions;
    return out;
}

py::dict invariants_text(const std::string& text) {
    IngredientList list = parse(text);
    InvariantReport rep = invariant_report(list);
    py::dict out;
    out["dim_m"] = rep.dim_m;
    out["euler"] = rep.euler;
    out["hamiltonian"] = rep.hamiltonian;
    out["pi1_abelian"] = rep.pi1_is_abelian;
    out["betti1"] = rep.betti_1;
    out["theta_rank"] = rep.theta_rank;
    py::dict h1;
    h1["free_rank"] = rep.h1_group.free_rank;
    py::list factors;
    for (const auto& d : rep.h1_group.invariant_factors) factors.append(d.str());
    h1["invariant_factors"] = factors;
    out["h1"] = h1;
    py::list chern;
    for (const auto& m : rep.chern) chern.append(zmatrix_rows(m));
    out["chern_forms"] = chern;
    py::dict moduli;
    moduli["dim"] = rep.moduli.direct;
    if (rep.moduli.formula.has_value()) moduli["closed_form"] = *rep.moduli.formula;
    if (!rep.moduli.note.empty()) moduli["note"] = rep.moduli.note;
    out["moduli"] = moduli;
    py::dict split;
    split["feasible"] = rep.split.feasible;
    if (rep.split.feasible && rep.split.complement.has_value()) {
        py::list gens;
        const ZMatrix& basis = rep.split.complement->lattice.basis;
        for (int j = 0; j < basis.cols; ++j) {
            py::list gen;
            for (int i = 0; i < basis.rows; ++i) gen.append(basis.at(i, j).str());
            gens.append(gen);
        }
        split["complement_generators"] = gens;
    }
    if (!rep.split.feasible) split["certificate"] = rep.split.certificate;
    out["splitting"] = split;
    out["aut_image_dim"] = rep.aut_dim;
    return out;
}

bool equal_text(const std::string& a, const std::string& b) {
    return lists_equal(parse(a), parse(b));
}

std::string canonical_text(const std::string& text) {
    return serialize(canonicalize(parse(text)));
}

py::dict decompose_text(const std::string& text) {
    PolyhedralParallelSpace space = parse_space(text);
    Decomposition dec = decompose(space);
    py::dict out;
    py::list axes;
    for (int a : dec.complement_axes) axes.append(a);
    out["complement_axes"] = axes;
    out["compact"] = dec.compact;
    py::list verts;
    for (const auto& v : dec.delta_vertices) verts.append(qvec_list(v));
    out["vertices"] = verts;
    py::list cons;
    for (const auto& c : dec.delta_constraints) {
        py::dict entry;
        entry["form"] = qvec_list(c.form);
        entry["offset"] = rat_str(c.offset);
        cons.append(entry);
    }
    out["constraints"] = cons;
    return out;
}

int dim_m_text(const std::string& text) { return dim_m(parse(text)); }

}  // namespace

PYBIND11_MODULE(_torinv, m) {
    m.doc() = "Exact invariants of symplectic torus-action ingredient lists";

    py::register_exception<Error>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

    m.def("validate", &validate_text, py::arg("text"),
          "Validate an ingredient list given as text; returns per-condition verdicts.");
    m.def("invariants", &invariants_text, py::arg("text"),
          "Compute the full invariant report of a valid ingredient list.");
    m.def("equal", &equal_text, py::arg("text_a"), py::arg("text_b"),
          "Decide whether two valid ingredient lists define the same classification data.");
    m.def("canonical", &canonical_text, py::arg("text"),
          "Return the canonical serialized form of an ingredient list.");
    m.def("decompose", &decompose_text, py::arg("text"),
          "Split a polyhedral parallel space into lineality directions and a slice.");
    m.def("dim_m", &dim_m_text, py::arg("text"),
          "Dimension of the manifold described by an ingredient list.");
}
