#pragma once

#include <string>
#include <vector>

#include "torinv/polytope.hpp"
#include "torinv/torus.hpp"

namespace torinv {

// The classifying sextuple: torus, antisymmetric form, Hamiltonian subtorus,
// polytope, period basis, curvature values, holonomy values.
//
// Coordinate conventions (all fixed, making equality decidable):
//   - T_Z = Z^d in standard coordinates.
//   - l = ker sigma_t; its integral points carry the basis [Y | W] where Y is the
//     canonical basis of t_h.lattice and W the canonical Z-basis completion inside
//     saturate(l intersect Z^d).
//   - N-coordinates are dual to W; p_basis columns are the period generators eps^l
//     written in N-coordinates.
//   - c value vectors are [Y|W]-coordinates (length dim t_h + d_N).
//   - delta lives in the duals of Y.
struct IngredientList {
    int torus_dim = 0;                        // d
    QMatrix sigma_t;                          // d x d
    Subtorus t_h;
    DelzantPolytope delta;
    ZMatrix p_basis;                          // k x k, columns eps^l in N-coordinates
    std::vector<std::vector<QVec>> c_values;  // k x k antisymmetric table, entries length d_h + k
    std::vector<TorusElement> tau_values;     // k elements of T^d

    int d_h() const { return t_h.dim(); }
    int k() const { return p_basis.cols; }  // declared number of period generators

    bool operator==(const IngredientList&) const = default;
};

// Derived coordinate frame shared by the holonomy/nilgroup/invariants modules.
struct Frame {
    int d = 0, d_h = 0, d_N = 0, d_l = 0;
    QMatrix sigma;
    QSubspace l;              // ker sigma
    IntegerLattice l_lattice; // saturate(l intersect Z^d)
    ZMatrix Y;                // d x d_h
    ZMatrix W;                // d x d_N completion of Y inside l_lattice
    ZMatrix L;                // [Y | W]
    QMatrix L_solve;          // d_l x d, left inverse of L on span(l)
    ZMatrix Z;                // d x (d - d_h) canonical complement basis
    QMatrix YZ_inv;           // inverse of [Y | Z]
    QMatrix proj_l;           // projection onto l along coordinate axes
    ZMatrix p_mat;            // k x k
    QMatrix p_inv;
    std::vector<std::vector<QVec>> c_t;  // c(eps^i, eps^j) in ambient Q^d coordinates

    // l-coordinates (length d_l) of an ambient vector lying in l.
    QVec l_coords(const QVec& v) const { return q_mul_vec(L_solve, v); }
    QVec project_l(const QVec& v) const { return q_mul_vec(proj_l, v); }
    // Pairing of zeta in N (N-coordinates) with v in l (ambient coordinates).
    Rat n_pairing(const QVec& zeta_n, const QVec& v_ambient) const;
    // Same, precomputed l-coordinates.
    Rat n_pairing_lcoords(const QVec& zeta_n, const QVec& v_lcoords) const;

    QVec p_to_n(const QVec& beta) const { return q_mul_vec(QMatrix::from_z(p_mat), beta); }
    QVec n_to_p(const QVec& zeta_n) const { return q_mul_vec(p_inv, zeta_n); }

    // Bilinear extension of c on P-coordinates; ambient result.
    QVec c_bilinear_t(const QVec& beta1, const QVec& beta2) const;
    // Same in [Y|W] coordinates.
    QVec c_bilinear_l(const QVec& beta1, const QVec& beta2) const;
    // c(eps^i, eps^j) in [Y|W] coordinates.
    const QVec& c_pair_l(int i, int j) const;

    // Split of an ambient vector along [Y | Z]: (Y-coordinates, Z-coordinates).
    std::pair<QVec, QVec> split_hf(const QVec& v) const;

private:
    friend Frame build_frame(const IngredientList&);
    std::vector<std::vector<QVec>> c_l_;  // antisymmetric table in [Y|W] coordinates
};

// Throws PreconditionError (non-antisymmetric sigma, t_h outside ker sigma,
// inconsistent shapes) or NotCofull (singular p_basis).
Frame build_frame(const IngredientList& list);

enum class Verdict { Pass, Fail, Skipped };

struct ConditionReport {
    std::string name;
    Verdict verdict = Verdict::Skipped;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionReport> conditions;
    bool all_pass() const;
    const ConditionReport& by_name(const std::string& name) const;
};

ValidationReport validate(const IngredientList& list);

// dim M = d + dim ker sigma_t. Requires antisymmetric sigma_t.
int dim_m(const IngredientList& list);

// Deterministic representative: HNF p_basis with c and tau transported along.
IngredientList canonicalize(const IngredientList& list);

// Strict schema: exactly the documented fields, rationals as "p/q" strings.
IngredientList parse(const std::string& text);
std::string serialize(const IngredientList& list);

Rat parse_rational(const std::string& s);  // throws SchemaError

} // namespace torinv
