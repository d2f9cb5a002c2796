#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torinv/holonomy.hpp"
#include "torinv/ingredients.hpp"

namespace torinv {

// chi(M): zero unless the action is Hamiltonian, else the vertex count.
int euler_characteristic(const IngredientList& list);

// The action is Hamiltonian iff the Hamiltonian subtorus is everything.
bool is_hamiltonian(const IngredientList& list);

// The commutator lattice: generated by the complement components of the
// c values, in t_f-basis coordinates. Throws NotComplementary.
IntegerLattice theta_lattice(const IngredientList& list, const Subtorus& t_f);

struct H1Group {
    std::vector<Int> invariant_factors;  // torsion factors > 1, in divisibility order
    int free_rank = 0;
    bool operator==(const H1Group&) const = default;
};

// H_1 = ((T_f)_Z / Theta) x P, computed by Smith normal form.
H1Group h1(const IngredientList& list, const Subtorus& t_f);

// b_1 = dim M - 2 dim t_h - rank Theta (complement-independent).
int betti1(const IngredientList& list);

// pi_1 commutative iff all c values land in the lattice of t_h.
bool pi1_abelian(const IngredientList& list);

// Decomposition c_h = sum_j C^j Y_j: one antisymmetric integer k x k matrix
// per t_h basis vector.
std::vector<ZMatrix> chern_forms(const IngredientList& list);

struct SplittingResult {
    bool feasible = false;
    std::optional<Subtorus> complement;  // witness when feasible
    ZMatrix shift;                        // the integer solution defining the witness
    std::string certificate;              // unsatisfiable equation when infeasible
};

// Existence of a complementary subtorus containing every c value, decided by
// an exact integer linear system over the complement shifts.
SplittingResult splitting(const IngredientList& list);

// Dimension of the annihilator of span c(N x N) inside N.
int aut_image_dim(const IngredientList& list);

// Equality of invariant lists: canonical forms agree bit-exactly and the
// holonomies differ by an allowed twist.
bool lists_equal(const IngredientList& a, const IngredientList& b);

struct InvariantReport {
    int dim_m = 0;
    int euler = 0;
    bool hamiltonian = false;
    bool pi1_is_abelian = false;
    H1Group h1_group;
    int betti_1 = 0;
    int theta_rank = 0;
    std::vector<ZMatrix> chern;
    ModuliDimension moduli;
    SplittingResult split;
    int aut_dim = 0;
};

InvariantReport invariant_report(const IngredientList& list);

} // namespace torinv
