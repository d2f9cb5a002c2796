#pragma once

#include <optional>
#include <string>

#include "torinv/ingredients.hpp"

namespace torinv {

struct FrameMismatch : Error { using Error::Error; };

// Holonomy values on the period generators; the value at any other period
// follows from the quadratic expansion (see tau_of).
struct HolonomyMap {
    std::vector<TorusElement> values;  // tau at eps^1 .. eps^k
    bool operator==(const HolonomyMap&) const = default;
};

// tau at an arbitrary integral period (P-coordinates):
//   tau_zeta = exp( sum_{l<l'} zeta_l zeta_{l'} c^{ll'} / 2 ) * prod_l tau_{eps^l}^{zeta_l}.
TorusElement tau_of(const Frame& f, const HolonomyMap& tau, const ZVec& zeta_p);

// Product law tau_{z'} tau_z = tau_{z+z'} exp(c(z',z)/2), checked over all ordered
// pairs drawn from the generators and their length-two words. On failure an
// optional witness pair is reported. Throws FrameMismatch on shape mismatch.
bool verify_hom_c(const Frame& f, const HolonomyMap& tau, std::string* witness = nullptr);

// Any generator values extend to a compatible map once the integrality
// condition on c holds; throws Condition5aViolated otherwise.
HolonomyMap make_hom_c(const Frame& f, const std::vector<TorusElement>& free_choices);

// The twisting directions inside Hom(P, t) = t^k, stacked as Q^(k*d):
// values of c against the period space plus restrictions of symmetric maps.
struct SpaceA {
    std::vector<QVec> generators;  // stacked, length k*d each
    QSubspace space;               // canonical row-echelon span
};

SpaceA space_a_basis(const Frame& f);

// Same twist orbit: the difference homomorphism lifts into span(A) + Z^(k*d).
bool equivalent(const Frame& f, const HolonomyMap& tau1, const HolonomyMap& tau2);

struct ModuliDimension {
    int dim_space_a = 0;
    int direct = 0;               // dim Hom(P,T) - dim A, the authoritative value
    std::optional<int> formula;   // closed-form crosscheck, emitted only when dim t_h = 0
    std::string note;
};

ModuliDimension dim_moduli(const IngredientList& list);

} // namespace torinv
