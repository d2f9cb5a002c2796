#pragma once

#include <string>
#include <vector>

#include "torinv/ingredients.hpp"

namespace torinv {

struct PeriodsNotInLineality : Error { using Error::Error; };

// Halfspace form . v >= offset in ambient coordinates.
struct ParallelConstraint {
    QVec form;
    Rat offset;
    bool operator==(const ParallelConstraint&) const = default;
};

// Closed convex region invariant under translation by the period vectors.
struct PolyhedralParallelSpace {
    int ambient_dim = 0;
    std::vector<ParallelConstraint> constraints;
    std::vector<QVec> period_basis;
    bool operator==(const PolyhedralParallelSpace&) const = default;
};

// Common kernel of all constraint forms.
QSubspace lineality(const PolyhedralParallelSpace& space);

// Every period vector lies in the lineality.
bool verify_periods(const PolyhedralParallelSpace& space);

struct Decomposition {
    std::vector<int> complement_axes;  // coordinate axes spanning the canonical complement
    std::vector<ParallelConstraint> delta_constraints;  // restricted to complement coordinates
    bool compact = false;
    std::vector<QVec> delta_vertices;  // complement coordinates; filled when compact
};

// Slice along the canonical coordinate complement of the lineality; the region
// is the slice plus the lineality directions. Throws PeriodsNotInLineality.
Decomposition decompose(const PolyhedralParallelSpace& space);

struct OrbitSpace {
    DelzantPolytope delta;
    int torus_rank = 0;  // d_N
    bool operator==(const OrbitSpace&) const = default;
};

// The orbit space as polytope x torus-rank data.
OrbitSpace orbit_space_of(const IngredientList& list);

// Strict schema mirroring the ingredient format (rationals as "p/q" strings).
PolyhedralParallelSpace parse_space(const std::string& text);
std::string serialize_space(const PolyhedralParallelSpace& space);

} // namespace torinv
