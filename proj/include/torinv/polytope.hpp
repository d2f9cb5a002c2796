#pragma once

#include <optional>

#include "torinv/exact_linalg.hpp"

namespace torinv {

struct NotFullDimensional : Error { using Error::Error; };

// Closed halfspace normal . x >= offset with primitive integer inward normal.
struct Facet {
    ZVec normal;
    Rat offset;
    bool operator==(const Facet&) const = default;
};

// Bounded full-dimensional rational polytope carrying both canonical representations:
// lexicographically sorted vertices and lexicographically sorted facets.
struct DelzantPolytope {
    int dim_h = 0;
    std::vector<QVec> vertices;
    std::vector<Facet> facets;

    static DelzantPolytope point();  // dim_h = 0: the single point with no coordinates
    static DelzantPolytope from_vertices(int dim, const std::vector<QVec>& points);
    static DelzantPolytope from_facets(int dim, const std::vector<Facet>& facets);

    bool operator==(const DelzantPolytope&) const = default;
};

// Exact dual-representation conversions with deterministic lexicographic ordering.
std::vector<Facet> vrep_to_hrep(int dim, const std::vector<QVec>& points);
std::vector<QVec> hrep_to_vrep(int dim, const std::vector<Facet>& facets);

struct VertexReport {
    int vertex_index = 0;
    std::vector<int> active_facets;
    bool simple_ok = false;               // exactly dim facets meet the vertex
    std::optional<Int> determinant;       // det of the active primitive normals (facet order)
    bool unimodular_ok = false;
};

struct DelzantCertificate {
    bool accepted = false;
    std::vector<VertexReport> vertices;
};

// Accepts iff each vertex is simple and its primitive normals form a Z-basis.
DelzantCertificate is_delzant(const DelzantPolytope& p);

// Exact center of mass (fan triangulation from the lexicographically least vertex).
QVec centroid(const DelzantPolytope& p);

DelzantPolytope translate_to_centered(const DelzantPolytope& p);

int vertex_count(const DelzantPolytope& p);

} // namespace torinv
