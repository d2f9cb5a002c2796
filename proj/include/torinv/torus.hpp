#pragma once

#include "torinv/exact_linalg.hpp"

namespace torinv {

// Torus of dimension d with integral lattice fixed to Z^d in standard coordinates.
struct Torus {
    int dim = 0;
    bool operator==(const Torus&) const = default;
};

// Subtorus given by the saturated sublattice of Z^d it is the exponential of.
struct Subtorus {
    int parent_dim = 0;
    IntegerLattice lattice;  // saturated, canonical HNF

    // Throws NotSaturated when the generators span a non-saturated lattice.
    static Subtorus make(int parent_dim, const std::vector<ZVec>& generators);
    static Subtorus trivial(int parent_dim);
    static Subtorus full(int parent_dim);

    int dim() const { return lattice.rank(); }
    bool operator==(const Subtorus&) const = default;
};

// Point of T^d with rational coordinates reduced into [0,1).
struct TorusElement {
    QVec coords;

    static TorusElement from_coords(const QVec& raw);  // reduces mod 1
    static TorusElement identity(int dim);

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_identity() const;

    TorusElement add(const TorusElement& other) const;
    TorusElement sub(const TorusElement& other) const;
    TorusElement neg() const;
    TorusElement mul_int(const Int& n) const;

    bool operator==(const TorusElement&) const = default;
};

// Canonical complementary subtorus (via the Z-basis completion of the lattice).
Subtorus complement(const Subtorus& sub);

// Complement with basis Z'_j = Z_j + sum_i shift(i,j) Y_i; shift is rank x (d - rank).
// Ranging over all integer shifts parametrizes all complements of sub.
Subtorus complement_shifted(const Subtorus& sub, const ZMatrix& shift);

struct NotComplementary : Error { using Error::Error; };

// Unique decomposition t = t_u + t_v mod Z^d along a complementary pair.
std::pair<TorusElement, TorusElement> split_element(const TorusElement& t, const Subtorus& u,
                                                    const Subtorus& v);

} // namespace torinv
