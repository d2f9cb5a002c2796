#pragma once

#include <optional>
#include <vector>

#include "torinv/errors.hpp"
#include "torinv/numeric.hpp"

namespace torinv {

// Row-major dense integer matrix.
struct ZMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    ZMatrix() = default;
    ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static ZMatrix identity(int n);
    static ZMatrix from_columns(int ambient_dim, const std::vector<ZVec>& columns);

    ZVec column(int j) const;
    std::vector<ZVec> columns() const;

    bool operator==(const ZMatrix&) const = default;
};

// Row-major dense rational matrix.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static QMatrix identity(int n);
    static QMatrix from_z(const ZMatrix& m);
    static QMatrix from_columns(int ambient_dim, const std::vector<QVec>& columns);
    static QMatrix from_rows(int ambient_dim, const std::vector<QVec>& rows);

    QVec column(int j) const;
    QVec row(int i) const;

    bool operator==(const QMatrix&) const = default;
};

ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b);
ZVec z_mul_vec(const ZMatrix& m, const ZVec& v);
ZMatrix z_transpose(const ZMatrix& m);
ZMatrix z_hstack(const ZMatrix& a, const ZMatrix& b);
Int det_z(const ZMatrix& m);

QMatrix q_mul(const QMatrix& a, const QMatrix& b);
QVec q_mul_vec(const QMatrix& m, const QVec& v);
QMatrix q_transpose(const QMatrix& m);
Rat det_q(const QMatrix& m);
QMatrix q_inverse(const QMatrix& m);  // throws SingularMatrix

// Inverse of a unimodular integer matrix; exact, throws SingularMatrix if |det| != 1.
ZMatrix z_inverse_unimodular(const ZMatrix& u);

// In-place reduced row echelon form; returns rank, records pivot columns.
int rref_inplace(QMatrix& m, std::vector<int>* pivot_cols = nullptr);
int rank_q(const QMatrix& m);

// Linear subspace of Q^n, canonicalized as the RREF row basis.
struct QSubspace {
    int ambient_dim = 0;
    std::vector<QVec> basis;  // RREF rows, each of length ambient_dim

    static QSubspace from_vectors(int ambient_dim, const std::vector<QVec>& vectors);
    static QSubspace zero(int ambient_dim);
    static QSubspace full(int ambient_dim);

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const QVec& v) const;

    bool operator==(const QSubspace&) const = default;
};

// {x : m x = 0}.
QSubspace kernel_q(const QMatrix& m);

// Full-rank sublattice of Z^n, canonicalized in column Hermite normal form.
struct IntegerLattice {
    int ambient_dim = 0;
    ZMatrix basis;  // ambient_dim x rank, column HNF

    static IntegerLattice from_generators(int ambient_dim, const std::vector<ZVec>& generators);
    static IntegerLattice zero(int ambient_dim);
    static IntegerLattice standard(int ambient_dim);  // Z^n

    int rank() const { return basis.cols; }
    bool contains(const ZVec& v) const;
    bool contains(const QVec& v) const;

    bool operator==(const IntegerLattice&) const = default;
};

struct HnfResult {
    ZMatrix h;  // = m * u, column Hermite normal form
    ZMatrix u;  // unimodular
};
HnfResult hnf(const ZMatrix& m);

struct SnfResult {
    ZMatrix d;  // = u * m * v, diagonal with divisibility chain
    ZMatrix u;  // unimodular rows x rows
    ZMatrix v;  // unimodular cols x cols
};
SnfResult snf(const ZMatrix& m);

// Columns completing sub.basis to a Z-basis of Z^d; throws NotSaturated.
ZMatrix extend_to_zbasis(const IntegerLattice& sub);

// (Q-span of sub) intersected with Z^d.
IntegerLattice saturate(const IntegerLattice& sub);
bool is_saturated(const IntegerLattice& sub);

struct DiophantineSolution {
    ZVec particular;
    IntegerLattice homogeneous;  // solution set = particular + homogeneous
};
// All integer solutions of a x = b, or nullopt when infeasible over Z.
std::optional<DiophantineSolution> solve_diophantine(const ZMatrix& a, const ZVec& b);

// v in lattice (as a subset of Q^n).
bool member_lattice(const QVec& v, const IntegerLattice& lat);

// Decides existence of s0 in s and k in lat with v = s0 + k.
bool member_subspace_plus_lattice(const QVec& v, const QSubspace& s, const IntegerLattice& lat);

// Solves m x = b over Q (any one solution, free coordinates zero); nullopt if inconsistent.
std::optional<QVec> q_solve(const QMatrix& m, const QVec& b);

// gcd of entries (nonnegative); zero vector gives 0.
Int gcd_vec(const ZVec& v);
// v divided by gcd of its entries; zero vector unchanged.
ZVec primitive(const ZVec& v);

// Smallest positive common denominator of the entries.
Int common_denominator(const QVec& v);
// Entrywise v * scalar.
QVec q_scale(const QVec& v, const Rat& s);
QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
Rat q_dot(const QVec& a, const QVec& b);
bool q_is_zero(const QVec& v);

} // namespace torinv
