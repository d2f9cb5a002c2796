#include "torinv/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace torinv {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

ZMatrix ZMatrix::identity(int n) {
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_columns(int ambient_dim, const std::vector<ZVec>& columns) {
    ZMatrix m(ambient_dim, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(columns[j].size()) != ambient_dim)
            throw DimensionMismatch("from_columns: column length != ambient dimension");
        for (int i = 0; i < ambient_dim; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

ZVec ZMatrix::column(int j) const {
    ZVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

std::vector<ZVec> ZMatrix::columns() const {
    std::vector<ZVec> out(cols);
    for (int j = 0; j < cols; ++j) out[j] = column(j);
    return out;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_z(const ZMatrix& z) {
    QMatrix m(z.rows, z.cols);
    for (size_t k = 0; k < z.a.size(); ++k) m.a[k] = Rat(z.a[k]);
    return m;
}

QMatrix QMatrix::from_columns(int ambient_dim, const std::vector<QVec>& columns) {
    QMatrix m(ambient_dim, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(columns[j].size()) != ambient_dim)
            throw DimensionMismatch("from_columns: column length != ambient dimension");
        for (int i = 0; i < ambient_dim; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

QMatrix QMatrix::from_rows(int ambient_dim, const std::vector<QVec>& rows) {
    QMatrix m(static_cast<int>(rows.size()), ambient_dim);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != ambient_dim)
            throw DimensionMismatch("from_rows: row length != ambient dimension");
        for (int j = 0; j < ambient_dim; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVec QMatrix::column(int j) const {
    QVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

QVec QMatrix::row(int i) const {
    QVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("z_mul: inner dimensions differ");
    ZMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

ZVec z_mul_vec(const ZMatrix& m, const ZVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("z_mul_vec: size mismatch");
    ZVec out(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

ZMatrix z_transpose(const ZMatrix& m) {
    ZMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

ZMatrix z_hstack(const ZMatrix& a, const ZMatrix& b) {
    if (a.rows != b.rows) throw DimensionMismatch("z_hstack: row counts differ");
    ZMatrix c(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

Int det_z(const ZMatrix& m) {
    Rat d = det_q(QMatrix::from_z(m));
    return numerator(d);  // determinant of an integer matrix is integral
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("q_mul: inner dimensions differ");
    QMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

QVec q_mul_vec(const QMatrix& m, const QVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("q_mul_vec: size mismatch");
    QVec out(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

QMatrix q_transpose(const QMatrix& m) {
    QMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Rat det_q(const QMatrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("det_q: matrix not square");
    int n = m.rows;
    QMatrix w = m;
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        Rat inv = Rat(1) / w.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (w.at(r, col) == 0) continue;
            Rat f = w.at(r, col) * inv;
            for (int j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
        }
    }
    return det;
}

QMatrix q_inverse(const QMatrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("q_inverse: matrix not square");
    int n = m.rows;
    QMatrix w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n + i) = 1;
    }
    std::vector<int> pivots;
    int rank = rref_inplace(w, &pivots);
    // The augmented block [m | I] always has full row rank; m is invertible
    // precisely when every pivot stays inside the left block.
    if (rank < n || pivots[n - 1] >= n)
        throw SingularMatrix("q_inverse: matrix is singular");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
    return inv;
}

ZMatrix z_inverse_unimodular(const ZMatrix& u) {
    QMatrix inv = q_inverse(QMatrix::from_z(u));
    ZMatrix out(u.rows, u.cols);
    for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < u.cols; ++j) {
            if (!is_integer(inv.at(i, j)))
                throw SingularMatrix("z_inverse_unimodular: matrix is not unimodular");
            out.at(i, j) = numerator(inv.at(i, j));
        }
    return out;
}

int rref_inplace(QMatrix& m, std::vector<int>* pivot_cols) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Rat inv = Rat(1) / m.at(rank, col);
        for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

int rank_q(const QMatrix& m) {
    QMatrix w = m;
    return rref_inplace(w);
}

QSubspace QSubspace::from_vectors(int ambient_dim, const std::vector<QVec>& vectors) {
    QMatrix m = QMatrix::from_rows(ambient_dim, vectors);
    int rank = rref_inplace(m);
    QSubspace s;
    s.ambient_dim = ambient_dim;
    for (int i = 0; i < rank; ++i) s.basis.push_back(m.row(i));
    return s;
}

QSubspace QSubspace::zero(int ambient_dim) {
    QSubspace s;
    s.ambient_dim = ambient_dim;
    return s;
}

QSubspace QSubspace::full(int ambient_dim) {
    QSubspace s;
    s.ambient_dim = ambient_dim;
    for (int i = 0; i < ambient_dim; ++i) {
        QVec e(ambient_dim);
        e[i] = 1;
        s.basis.push_back(e);
    }
    return s;
}

bool QSubspace::contains(const QVec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim)
        throw DimensionMismatch("QSubspace::contains: vector length mismatch");
    QVec w = v;
    for (const QVec& b : basis) {
        int piv = -1;
        for (int j = 0; j < ambient_dim; ++j)
            if (b[j] != 0) { piv = j; break; }
        // RREF rows have leading entry 1
        if (piv >= 0 && w[piv] != 0) {
            Rat f = w[piv];
            for (int j = 0; j < ambient_dim; ++j) w[j] -= f * b[j];
        }
    }
    return q_is_zero(w);
}

QSubspace kernel_q(const QMatrix& m) {
    QMatrix w = m;
    std::vector<int> pivot_cols;
    rref_inplace(w, &pivot_cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<QVec> gens;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        QVec x(m.cols);
        x[j] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -w.at(static_cast<int>(i), j);
        gens.push_back(std::move(x));
    }
    return QSubspace::from_vectors(m.cols, gens);
}

namespace {

void col_axpy(ZMatrix& m, ZMatrix& companion, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
    for (int i = 0; i < companion.rows; ++i) companion.at(i, dst) += f * companion.at(i, src);
}

void col_swap(ZMatrix& m, ZMatrix& companion, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < companion.rows; ++i) std::swap(companion.at(i, a), companion.at(i, b));
}

void col_negate(ZMatrix& m, ZMatrix& companion, int j) {
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
    for (int i = 0; i < companion.rows; ++i) companion.at(i, j) = -companion.at(i, j);
}

void row_axpy(ZMatrix& m, ZMatrix& companion, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
    for (int j = 0; j < companion.cols; ++j) companion.at(dst, j) += f * companion.at(src, j);
}

void row_swap(ZMatrix& m, ZMatrix& companion, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < companion.cols; ++j) std::swap(companion.at(a, j), companion.at(b, j));
}

void row_negate(ZMatrix& m, ZMatrix& companion, int i) {
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
    for (int j = 0; j < companion.cols; ++j) companion.at(i, j) = -companion.at(i, j);
}

} // namespace

HnfResult hnf(const ZMatrix& m) {
    ZMatrix h = m;
    ZMatrix u = ZMatrix::identity(m.cols);
    int pivot_col = 0;
    for (int r = 0; r < h.rows && pivot_col < h.cols; ++r) {
        // Reduce row r over the working columns [pivot_col, cols) to a single entry.
        while (true) {
            int jmin = -1;
            for (int j = pivot_col; j < h.cols; ++j)
                if (h.at(r, j) != 0 && (jmin < 0 || abs(h.at(r, j)) < abs(h.at(r, jmin)))) jmin = j;
            if (jmin < 0) break;
            bool cleared = true;
            for (int j = pivot_col; j < h.cols; ++j) {
                if (j == jmin || h.at(r, j) == 0) continue;
                Int q = h.at(r, j) / h.at(r, jmin);
                col_axpy(h, u, j, jmin, -q);
                if (h.at(r, j) != 0) cleared = false;
            }
            if (cleared) {
                col_swap(h, u, jmin, pivot_col);
                break;
            }
        }
        if (h.at(r, pivot_col) == 0) continue;  // row has no pivot
        if (h.at(r, pivot_col) < 0) col_negate(h, u, pivot_col);
        for (int j = 0; j < pivot_col; ++j) {
            Int q = floor_div(h.at(r, j), h.at(r, pivot_col));
            col_axpy(h, u, j, pivot_col, -q);
        }
        ++pivot_col;
    }
    return {h, u};
}

SnfResult snf(const ZMatrix& m) {
    ZMatrix d = m;
    ZMatrix u = ZMatrix::identity(m.rows);
    ZMatrix v = ZMatrix::identity(m.cols);
    int n = std::min(m.rows, m.cols);
    for (int t = 0; t < n; ++t) {
        while (true) {
            int pr = -1, pc = -1;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j)
                    if (d.at(i, j) != 0 &&
                        (pr < 0 || abs(d.at(i, j)) < abs(d.at(pr, pc)))) { pr = i; pc = j; }
            if (pr < 0) { t = n; break; }  // remaining submatrix is zero
            row_swap(d, u, t, pr);
            col_swap(d, v, t, pc);
            bool stable = false;
            while (!stable) {
                stable = true;
                for (int i = t + 1; i < d.rows; ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q = d.at(i, t) / d.at(t, t);
                    row_axpy(d, u, i, t, -q);
                    if (d.at(i, t) != 0) { row_swap(d, u, t, i); stable = false; }
                }
                for (int j = t + 1; j < d.cols; ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q = d.at(t, j) / d.at(t, t);
                    col_axpy(d, v, j, t, -q);
                    if (d.at(t, j) != 0) { col_swap(d, v, t, j); stable = false; }
                }
            }
            bool divisible = true;
            for (int i = t + 1; i < d.rows && divisible; ++i)
                for (int j = t + 1; j < d.cols && divisible; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(d, u, t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= n) break;
        if (d.at(t, t) < 0) row_negate(d, u, t);
    }
    return {d, u, v};
}

IntegerLattice IntegerLattice::from_generators(int ambient_dim, const std::vector<ZVec>& generators) {
    ZMatrix gen = ZMatrix::from_columns(ambient_dim, generators);
    ZMatrix h = hnf(gen).h;
    int rank = 0;
    for (int j = 0; j < h.cols; ++j) {
        bool nonzero = false;
        for (int i = 0; i < h.rows; ++i)
            if (h.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) rank = j + 1;  // zero columns trail in HNF
    }
    IntegerLattice lat;
    lat.ambient_dim = ambient_dim;
    lat.basis = ZMatrix(ambient_dim, rank);
    for (int i = 0; i < ambient_dim; ++i)
        for (int j = 0; j < rank; ++j) lat.basis.at(i, j) = h.at(i, j);
    return lat;
}

IntegerLattice IntegerLattice::zero(int ambient_dim) {
    IntegerLattice lat;
    lat.ambient_dim = ambient_dim;
    lat.basis = ZMatrix(ambient_dim, 0);
    return lat;
}

IntegerLattice IntegerLattice::standard(int ambient_dim) {
    IntegerLattice lat;
    lat.ambient_dim = ambient_dim;
    lat.basis = ZMatrix::identity(ambient_dim);
    return lat;
}

bool IntegerLattice::contains(const ZVec& v) const {
    return contains(to_qvec(v));
}

bool IntegerLattice::contains(const QVec& v) const {
    return member_lattice(v, *this);
}

ZMatrix extend_to_zbasis(const IntegerLattice& sub) {
    int d = sub.ambient_dim;
    int r = sub.rank();
    if (r == 0) return ZMatrix::identity(d);
    SnfResult s = snf(sub.basis);
    for (int i = 0; i < r; ++i)
        if (s.d.at(i, i) != 1)
            throw NotSaturated("extend_to_zbasis: lattice is not saturated (invariant factor " +
                               s.d.at(i, i).str() + " at position " + std::to_string(i) + ")");
    ZMatrix uinv = z_inverse_unimodular(s.u);
    ZMatrix completion(d, d - r);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d - r; ++j) completion.at(i, j) = uinv.at(i, r + j);
    return completion;
}

IntegerLattice saturate(const IntegerLattice& sub) {
    SnfResult s = snf(sub.basis);
    int r = 0;
    for (int i = 0; i < std::min(s.d.rows, s.d.cols); ++i)
        if (s.d.at(i, i) != 0) r = i + 1;
    if (r == 0) return IntegerLattice::zero(sub.ambient_dim);
    ZMatrix uinv = z_inverse_unimodular(s.u);
    std::vector<ZVec> gens;
    for (int j = 0; j < r; ++j) gens.push_back(uinv.column(j));
    return IntegerLattice::from_generators(sub.ambient_dim, gens);
}

bool is_saturated(const IntegerLattice& sub) {
    return saturate(sub) == IntegerLattice::from_generators(sub.ambient_dim, sub.basis.columns());
}

std::optional<DiophantineSolution> solve_diophantine(const ZMatrix& a, const ZVec& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw DimensionMismatch("solve_diophantine: rhs length != row count");
    HnfResult hu = hnf(a);
    const ZMatrix& h = hu.h;
    // Pivot (row, col) pairs; pivot rows strictly increase with the column index.
    std::vector<std::pair<int, int>> pivots;
    for (int j = 0; j < h.cols; ++j) {
        int r = -1;
        for (int i = 0; i < h.rows; ++i)
            if (h.at(i, j) != 0) { r = i; break; }
        if (r < 0) break;  // zero columns trail
        pivots.emplace_back(r, j);
    }
    ZVec y(h.cols, Int(0));
    ZVec resid = b;
    size_t k = 0;
    for (int r = 0; r < h.rows; ++r) {
        if (k < pivots.size() && pivots[k].first == r) {
            int j = pivots[k].second;
            const Int& p = h.at(r, j);
            if (resid[r] % p != 0) return std::nullopt;
            Int yk = resid[r] / p;
            if (yk != 0)
                for (int i = r; i < h.rows; ++i) resid[i] -= yk * h.at(i, j);
            y[j] = yk;
            ++k;
        } else if (resid[r] != 0) {
            return std::nullopt;
        }
    }
    DiophantineSolution sol;
    sol.particular = z_mul_vec(hu.u, y);
    std::vector<ZVec> hom;
    for (int j = static_cast<int>(pivots.size()); j < h.cols; ++j) hom.push_back(hu.u.column(j));
    sol.homogeneous = IntegerLattice::from_generators(a.cols, hom);
    return sol;
}

bool member_lattice(const QVec& v, const IntegerLattice& lat) {
    if (static_cast<int>(v.size()) != lat.ambient_dim)
        throw DimensionMismatch("member_lattice: vector length mismatch");
    std::optional<QVec> x = q_solve(QMatrix::from_z(lat.basis), v);
    if (!x) return false;
    for (const Rat& c : *x)
        if (!is_integer(c)) return false;
    return true;
}

bool member_subspace_plus_lattice(const QVec& v, const QSubspace& s, const IntegerLattice& lat) {
    if (static_cast<int>(v.size()) != s.ambient_dim || s.ambient_dim != lat.ambient_dim)
        throw DimensionMismatch("member_subspace_plus_lattice: ambient dimensions differ");
    // Forms annihilating s: v - k must be killed by all of them for some lattice k.
    QSubspace ann = kernel_q(QMatrix::from_rows(s.ambient_dim, s.basis));
    if (ann.dim() == 0) return true;
    QMatrix q = QMatrix::from_rows(s.ambient_dim, ann.basis);
    QMatrix qb = q_mul(q, QMatrix::from_z(lat.basis));
    QVec qv = q_mul_vec(q, v);
    // Scale each row to integers: (q lat.basis) n = q v.
    ZMatrix sys(qb.rows, qb.cols);
    ZVec rhs(qb.rows);
    for (int i = 0; i < qb.rows; ++i) {
        QVec row = qb.row(i);
        row.push_back(qv[i]);
        Int den = common_denominator(row);
        for (int j = 0; j < qb.cols; ++j) sys.at(i, j) = numerator(Rat(qb.at(i, j) * den));
        rhs[i] = numerator(Rat(qv[i] * den));
    }
    return solve_diophantine(sys, rhs).has_value();
}

std::optional<QVec> q_solve(const QMatrix& m, const QVec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw DimensionMismatch("q_solve: rhs length != row count");
    QMatrix w(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, m.cols) = b[i];
    }
    std::vector<int> pivot_cols;
    int rank = rref_inplace(w, &pivot_cols);
    if (!pivot_cols.empty() && pivot_cols.back() == m.cols) return std::nullopt;  // inconsistent
    QVec x(m.cols, Rat(0));
    for (int i = 0; i < rank; ++i) x[pivot_cols[i]] = w.at(i, m.cols);
    return x;
}

Int gcd_vec(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return abs(g);
}

ZVec primitive(const ZVec& v) {
    Int g = gcd_vec(v);
    if (g <= 1) return v;
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Int common_denominator(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, denominator(x));
    return l;
}

QVec q_scale(const QVec& v, const Rat& s) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

QVec q_add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("q_add: size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec q_sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("q_sub: size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rat q_dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("q_dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool q_is_zero(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace torinv
