#include "torinv/torus.hpp"

namespace torinv {

Subtorus Subtorus::make(int parent_dim, const std::vector<ZVec>& generators) {
    IntegerLattice lat = IntegerLattice::from_generators(parent_dim, generators);
    if (static_cast<int>(generators.size()) != lat.rank())
        throw DimensionMismatch("Subtorus: generators are linearly dependent");
    if (saturate(lat) != lat)
        throw NotSaturated("Subtorus: lattice is not saturated in Z^d");
    Subtorus s;
    s.parent_dim = parent_dim;
    s.lattice = lat;
    return s;
}

Subtorus Subtorus::trivial(int parent_dim) {
    Subtorus s;
    s.parent_dim = parent_dim;
    s.lattice = IntegerLattice::zero(parent_dim);
    return s;
}

Subtorus Subtorus::full(int parent_dim) {
    Subtorus s;
    s.parent_dim = parent_dim;
    s.lattice = IntegerLattice::standard(parent_dim);
    return s;
}

TorusElement TorusElement::from_coords(const QVec& raw) {
    TorusElement t;
    t.coords = mod1_vec(raw);
    return t;
}

TorusElement TorusElement::identity(int dim) {
    TorusElement t;
    t.coords.assign(dim, Rat(0));
    return t;
}

bool TorusElement::is_identity() const { return q_is_zero(coords); }

TorusElement TorusElement::add(const TorusElement& other) const {
    return from_coords(q_add(coords, other.coords));
}

TorusElement TorusElement::sub(const TorusElement& other) const {
    return from_coords(q_sub(coords, other.coords));
}

TorusElement TorusElement::neg() const {
    return from_coords(q_scale(coords, Rat(-1)));
}

TorusElement TorusElement::mul_int(const Int& n) const {
    return from_coords(q_scale(coords, Rat(n)));
}

Subtorus complement(const Subtorus& sub) {
    ZMatrix z = extend_to_zbasis(sub.lattice);
    return Subtorus::make(sub.parent_dim, z.columns());
}

Subtorus complement_shifted(const Subtorus& sub, const ZMatrix& shift) {
    int r = sub.dim();
    int d = sub.parent_dim;
    if (shift.rows != r || shift.cols != d - r)
        throw DimensionMismatch("complement_shifted: shift must be rank x (d - rank)");
    ZMatrix z = extend_to_zbasis(sub.lattice);
    std::vector<ZVec> cols;
    for (int j = 0; j < z.cols; ++j) {
        ZVec v = z.column(j);
        for (int i = 0; i < r; ++i) {
            if (shift.at(i, j) == 0) continue;
            ZVec y = sub.lattice.basis.column(i);
            for (int k = 0; k < d; ++k) v[k] += shift.at(i, j) * y[k];
        }
        cols.push_back(std::move(v));
    }
    return Subtorus::make(d, cols);
}

std::pair<TorusElement, TorusElement> split_element(const TorusElement& t, const Subtorus& u,
                                                    const Subtorus& v) {
    int d = u.parent_dim;
    if (v.parent_dim != d || t.dim() != d)
        throw DimensionMismatch("split_element: dimension mismatch");
    ZMatrix m = z_hstack(u.lattice.basis, v.lattice.basis);
    if (m.cols != d || abs(det_z(m)) != 1)
        throw NotComplementary("split_element: subtori are not complementary");
    std::optional<QVec> x = q_solve(QMatrix::from_z(m), t.coords);
    // m is invertible, so the solve always succeeds
    QVec xu(x->begin(), x->begin() + u.dim());
    QVec xv(x->begin() + u.dim(), x->end());
    TorusElement tu = TorusElement::from_coords(q_mul_vec(QMatrix::from_z(u.lattice.basis), xu));
    TorusElement tv = TorusElement::from_coords(q_mul_vec(QMatrix::from_z(v.lattice.basis), xv));
    return {tu, tv};
}

} // namespace torinv
