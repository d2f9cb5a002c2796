#include "torinv/holonomy.hpp"

#include <sstream>

namespace torinv {

namespace {

void check_shapes(const Frame& f, const HolonomyMap& tau) {
    if (static_cast<int>(tau.values.size()) != f.d_N)
        throw FrameMismatch("holonomy: expected " + std::to_string(f.d_N) + " values, got " +
                            std::to_string(tau.values.size()));
    for (const TorusElement& t : tau.values)
        if (t.dim() != f.d)
            throw FrameMismatch("holonomy: value dimension " + std::to_string(t.dim()) +
                                " differs from torus dimension " + std::to_string(f.d));
}

std::string zvec_str(const ZVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

} // namespace

TorusElement tau_of(const Frame& f, const HolonomyMap& tau, const ZVec& zeta_p) {
    check_shapes(f, tau);
    if (static_cast<int>(zeta_p.size()) != f.d_N)
        throw FrameMismatch("tau_of: period vector has wrong length");
    QVec acc(f.d, Rat(0));
    for (int l = 0; l < f.d_N; ++l)
        for (int lp = l + 1; lp < f.d_N; ++lp) {
            Rat coeff = Rat(Int(zeta_p[l] * zeta_p[lp])) / 2;
            if (coeff != 0) acc = q_add(acc, q_scale(f.c_t[l][lp], coeff));
        }
    TorusElement out = TorusElement::from_coords(acc);
    for (int l = 0; l < f.d_N; ++l) out = out.add(tau.values[l].mul_int(zeta_p[l]));
    return out;
}

bool verify_hom_c(const Frame& f, const HolonomyMap& tau, std::string* witness) {
    check_shapes(f, tau);
    // Test words: generators and all length-two sums (including doubles).
    std::vector<ZVec> words;
    ZVec zero(f.d_N, Int(0));
    words.push_back(zero);
    for (int l = 0; l < f.d_N; ++l) {
        ZVec e = zero;
        e[l] = 1;
        words.push_back(e);
    }
    for (int l = 0; l < f.d_N; ++l)
        for (int m = l; m < f.d_N; ++m) {
            ZVec e = zero;
            e[l] += 1;
            e[m] += 1;
            words.push_back(e);
        }
    for (const ZVec& z : words)
        for (const ZVec& zp : words) {
            ZVec sum(f.d_N);
            for (int i = 0; i < f.d_N; ++i) sum[i] = z[i] + zp[i];
            TorusElement lhs = tau_of(f, tau, zp).add(tau_of(f, tau, z));
            QVec c_half(f.d, Rat(0));
            for (int l = 0; l < f.d_N; ++l)
                for (int m = 0; m < f.d_N; ++m) {
                    if (l == m) continue;
                    // c(zp, z)/2 expanded over the generator table
                    Rat coeff = Rat(Int(zp[l] * z[m])) / 2;
                    if (coeff != 0) c_half = q_add(c_half, q_scale(f.c_t[l][m], coeff));
                }
            TorusElement rhs = tau_of(f, tau, sum).add(TorusElement::from_coords(c_half));
            if (!(lhs == rhs)) {
                if (witness)
                    *witness = "product law fails at zeta = " + zvec_str(z) +
                               ", zeta' = " + zvec_str(zp);
                return false;
            }
        }
    return true;
}

HolonomyMap make_hom_c(const Frame& f, const std::vector<TorusElement>& free_choices) {
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j)
            for (const Rat& x : f.c_t[i][j])
                if (!is_integer(x))
                    throw Condition5aViolated("make_hom_c: c(eps^" + std::to_string(i + 1) +
                                              ", eps^" + std::to_string(j + 1) +
                                              ") is not integral");
    HolonomyMap out{free_choices};
    check_shapes(f, out);
    return out;
}

SpaceA space_a_basis(const Frame& f) {
    SpaceA out;
    const int dim_stacked = f.d_N * f.d;
    // Values of c against the period space.
    for (int j = 0; j < f.d_N; ++j) {
        QVec gen(dim_stacked, Rat(0));
        for (int l = 0; l < f.d_N; ++l)
            for (int r = 0; r < f.d; ++r) gen[l * f.d + r] = f.c_t[l][j][r];
        out.generators.push_back(std::move(gen));
    }
    // Restrictions to the period space of symmetric maps, coordinatized as
    // symmetric matrices in the kernel frame and its dual.
    QMatrix l_q = QMatrix::from_z(f.L);
    std::vector<QVec> xi(f.d_N);  // dual-frame coordinates of eps^l
    for (int l = 0; l < f.d_N; ++l) {
        QVec v(f.d_l, Rat(0));
        for (int i = 0; i < f.d_N; ++i) v[f.d_h + i] = Rat(f.p_mat.at(i, l));
        xi[l] = std::move(v);
    }
    for (int a = 0; a < f.d_l; ++a)
        for (int b = a; b < f.d_l; ++b) {
            QVec gen(dim_stacked, Rat(0));
            for (int l = 0; l < f.d_N; ++l) {
                QVec img(f.d_l, Rat(0));  // E^{ab} applied to xi[l]
                img[a] = xi[l][b];
                if (b != a) img[b] += xi[l][a];
                QVec amb = q_mul_vec(l_q, img);
                for (int r = 0; r < f.d; ++r) gen[l * f.d + r] = amb[r];
            }
            out.generators.push_back(std::move(gen));
        }
    out.space = QSubspace::from_vectors(dim_stacked, out.generators);
    return out;
}

bool equivalent(const Frame& f, const HolonomyMap& tau1, const HolonomyMap& tau2) {
    check_shapes(f, tau1);
    check_shapes(f, tau2);
    const int dim_stacked = f.d_N * f.d;
    if (dim_stacked == 0) return true;
    QVec diff(dim_stacked, Rat(0));
    for (int l = 0; l < f.d_N; ++l) {
        TorusElement h = tau2.values[l].sub(tau1.values[l]);
        for (int r = 0; r < f.d; ++r) diff[l * f.d + r] = h.coords[r];
    }
    SpaceA a = space_a_basis(f);
    return member_subspace_plus_lattice(diff, a.space, IntegerLattice::standard(dim_stacked));
}

ModuliDimension dim_moduli(const IngredientList& list) {
    Frame f = build_frame(list);
    ModuliDimension out;
    SpaceA a = space_a_basis(f);
    out.dim_space_a = a.space.dim();
    out.direct = f.d_N * f.d - out.dim_space_a;
    if (f.d_h != 0) {
        out.note = "closed-form crosscheck omitted: it presumes a trivial Hamiltonian factor";
        return out;
    }
    // dim ker c: periods pairing to zero against the whole period space.
    QMatrix kmat(f.d_N * f.d, f.d_N);
    for (int l = 0; l < f.d_N; ++l)
        for (int j = 0; j < f.d_N; ++j)
            for (int r = 0; r < f.d; ++r) kmat.at(j * f.d + r, l) = f.c_t[l][j][r];
    int ker_c = f.d_N - rank_q(kmat);
    // dim ker c_f: same with the complementary-split component of the values.
    QMatrix kfmat(f.d_N * f.d, f.d_N);
    QMatrix z_q = QMatrix::from_z(f.Z);
    for (int l = 0; l < f.d_N; ++l)
        for (int j = 0; j < f.d_N; ++j) {
            auto [h, ff] = f.split_hf(f.c_t[l][j]);
            QVec amb = q_mul_vec(z_q, ff);
            for (int r = 0; r < f.d; ++r) kfmat.at(j * f.d + r, l) = amb[r];
        }
    int ker_cf = f.d_N - rank_q(kfmat);
    // dim c0: periods annihilating every value of c.
    std::vector<QVec> rows;
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j) {
            QVec tail(f.d_N);
            for (int r = 0; r < f.d_N; ++r) tail[r] = f.c_pair_l(i, j)[f.d_h + r];
            rows.push_back(std::move(tail));
        }
    int c0 = f.d_N - QSubspace::from_vectors(f.d_N, rows).dim();
    long long formula = static_cast<long long>(f.d_N) * (f.d - f.d_N) +
                        static_cast<long long>(f.d_N) * (f.d_N - 3) / 2 + ker_cf - ker_c + c0;
    out.formula = static_cast<int>(formula);
    return out;
}

} // namespace torinv
