#include "torinv/invariants.hpp"

#include <sstream>

namespace torinv {

namespace {

// Components of every c value along a supplied complementary split [Y | B_f];
// returns (h-parts, f-parts) as integer coordinate vectors per pair (i < j).
struct SplitCValues {
    std::vector<ZVec> h_parts;  // length d_h each
    std::vector<ZVec> f_parts;  // length d - d_h each
    std::vector<std::pair<int, int>> pairs;
};

SplitCValues split_c_values(const Frame& f, const Subtorus& t_f) {
    if (t_f.parent_dim != f.d || t_f.dim() + f.d_h != f.d)
        throw NotComplementary("complement has wrong dimensions");
    ZMatrix joint = z_hstack(f.Y, t_f.lattice.basis);
    Int det = det_z(joint);
    if (det != 1 && det != -1) throw NotComplementary("subtorus is not complementary");
    QMatrix inv = q_inverse(QMatrix::from_z(joint));
    SplitCValues out;
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j) {
            QVec coords = q_mul_vec(inv, f.c_t[i][j]);
            ZVec h(f.d_h), ff(f.d - f.d_h);
            for (int r = 0; r < f.d; ++r) {
                if (!is_integer(coords[r]))
                    throw PreconditionError("c value is not integral; validate the list first");
                if (r < f.d_h)
                    h[r] = numerator(coords[r]);
                else
                    ff[r - f.d_h] = numerator(coords[r]);
            }
            out.h_parts.push_back(std::move(h));
            out.f_parts.push_back(std::move(ff));
            out.pairs.emplace_back(i, j);
        }
    return out;
}

} // namespace

int euler_characteristic(const IngredientList& list) {
    if (list.d_h() == list.torus_dim) return vertex_count(list.delta);
    return 0;
}

bool is_hamiltonian(const IngredientList& list) { return list.d_h() == list.torus_dim; }

IntegerLattice theta_lattice(const IngredientList& list, const Subtorus& t_f) {
    Frame f = build_frame(list);
    SplitCValues sv = split_c_values(f, t_f);
    return IntegerLattice::from_generators(f.d - f.d_h, sv.f_parts);
}

H1Group h1(const IngredientList& list, const Subtorus& t_f) {
    Frame f = build_frame(list);
    IntegerLattice theta = theta_lattice(list, t_f);
    int n = f.d - f.d_h;
    H1Group out;
    out.free_rank = (n - theta.rank()) + f.d_N;
    if (theta.rank() > 0) {
        SnfResult s = snf(theta.basis);
        for (int i = 0; i < theta.rank(); ++i) {
            Int factor = s.d.at(i, i);
            if (factor < 0) factor = -factor;
            if (factor > 1) out.invariant_factors.push_back(factor);
        }
    }
    return out;
}

int betti1(const IngredientList& list) {
    int rank_theta = theta_lattice(list, complement(list.t_h)).rank();
    return dim_m(list) - 2 * list.d_h() - rank_theta;
}

bool pi1_abelian(const IngredientList& list) {
    Frame f = build_frame(list);
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j) {
            ZVec v(f.d);
            for (int r = 0; r < f.d; ++r) {
                if (!is_integer(f.c_t[i][j][r]))
                    throw PreconditionError("c value is not integral; validate the list first");
                v[r] = numerator(f.c_t[i][j][r]);
            }
            if (!list.t_h.lattice.contains(v)) return false;
        }
    return true;
}

std::vector<ZMatrix> chern_forms(const IngredientList& list) {
    Frame f = build_frame(list);
    SplitCValues sv = split_c_values(f, complement(list.t_h));
    std::vector<ZMatrix> out(f.d_h, ZMatrix(f.d_N, f.d_N));
    for (size_t p = 0; p < sv.pairs.size(); ++p) {
        auto [i, j] = sv.pairs[p];
        for (int r = 0; r < f.d_h; ++r) {
            out[r].at(i, j) = sv.h_parts[p][r];
            out[r].at(j, i) = -sv.h_parts[p][r];
        }
    }
    return out;
}

SplittingResult splitting(const IngredientList& list) {
    Frame f = build_frame(list);
    SplitCValues sv = split_c_values(f, complement(list.t_h));
    const int n_pairs = static_cast<int>(sv.pairs.size());
    const int nf = f.d - f.d_h;
    SplittingResult out;
    out.shift = ZMatrix(f.d_h, nf);
    // Per t_h-direction i: find integer row m_i with sum_j f_part[p][j] m_i[j] = h_part[p][i].
    ZMatrix a(n_pairs, nf);
    for (int p = 0; p < n_pairs; ++p)
        for (int j = 0; j < nf; ++j) a.at(p, j) = sv.f_parts[p][j];
    for (int i = 0; i < f.d_h; ++i) {
        ZVec rhs(n_pairs);
        for (int p = 0; p < n_pairs; ++p) rhs[p] = sv.h_parts[p][i];
        std::optional<DiophantineSolution> sol = solve_diophantine(a, rhs);
        if (!sol) {
            std::ostringstream os;
            os << "no integer shift for t_h direction " << (i + 1);
            for (int p = 0; p < n_pairs; ++p) {
                bool zero_row = true;
                for (int j = 0; j < nf; ++j)
                    if (a.at(p, j) != 0) zero_row = false;
                if (zero_row && rhs[p] != 0) {
                    os << ": pair (" << (sv.pairs[p].first + 1) << "," << (sv.pairs[p].second + 1)
                       << ") forces 0 = " << rhs[p].str();
                    break;
                }
            }
            out.feasible = false;
            out.certificate = os.str();
            return out;
        }
        for (int j = 0; j < nf; ++j) out.shift.at(i, j) = sol->particular[j];
    }
    out.feasible = true;
    out.complement = complement_shifted(list.t_h, out.shift);
    return out;
}

int aut_image_dim(const IngredientList& list) {
    Frame f = build_frame(list);
    std::vector<QVec> rows;
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j) {
            QVec tail(f.d_N);
            for (int r = 0; r < f.d_N; ++r) tail[r] = f.c_pair_l(i, j)[f.d_h + r];
            rows.push_back(std::move(tail));
        }
    return f.d_N - QSubspace::from_vectors(f.d_N, rows).dim();
}

bool lists_equal(const IngredientList& a, const IngredientList& b) {
    IngredientList ca = canonicalize(a);
    IngredientList cb = canonicalize(b);
    if (ca.torus_dim != cb.torus_dim || !(ca.sigma_t == cb.sigma_t) || !(ca.t_h == cb.t_h) ||
        !(ca.delta == cb.delta) || !(ca.p_basis == cb.p_basis) || ca.c_values != cb.c_values)
        return false;
    Frame f = build_frame(ca);
    return equivalent(f, HolonomyMap{ca.tau_values}, HolonomyMap{cb.tau_values});
}

InvariantReport invariant_report(const IngredientList& list) {
    InvariantReport rep;
    rep.dim_m = dim_m(list);
    rep.euler = euler_characteristic(list);
    rep.hamiltonian = is_hamiltonian(list);
    rep.pi1_is_abelian = pi1_abelian(list);
    Subtorus t_f = complement(list.t_h);
    rep.h1_group = h1(list, t_f);
    rep.betti_1 = betti1(list);
    rep.theta_rank = theta_lattice(list, t_f).rank();
    rep.chern = chern_forms(list);
    rep.moduli = dim_moduli(list);
    rep.split = splitting(list);
    rep.aut_dim = aut_image_dim(list);
    return rep;
}

} // namespace torinv
