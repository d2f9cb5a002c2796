#include "torinv/nilgroup.hpp"

namespace torinv {

namespace {

void check_g(const Frame& f, const GElement& a) {
    if (a.t.dim() != f.d || static_cast<int>(a.zeta.size()) != f.d_N)
        throw FrameMismatch("group element has wrong dimensions");
}

void check_gamma(const Frame& f, const GammaElement& a) {
    if (static_cast<int>(a.b_part.size()) != f.d - f.d_h ||
        static_cast<int>(a.beta.size()) != f.d_N)
        throw FrameMismatch("covering group element has wrong dimensions");
}

// sigma_t as a bilinear form on ambient vectors.
Rat sigma_t_pair(const Frame& f, const QVec& u, const QVec& v) {
    return q_dot(u, q_mul_vec(f.sigma, v));
}

// c(zeta, zeta') for N-coordinate arguments, ambient result.
QVec c_of_n(const Frame& f, const QVec& zn1, const QVec& zn2) {
    return f.c_bilinear_t(f.n_to_p(zn1), f.n_to_p(zn2));
}

// One-sided expansion b(beta, beta') = sum_{l<l'} beta_l beta'_{l'} c(eps^l, eps^l'),
// ambient result; P-coordinate integer arguments.
QVec b_ambient(const Frame& f, const ZVec& beta1, const ZVec& beta2) {
    QVec out(f.d, Rat(0));
    for (int l = 0; l < f.d_N; ++l) {
        if (beta1[l] == 0) continue;
        for (int lp = l + 1; lp < f.d_N; ++lp) {
            if (beta2[lp] == 0) continue;
            out = q_add(out, q_scale(f.c_t[l][lp], Rat(Int(beta1[l] * beta2[lp]))));
        }
    }
    return out;
}

ZVec f_part_integral(const Frame& f, const QVec& ambient, const char* what) {
    auto [h, ff] = f.split_hf(ambient);
    ZVec out(ff.size());
    for (size_t i = 0; i < ff.size(); ++i) {
        if (!is_integer(ff[i]))
            throw PreconditionError(std::string(what) + " is not integral; the integrality "
                                                        "condition on c fails");
        out[i] = numerator(ff[i]);
    }
    return out;
}

} // namespace

GElement g_identity(const Frame& f) {
    return {TorusElement::identity(f.d), QVec(f.d_N, Rat(0))};
}

GElement g_multiply(const Frame& f, const GElement& a, const GElement& b) {
    check_g(f, a);
    check_g(f, b);
    QVec corr = q_scale(c_of_n(f, a.zeta, b.zeta), Rat(-1, 2));
    GElement out;
    out.t = a.t.add(b.t).add(TorusElement::from_coords(corr));
    out.zeta = q_add(a.zeta, b.zeta);
    return out;
}

GElement g_inverse(const Frame& f, const GElement& a) {
    check_g(f, a);
    return {a.t.neg(), q_scale(a.zeta, Rat(-1))};
}

GTangent g_bracket(const Frame& f, const GTangent& x1, const GTangent& x2) {
    GTangent out;
    out.x = q_scale(c_of_n(f, x1.zeta, x2.zeta), Rat(-1));
    out.zeta = QVec(f.d_N, Rat(0));
    return out;
}

bool h_contains(const Frame& f, const HolonomyMap& tau, const GElement& g) {
    check_g(f, g);
    QVec beta = f.n_to_p(g.zeta);
    ZVec beta_z(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) {
        if (!is_integer(beta[i])) return false;
        beta_z[i] = numerator(beta[i]);
    }
    TorusElement s = g.t.add(tau_of(f, tau, beta_z));
    std::vector<QVec> ygens;
    for (int j = 0; j < f.d_h; ++j) ygens.push_back(to_qvec(f.Y.column(j)));
    QSubspace span_y = QSubspace::from_vectors(f.d, ygens);
    return member_subspace_plus_lattice(s.coords, span_y, IntegerLattice::standard(f.d));
}

GammaElement gamma_identity(const Frame& f) {
    return {ZVec(f.d - f.d_h, Int(0)), ZVec(f.d_N, Int(0))};
}

ZVec b_f_values(const Frame& f, const ZVec& beta1, const ZVec& beta2) {
    return f_part_integral(f, b_ambient(f, beta1, beta2), "b(beta, beta')");
}

GammaElement gamma_multiply(const Frame& f, const GammaElement& left, const GammaElement& right) {
    check_gamma(f, left);
    check_gamma(f, right);
    ZVec bf = b_f_values(f, right.beta, left.beta);
    GammaElement out;
    out.b_part.resize(bf.size());
    for (size_t i = 0; i < bf.size(); ++i) out.b_part[i] = left.b_part[i] + right.b_part[i] - bf[i];
    out.beta.resize(left.beta.size());
    for (size_t i = 0; i < left.beta.size(); ++i) out.beta[i] = left.beta[i] + right.beta[i];
    return out;
}

GammaElement gamma_inverse(const Frame& f, const GammaElement& a) {
    check_gamma(f, a);
    ZVec bf = b_f_values(f, a.beta, a.beta);
    GammaElement out;
    out.b_part.resize(a.b_part.size());
    for (size_t i = 0; i < a.b_part.size(); ++i) out.b_part[i] = -a.b_part[i] - bf[i];
    out.beta.resize(a.beta.size());
    for (size_t i = 0; i < a.beta.size(); ++i) out.beta[i] = -a.beta[i];
    return out;
}

GammaElement gamma_commutator(const Frame& f, const GammaElement& a, const GammaElement& b) {
    check_gamma(f, a);
    check_gamma(f, b);
    ZVec fwd = b_f_values(f, b.beta, a.beta);
    ZVec rev = b_f_values(f, a.beta, b.beta);
    GammaElement out;
    out.b_part.resize(fwd.size());
    for (size_t i = 0; i < fwd.size(); ++i) out.b_part[i] = fwd[i] - rev[i];
    out.beta = ZVec(f.d_N, Int(0));
    return out;
}

GammaActResult gamma_act(const Frame& f, const HolonomyMap& tau, const GammaElement& g,
                         const ParallelPoint& p) {
    check_gamma(f, g);
    if (static_cast<int>(p.z.size()) != f.d - f.d_h ||
        static_cast<int>(p.zeta.size()) != f.d_N || static_cast<int>(p.mu.size()) != f.d_h)
        throw FrameMismatch("point has wrong dimensions");
    QVec zeta_p = f.n_to_p(p.zeta);

    QVec znew = p.z;
    for (size_t i = 0; i < znew.size(); ++i) znew[i] += Rat(g.b_part[i]);
    // subtract the complement components of the holonomy lifts
    for (int l = 0; l < f.d_N; ++l) {
        if (g.beta[l] == 0) continue;
        auto [h, ff] = f.split_hf(tau.values[l].coords);
        for (size_t i = 0; i < znew.size(); ++i) znew[i] -= Rat(g.beta[l]) * ff[i];
    }
    {
        auto [h, ff] = f.split_hf(b_ambient(f, g.beta, g.beta));
        for (size_t i = 0; i < znew.size(); ++i) znew[i] += ff[i] / 2;
    }
    {
        QVec c_amb = f.c_bilinear_t(to_qvec(g.beta), zeta_p);
        auto [h, ff] = f.split_hf(c_amb);
        for (size_t i = 0; i < znew.size(); ++i) znew[i] += ff[i] / 2;
    }

    GammaActResult out;
    out.point.z = std::move(znew);
    out.point.zeta = q_add(p.zeta, f.p_to_n(to_qvec(g.beta)));
    out.point.mu = p.mu;

    // torus element acting on the Hamiltonian factor
    QVec c_amb = f.c_bilinear_t(to_qvec(g.beta), zeta_p);
    auto [hc, fc] = f.split_hf(c_amb);
    QVec h_amb = q_mul_vec(QMatrix::from_z(f.Y), hc);
    TorusElement factor = TorusElement::from_coords(q_scale(h_amb, Rat(1, 2)));
    ZVec mbeta(g.beta.size());
    for (size_t i = 0; i < g.beta.size(); ++i) mbeta[i] = -g.beta[i];
    TorusElement tmb = tau_of(f, tau, mbeta);
    auto [th, tf] = f.split_hf(tmb.coords);
    factor = factor.add(TorusElement::from_coords(q_mul_vec(QMatrix::from_z(f.Y), th)));
    out.h_factor = factor;
    return out;
}

Rat omega_eval(const Frame& f, const QVec& zeta_n, const OmegaTangent& da, const OmegaTangent& dpa,
               const QVec& mu, const SigmaHOracle& oracle) {
    if (static_cast<int>(zeta_n.size()) != f.d_N)
        throw FrameMismatch("base period has wrong length");
    auto check = [&](const OmegaTangent& t) {
        if (static_cast<int>(t.dt.size()) != f.d || static_cast<int>(t.dzeta.size()) != f.d_N)
            throw FrameMismatch("tangent tuple has wrong dimensions");
        if (!t.dx_pair_th.empty() && static_cast<int>(t.dx_pair_th.size()) != f.d_h)
            throw FrameMismatch("pairing covector has wrong length");
    };
    check(da);
    check(dpa);
    if (static_cast<int>(mu.size()) != f.d_h)
        throw PreconditionError("omega_eval: polytope point has wrong length");

    QVec x = q_add(da.dt, q_scale(c_of_n(f, da.dzeta, zeta_n), Rat(1, 2)));
    QVec xp = q_add(dpa.dt, q_scale(c_of_n(f, dpa.dzeta, zeta_n), Rat(1, 2)));

    Rat val = sigma_t_pair(f, da.dt, dpa.dt);
    val += f.n_pairing(da.dzeta, f.project_l(xp));
    val -= f.n_pairing(dpa.dzeta, f.project_l(x));
    if (f.d_h > 0) {
        auto [hc, fc] = f.split_hf(c_of_n(f, da.dzeta, dpa.dzeta));
        val -= q_dot(mu, hc);
    }
    auto h_coords = [&](const QVec& amb) { return f.split_hf(amb).first; };
    if (!da.dx_pair_th.empty()) val += q_dot(da.dx_pair_th, h_coords(xp));
    if (!dpa.dx_pair_th.empty()) val -= q_dot(dpa.dx_pair_th, h_coords(x));
    if (!da.dx_pair_th.empty() && !dpa.dx_pair_th.empty()) {
        if (!oracle.dx_dx)
            throw OracleMissing("omega_eval: sigma_h(dx, d'x) value required but not supplied");
        val += *oracle.dx_dx;
    }
    return val;
}

LocalChart make_chart(const Frame& f, const ZMatrix& x_basis) {
    LocalChart chart;
    chart.x_basis = x_basis;
    chart.m = x_basis.cols;
    if (x_basis.rows != f.d) throw SingularChart("chart: stabilizer basis has wrong row count");
    for (int j = 0; j < chart.m; ++j)
        if (!f.l.contains(to_qvec(x_basis.column(j))))
            throw SingularChart("chart: stabilizer basis escapes ker sigma_t");
    std::vector<ZVec> cols;
    for (int j = 0; j < chart.m; ++j) cols.push_back(x_basis.column(j));
    IntegerLattice lat = IntegerLattice::from_generators(f.d, cols);
    if (lat.rank() != chart.m) throw SingularChart("chart: stabilizer basis is dependent");
    ZMatrix completion;
    try {
        completion = extend_to_zbasis(lat);
    } catch (const NotSaturated& e) {
        throw SingularChart(std::string("chart: stabilizer lattice not saturated: ") + e.what());
    }
    QMatrix xk = QMatrix::from_z(z_hstack(x_basis, completion));
    QMatrix xk_inv = q_inverse(xk);
    // xi_j(L_a) = j-th stabilizer coordinate of the frame vector L_a
    chart.xi.assign(chart.m, QVec(f.d_l, Rat(0)));
    for (int a = 0; a < f.d_l; ++a) {
        QVec coords = q_mul_vec(xk_inv, to_qvec(f.L.column(a)));
        for (int j = 0; j < chart.m; ++j) chart.xi[j][a] = coords[j];
    }
    for (int j = 0; j < chart.m; ++j)
        chart.x_frame.push_back(f.l_coords(to_qvec(x_basis.column(j))));
    return chart;
}

Rat local_form_eval(const Frame& f, const LocalChart& chart, const LocalTangent& a,
                    const LocalTangent& b) {
    if (static_cast<int>(a.x.size()) != f.d || static_cast<int>(b.x.size()) != f.d ||
        static_cast<int>(a.dlambda.size()) != f.d_l ||
        static_cast<int>(b.dlambda.size()) != f.d_l ||
        static_cast<int>(a.dtheta.size()) != chart.m ||
        static_cast<int>(b.dtheta.size()) != chart.m ||
        static_cast<int>(a.drho.size()) != chart.m || static_cast<int>(b.drho.size()) != chart.m)
        throw FrameMismatch("local tangent has wrong dimensions");
    Rat val = sigma_t_pair(f, a.x, b.x);
    val += q_dot(a.dlambda, f.l_coords(f.project_l(b.x)));
    val -= q_dot(b.dlambda, f.l_coords(f.project_l(a.x)));
    for (int j = 0; j < chart.m; ++j) val += a.drho[j] * b.dtheta[j] - b.drho[j] * a.dtheta[j];
    return val;
}

QVec a_iso(const LocalChart& chart, const QVec& dlambda, const QVec& drho) {
    if (static_cast<int>(drho.size()) != chart.m ||
        (chart.m > 0 && dlambda.size() != chart.xi[0].size()) )
        throw FrameMismatch("a_iso: argument dimensions");
    QVec out = dlambda;
    for (int j = 0; j < chart.m; ++j) out = q_add(out, q_scale(chart.xi[j], drho[j]));
    return out;
}

std::pair<QVec, QVec> a_iso_inverse(const LocalChart& chart, const QVec& xi) {
    // Testing against X_j kills dlambda and picks out drho_j; subtracting the
    // stabilizer part then recovers dlambda.
    QVec drho(chart.m, Rat(0));
    QVec dlambda = xi;
    for (int j = 0; j < chart.m; ++j) {
        drho[j] = q_dot(xi, chart.x_frame[j]);
        dlambda = q_sub(dlambda, q_scale(chart.xi[j], drho[j]));
    }
    return {dlambda, drho};
}

QMatrix nu_matrix(const IngredientList& list, const Subtorus& t_f) {
    Frame f = build_frame(list);
    if (t_f.parent_dim != f.d || t_f.dim() + f.d_h != f.d)
        throw NotComplementary("nu_matrix: wrong complement dimensions");
    ZMatrix joint = z_hstack(list.t_h.lattice.basis, t_f.lattice.basis);
    Int det = det_z(joint);
    if (det != 1 && det != -1)
        throw NotComplementary("nu_matrix: supplied subtorus is not complementary");
    int nf = t_f.dim();
    int n = nf + f.d_N;
    QMatrix out(n, n);
    std::vector<QVec> zcols;
    for (int i = 0; i < nf; ++i) zcols.push_back(to_qvec(t_f.lattice.basis.column(i)));
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) out.at(i, j) = q_dot(zcols[i], q_mul_vec(f.sigma, zcols[j]));
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < f.d_N; ++j) {
            QVec ej(f.d_N, Rat(0));
            ej[j] = 1;
            Rat pairing = f.n_pairing(ej, f.project_l(zcols[i]));
            out.at(i, nf + j) = -pairing;
            out.at(nf + j, i) = pairing;
        }
    return out;
}

bool nu_nondegenerate(const IngredientList& list) {
    QMatrix m = nu_matrix(list, complement(list.t_h));
    if (m.rows == 0) return true;
    return det_q(m) != 0;
}

Rat sigma_f_eval(const Frame& f, const Subtorus& t_f, const QVec& zeta_n, const GTangent& da,
                 const GTangent& dpa) {
    if (t_f.parent_dim != f.d || t_f.dim() + f.d_h != f.d)
        throw NotComplementary("sigma_f_eval: wrong complement dimensions");
    // the t_h-component of every c value must vanish for the supplied complement
    ZMatrix joint = z_hstack(f.Y, t_f.lattice.basis);
    Int det = det_z(joint);
    if (det != 1 && det != -1)
        throw NotComplementary("sigma_f_eval: supplied subtorus is not complementary");
    QMatrix joint_inv = q_inverse(QMatrix::from_z(joint));
    for (int i = 0; i < f.d_N; ++i)
        for (int j = i + 1; j < f.d_N; ++j) {
            QVec coords = q_mul_vec(joint_inv, f.c_t[i][j]);
            for (int r = 0; r < f.d_h; ++r)
                if (coords[r] != 0)
                    throw SplittingAbsent("sigma_f_eval: c has a Hamiltonian component for this "
                                          "complement");
        }
    if (static_cast<int>(zeta_n.size()) != f.d_N || static_cast<int>(da.x.size()) != f.d ||
        static_cast<int>(da.zeta.size()) != f.d_N || static_cast<int>(dpa.x.size()) != f.d ||
        static_cast<int>(dpa.zeta.size()) != f.d_N)
        throw FrameMismatch("sigma_f_eval: argument dimensions");
    QVec x = q_add(da.x, q_scale(c_of_n(f, da.zeta, zeta_n), Rat(1, 2)));
    QVec xp = q_add(dpa.x, q_scale(c_of_n(f, dpa.zeta, zeta_n), Rat(1, 2)));
    Rat val = q_dot(da.x, q_mul_vec(f.sigma, dpa.x));
    val += f.n_pairing(da.zeta, f.project_l(xp));
    val -= f.n_pairing(dpa.zeta, f.project_l(x));
    return val;
}

} // namespace torinv
