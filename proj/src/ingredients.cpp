#include "torinv/ingredients.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "torinv/holonomy.hpp"

namespace torinv {

Rat Frame::n_pairing(const QVec& zeta_n, const QVec& v_ambient) const {
    return n_pairing_lcoords(zeta_n, l_coords(v_ambient));
}

Rat Frame::n_pairing_lcoords(const QVec& zeta_n, const QVec& v_lcoords) const {
    Rat s = 0;
    for (int i = 0; i < d_N; ++i) s += zeta_n[i] * v_lcoords[d_h + i];
    return s;
}

QVec Frame::c_bilinear_t(const QVec& beta1, const QVec& beta2) const {
    QVec out(d, Rat(0));
    for (int i = 0; i < d_N; ++i) {
        if (beta1[i] == 0) continue;
        for (int j = 0; j < d_N; ++j) {
            if (beta2[j] == 0 || i == j) continue;
            out = q_add(out, q_scale(c_t[i][j], beta1[i] * beta2[j]));
        }
    }
    return out;
}

QVec Frame::c_bilinear_l(const QVec& beta1, const QVec& beta2) const {
    QVec out(d_l, Rat(0));
    for (int i = 0; i < d_N; ++i) {
        if (beta1[i] == 0) continue;
        for (int j = 0; j < d_N; ++j) {
            if (beta2[j] == 0 || i == j) continue;
            out = q_add(out, q_scale(c_l_[i][j], beta1[i] * beta2[j]));
        }
    }
    return out;
}

const QVec& Frame::c_pair_l(int i, int j) const { return c_l_[i][j]; }

std::pair<QVec, QVec> Frame::split_hf(const QVec& v) const {
    QVec coords = q_mul_vec(YZ_inv, v);
    QVec h(coords.begin(), coords.begin() + d_h);
    QVec f(coords.begin() + d_h, coords.end());
    return {h, f};
}

Frame build_frame(const IngredientList& list) {
    Frame f;
    f.d = list.torus_dim;
    if (list.sigma_t.rows != f.d || list.sigma_t.cols != f.d)
        throw PreconditionError("frame: sigma_t must be square of the torus dimension");
    for (int i = 0; i < f.d; ++i)
        for (int j = 0; j < f.d; ++j)
            if (list.sigma_t.at(i, j) != -list.sigma_t.at(j, i))
                throw PreconditionError("frame: sigma_t is not antisymmetric");
    if (list.t_h.parent_dim != f.d)
        throw PreconditionError("frame: t_h lives in the wrong torus");
    f.sigma = list.sigma_t;
    f.l = kernel_q(f.sigma);
    f.d_h = list.t_h.dim();
    f.d_l = f.l.dim();
    f.d_N = f.d_l - f.d_h;
    f.Y = list.t_h.lattice.basis;
    for (int j = 0; j < f.d_h; ++j)
        if (!f.l.contains(to_qvec(f.Y.column(j))))
            throw PreconditionError("frame: t_h is not contained in ker sigma_t");
    if (list.k() != f.d_N)
        throw PreconditionError("frame: p_basis count " + std::to_string(list.k()) +
                                " differs from codimension " + std::to_string(f.d_N));

    // Integral points of l, saturated.
    std::vector<ZVec> lgens;
    for (const QVec& row : f.l.basis) {
        Int den = common_denominator(row);
        ZVec g(row.size());
        for (size_t i = 0; i < row.size(); ++i) g[i] = numerator(Rat(row[i] * den));
        lgens.push_back(std::move(g));
    }
    f.l_lattice = saturate(IntegerLattice::from_generators(f.d, lgens));

    // Complete Y to a basis of the integral points of l, working in those coordinates.
    QMatrix s_q = QMatrix::from_z(f.l_lattice.basis);
    std::vector<ZVec> acols;
    for (int j = 0; j < f.d_h; ++j) {
        std::optional<QVec> x = q_solve(s_q, to_qvec(f.Y.column(j)));
        if (!x) throw PreconditionError("frame: t_h basis vector escapes the kernel lattice");
        ZVec ai(x->size());
        for (size_t i = 0; i < x->size(); ++i) {
            if (!is_integer((*x)[i]))
                throw PreconditionError("frame: t_h basis vector has non-integral kernel coordinates");
            ai[i] = numerator((*x)[i]);
        }
        acols.push_back(std::move(ai));
    }
    ZMatrix ext = extend_to_zbasis(IntegerLattice::from_generators(f.d_l, acols));
    f.W = z_mul(f.l_lattice.basis, ext);
    f.L = z_hstack(f.Y, f.W);

    // Left inverse of L on span(l): invert the pivot-row square block.
    QMatrix lt = q_transpose(QMatrix::from_z(f.L));
    std::vector<int> pivot_rows;
    rref_inplace(lt, &pivot_rows);
    QMatrix lj(f.d_l, f.d_l);
    for (int a = 0; a < f.d_l; ++a)
        for (int b = 0; b < f.d_l; ++b) lj.at(a, b) = Rat(f.L.at(pivot_rows[a], b));
    QMatrix lj_inv = q_inverse(lj);
    f.L_solve = QMatrix(f.d_l, f.d);
    for (int a = 0; a < f.d_l; ++a)
        for (int b = 0; b < f.d_l; ++b) f.L_solve.at(a, pivot_rows[b]) = lj_inv.at(a, b);

    f.Z = extend_to_zbasis(list.t_h.lattice);
    f.YZ_inv = q_inverse(QMatrix::from_z(z_hstack(f.Y, f.Z)));

    // Projection onto l along the coordinate axes missing from its echelon pivots.
    {
        std::vector<int> lpiv;
        for (const QVec& row : f.l.basis) {
            for (int j = 0; j < f.d; ++j)
                if (row[j] != 0) { lpiv.push_back(j); break; }
        }
        std::vector<bool> is_piv(f.d, false);
        for (int p : lpiv) is_piv[p] = true;
        QMatrix cmat(f.d, f.d);
        for (int j = 0; j < f.d_l; ++j)
            for (int i = 0; i < f.d; ++i) cmat.at(i, j) = f.l.basis[j][i];
        int col = f.d_l;
        for (int j = 0; j < f.d; ++j) {
            if (is_piv[j]) continue;
            cmat.at(j, col) = 1;
            ++col;
        }
        QMatrix cinv = q_inverse(cmat);
        QMatrix dmat(f.d, f.d);
        for (int i = 0; i < f.d_l; ++i) dmat.at(i, i) = 1;
        f.proj_l = q_mul(cmat, q_mul(dmat, cinv));
    }

    f.p_mat = list.p_basis;
    QMatrix p_q = QMatrix::from_z(f.p_mat);
    if (f.d_N > 0 && det_q(p_q) == 0)
        throw NotCofull("frame: p_basis does not span N");
    f.p_inv = f.d_N > 0 ? q_inverse(p_q) : QMatrix(0, 0);

    int kk = list.k();
    if (static_cast<int>(list.c_values.size()) != kk)
        throw PreconditionError("frame: c table has wrong size");
    for (int i = 0; i < kk; ++i) {
        if (static_cast<int>(list.c_values[i].size()) != kk)
            throw PreconditionError("frame: c table has wrong size");
        for (int j = 0; j < kk; ++j) {
            if (static_cast<int>(list.c_values[i][j].size()) != f.d_l)
                throw PreconditionError("frame: c value has wrong length");
            if (!q_is_zero(q_add(list.c_values[i][j], list.c_values[j][i])))
                throw PreconditionError("frame: c table is not antisymmetric");
        }
    }
    f.c_l_ = list.c_values;
    f.c_t.assign(kk, std::vector<QVec>(kk));
    QMatrix l_q = QMatrix::from_z(f.L);
    for (int i = 0; i < kk; ++i)
        for (int j = 0; j < kk; ++j) f.c_t[i][j] = q_mul_vec(l_q, list.c_values[i][j]);
    if (static_cast<int>(list.tau_values.size()) != kk)
        throw PreconditionError("frame: tau count differs from period count");
    for (const TorusElement& t : list.tau_values)
        if (t.dim() != f.d) throw PreconditionError("frame: tau element has wrong dimension");
    return f;
}

bool ValidationReport::all_pass() const {
    for (const ConditionReport& c : conditions)
        if (c.verdict != Verdict::Pass) return false;
    return true;
}

const ConditionReport& ValidationReport::by_name(const std::string& name) const {
    for (const ConditionReport& c : conditions)
        if (c.name == name) return c;
    throw Error("ValidationReport: unknown condition " + name);
}

ValidationReport validate(const IngredientList& list) {
    ValidationReport rep;
    rep.conditions.resize(7);
    ConditionReport& v1 = rep.conditions[0];
    ConditionReport& v2 = rep.conditions[1];
    ConditionReport& v3 = rep.conditions[2];
    ConditionReport& v4 = rep.conditions[3];
    ConditionReport& v5a = rep.conditions[4];
    ConditionReport& v5b = rep.conditions[5];
    ConditionReport& v6 = rep.conditions[6];
    v1.name = "antisymmetry";
    v2.name = "subtorus_in_kernel";
    v3.name = "polytope_delzant_centered";
    v4.name = "period_basis_rank";
    v5a.name = "curvature_integrality";
    v5b.name = "curvature_cyclic_identity";
    v6.name = "holonomy_compatible";

    int d = list.torus_dim;
    bool antisym = list.sigma_t.rows == d && list.sigma_t.cols == d;
    for (int i = 0; antisym && i < d; ++i)
        for (int j = 0; antisym && j < d; ++j)
            if (list.sigma_t.at(i, j) != -list.sigma_t.at(j, i)) antisym = false;
    v1.verdict = antisym ? Verdict::Pass : Verdict::Fail;
    if (!antisym) v1.detail = "sigma_t is not antisymmetric";

    // Polytope condition is independent of sigma_t.
    {
        DelzantCertificate cert = is_delzant(list.delta);
        bool centered = q_is_zero(centroid(list.delta));
        bool dims = list.delta.dim_h == list.d_h();
        v3.verdict = (cert.accepted && centered && dims) ? Verdict::Pass : Verdict::Fail;
        if (!dims) {
            v3.detail = "polytope dimension differs from dim t_h";
        } else if (!cert.accepted) {
            for (const VertexReport& vr : cert.vertices)
                if (!vr.simple_ok || !vr.unimodular_ok) {
                    std::ostringstream os;
                    os << "vertex " << vr.vertex_index << ": ";
                    if (!vr.simple_ok)
                        os << vr.active_facets.size() << " active facets (want " << list.delta.dim_h << ")";
                    else
                        os << "normal determinant " << vr.determinant->str();
                    v3.detail = os.str();
                    break;
                }
        } else if (!centered) {
            QVec c = centroid(list.delta);
            std::string s = "centroid (";
            for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + rat_to_string(c[i]);
            v3.detail = s + ") is not the origin";
        }
    }

    if (!antisym) return rep;  // remaining conditions need the kernel

    QSubspace l = kernel_q(list.sigma_t);
    bool contained = true;
    for (int j = 0; j < list.t_h.lattice.rank() && contained; ++j)
        if (!l.contains(to_qvec(list.t_h.lattice.basis.column(j)))) contained = false;
    v2.verdict = contained ? Verdict::Pass : Verdict::Fail;
    if (!contained) v2.detail = "t_h is not contained in ker sigma_t";
    if (!contained) return rep;

    int d_N = l.dim() - list.d_h();
    bool rank_ok = list.k() == d_N && (d_N == 0 || det_q(QMatrix::from_z(list.p_basis)) != 0);
    v4.verdict = rank_ok ? Verdict::Pass : Verdict::Fail;
    if (!rank_ok) {
        v4.detail = "p_basis rank " + std::to_string(rank_q(QMatrix::from_z(list.p_basis))) +
                    ", expected " + std::to_string(d_N);
        return rep;
    }

    Frame f = build_frame(list);

    {
        bool ok = true;
        for (int i = 0; i < f.d_N && ok; ++i)
            for (int j = i + 1; j < f.d_N && ok; ++j) {
                const QVec& v = f.c_t[i][j];
                for (const Rat& x : v)
                    if (!is_integer(x)) {
                        ok = false;
                        v5a.detail = "c(eps^" + std::to_string(i + 1) + ", eps^" +
                                     std::to_string(j + 1) + ") is not integral";
                        break;
                    }
            }
        v5a.verdict = ok ? Verdict::Pass : Verdict::Fail;
    }

    {
        bool ok = true;
        for (int a = 0; a < f.d_N && ok; ++a)
            for (int b = a + 1; b < f.d_N && ok; ++b)
                for (int cc = b + 1; cc < f.d_N && ok; ++cc) {
                    QVec za = to_qvec(f.p_mat.column(a));
                    QVec zb = to_qvec(f.p_mat.column(b));
                    QVec zc = to_qvec(f.p_mat.column(cc));
                    Rat sum = f.n_pairing_lcoords(za, f.c_pair_l(b, cc)) +
                              f.n_pairing_lcoords(zb, f.c_pair_l(cc, a)) +
                              f.n_pairing_lcoords(zc, f.c_pair_l(a, b));
                    if (sum != 0) {
                        ok = false;
                        v5b.detail = "cyclic sum " + rat_to_string(sum) + " at basis triple (" +
                                     std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                     std::to_string(cc + 1) + ")";
                    }
                }
        v5b.verdict = ok ? Verdict::Pass : Verdict::Fail;
    }

    {
        HolonomyMap tau{list.tau_values};
        std::string witness;
        bool ok = verify_hom_c(f, tau, &witness);
        v6.verdict = ok ? Verdict::Pass : Verdict::Fail;
        if (!ok) v6.detail = witness;
    }

    return rep;
}

int dim_m(const IngredientList& list) {
    int d = list.torus_dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (list.sigma_t.at(i, j) != -list.sigma_t.at(j, i))
                throw PreconditionError("dim_m: sigma_t is not antisymmetric");
    return d + kernel_q(list.sigma_t).dim();
}

IngredientList canonicalize(const IngredientList& list) {
    IngredientList out = list;
    HnfResult hu = hnf(list.p_basis);
    if (hu.h == list.p_basis) return out;
    Frame f = build_frame(list);
    int kk = list.k();
    out.p_basis = hu.h;
    std::vector<std::vector<QVec>> c_new(kk, std::vector<QVec>(kk, QVec(f.d_l, Rat(0))));
    for (int a = 0; a < kk; ++a)
        for (int b = 0; b < kk; ++b) {
            QVec acc(f.d_l, Rat(0));
            for (int l = 0; l < kk; ++l) {
                if (hu.u.at(l, a) == 0) continue;
                for (int m = 0; m < kk; ++m) {
                    if (hu.u.at(m, b) == 0 || l == m) continue;
                    Rat coeff(Int(hu.u.at(l, a) * hu.u.at(m, b)));
                    acc = q_add(acc, q_scale(list.c_values[l][m], coeff));
                }
            }
            c_new[a][b] = std::move(acc);
        }
    out.c_values = std::move(c_new);
    HolonomyMap tau{list.tau_values};
    std::vector<TorusElement> tau_new;
    for (int a = 0; a < kk; ++a) tau_new.push_back(tau_of(f, tau, hu.u.column(a)));
    out.tau_values = std::move(tau_new);
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using json = nlohmann::ordered_json;

long long to_ll(const Int& x) {
    if (x > Int(std::numeric_limits<long long>::max()) ||
        x < Int(std::numeric_limits<long long>::min()))
        throw Error("serialize: integer out of range");
    return x.convert_to<long long>();
}

json rational_vec(const QVec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

long long require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<long long>();
}

Rat require_rational(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SchemaError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

QVec require_rational_vec(const json& j, size_t len, const std::string& where) {
    if (!j.is_array() || j.size() != len)
        throw SchemaError(where + ": expected an array of " + std::to_string(len) + " rationals");
    QVec v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(require_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

} // namespace

Rat parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = 0;
        if (allow_sign && (t[0] == '-')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw SchemaError("malformed rational '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw SchemaError("zero denominator in '" + s + "'");
    return Rat(n) / Rat(d);
}

IngredientList parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    static const std::vector<std::string> known = {
        "torus_dim", "sigma_t", "t_h_lattice", "delta_vertices", "p_basis", "c", "tau"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw SchemaError("unknown field '" + it.key() + "'");

    IngredientList list;
    long long d = require_int(require(doc, "torus_dim"), "torus_dim");
    if (d < 0 || d > 64) throw SchemaError("torus_dim out of range");
    list.torus_dim = static_cast<int>(d);

    const json& sig = require(doc, "sigma_t");
    if (!sig.is_array() || static_cast<long long>(sig.size()) != d)
        throw SchemaError("sigma_t: expected " + std::to_string(d) + " rows");
    list.sigma_t = QMatrix(list.torus_dim, list.torus_dim);
    for (int i = 0; i < list.torus_dim; ++i) {
        QVec row = require_rational_vec(sig[i], d, "sigma_t[" + std::to_string(i) + "]");
        for (int j = 0; j < list.torus_dim; ++j) list.sigma_t.at(i, j) = row[j];
    }
    for (int i = 0; i < list.torus_dim; ++i)
        for (int j = 0; j < list.torus_dim; ++j)
            if (list.sigma_t.at(i, j) != -list.sigma_t.at(j, i))
                throw SchemaError("sigma_t is not antisymmetric");

    const json& thl = require(doc, "t_h_lattice");
    if (!thl.is_array()) throw SchemaError("t_h_lattice: expected an array of integer columns");
    std::vector<ZVec> ycols;
    for (size_t j = 0; j < thl.size(); ++j) {
        const json& col = thl[j];
        if (!col.is_array() || static_cast<long long>(col.size()) != d)
            throw SchemaError("t_h_lattice[" + std::to_string(j) + "]: expected " +
                              std::to_string(d) + " integers");
        ZVec v;
        for (size_t i = 0; i < col.size(); ++i)
            v.push_back(Int(require_int(col[i], "t_h_lattice[" + std::to_string(j) + "][" +
                                                    std::to_string(i) + "]")));
        ycols.push_back(std::move(v));
    }
    try {
        list.t_h = Subtorus::make(list.torus_dim, ycols);
    } catch (const Error& e) {
        throw SchemaError(std::string("t_h_lattice: ") + e.what());
    }
    int d_h = list.d_h();

    const json& dv = require(doc, "delta_vertices");
    if (!dv.is_array() || dv.empty())
        throw SchemaError("delta_vertices: expected a nonempty array of vertices");
    std::vector<QVec> verts;
    for (size_t i = 0; i < dv.size(); ++i)
        verts.push_back(require_rational_vec(dv[i], d_h, "delta_vertices[" + std::to_string(i) + "]"));
    try {
        list.delta = DelzantPolytope::from_vertices(d_h, verts);
    } catch (const Error& e) {
        throw SchemaError(std::string("delta_vertices: ") + e.what());
    }

    const json& pb = require(doc, "p_basis");
    if (!pb.is_array()) throw SchemaError("p_basis: expected an array of integer vectors");
    int kk = static_cast<int>(pb.size());
    list.p_basis = ZMatrix(kk, kk);
    for (int jcol = 0; jcol < kk; ++jcol) {
        const json& col = pb[jcol];
        if (!col.is_array() || static_cast<int>(col.size()) != kk)
            throw SchemaError("p_basis[" + std::to_string(jcol) + "]: expected " +
                              std::to_string(kk) + " integers");
        for (int i = 0; i < kk; ++i)
            list.p_basis.at(i, jcol) =
                Int(require_int(col[i], "p_basis[" + std::to_string(jcol) + "][" +
                                            std::to_string(i) + "]"));
    }

    const json& cj = require(doc, "c");
    if (!cj.is_array()) throw SchemaError("c: expected an array of {i, j, value} entries");
    int d_l = d_h + kk;
    list.c_values.assign(kk, std::vector<QVec>(kk, QVec(d_l, Rat(0))));
    std::set<std::pair<int, int>> seen;
    for (size_t e = 0; e < cj.size(); ++e) {
        const json& entry = cj[e];
        std::string where = "c[" + std::to_string(e) + "]";
        if (!entry.is_object()) throw SchemaError(where + ": expected an object");
        for (auto it = entry.begin(); it != entry.end(); ++it)
            if (it.key() != "i" && it.key() != "j" && it.key() != "value")
                throw SchemaError(where + ": unknown field '" + it.key() + "'");
        long long i1 = require_int(require(entry, "i"), where + ".i");
        long long j1 = require_int(require(entry, "j"), where + ".j");
        if (i1 < 1 || j1 <= i1 || j1 > kk)
            throw SchemaError(where + ": need 1 <= i < j <= " + std::to_string(kk));
        if (!seen.insert({static_cast<int>(i1), static_cast<int>(j1)}).second)
            throw SchemaError(where + ": duplicate pair");
        QVec val = require_rational_vec(require(entry, "value"), d_l, where + ".value");
        list.c_values[i1 - 1][j1 - 1] = val;
        list.c_values[j1 - 1][i1 - 1] = q_scale(val, Rat(-1));
    }

    const json& tj = require(doc, "tau");
    if (!tj.is_array() || static_cast<int>(tj.size()) != kk)
        throw SchemaError("tau: expected " + std::to_string(kk) + " torus elements");
    for (int i = 0; i < kk; ++i) {
        QVec v = require_rational_vec(tj[i], d, "tau[" + std::to_string(i) + "]");
        for (const Rat& x : v)
            if (x < 0 || x >= 1)
                throw SchemaError("tau[" + std::to_string(i) + "]: coordinates must lie in [0,1)");
        TorusElement t;
        t.coords = v;
        list.tau_values.push_back(t);
    }
    return list;
}

std::string serialize(const IngredientList& raw) {
    IngredientList list = raw;
    try {
        list = canonicalize(raw);
    } catch (const Error&) {
        // leave non-canonicalizable lists as-is
    }
    json doc = json::object();
    doc["torus_dim"] = list.torus_dim;
    json sig = json::array();
    for (int i = 0; i < list.torus_dim; ++i) sig.push_back(rational_vec(list.sigma_t.row(i)));
    doc["sigma_t"] = sig;
    json thl = json::array();
    for (int j = 0; j < list.t_h.lattice.rank(); ++j) {
        json col = json::array();
        for (const Int& x : list.t_h.lattice.basis.column(j)) col.push_back(to_ll(x));
        thl.push_back(col);
    }
    doc["t_h_lattice"] = thl;
    json dv = json::array();
    for (const QVec& v : list.delta.vertices) dv.push_back(rational_vec(v));
    doc["delta_vertices"] = dv;
    json pb = json::array();
    for (int j = 0; j < list.k(); ++j) {
        json col = json::array();
        for (const Int& x : list.p_basis.column(j)) col.push_back(to_ll(x));
        pb.push_back(col);
    }
    doc["p_basis"] = pb;
    json cj = json::array();
    for (int i = 0; i < list.k(); ++i)
        for (int j = i + 1; j < list.k(); ++j) {
            if (q_is_zero(list.c_values[i][j])) continue;
            json entry = json::object();
            entry["i"] = i + 1;
            entry["j"] = j + 1;
            entry["value"] = rational_vec(list.c_values[i][j]);
            cj.push_back(entry);
        }
    doc["c"] = cj;
    json tj = json::array();
    for (const TorusElement& t : list.tau_values) tj.push_back(rational_vec(t.coords));
    doc["tau"] = tj;
    return doc.dump(2) + "\n";
}

} // namespace torinv
