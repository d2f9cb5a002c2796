#include "torinv/orbitspace.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

namespace torinv {

namespace {

void check_space(const PolyhedralParallelSpace& s) {
    for (const ParallelConstraint& c : s.constraints) {
        if (static_cast<int>(c.form.size()) != s.ambient_dim)
            throw PreconditionError("constraint form has wrong length");
        if (q_is_zero(c.form)) throw PreconditionError("constraint form is zero");
    }
    for (const QVec& p : s.period_basis)
        if (static_cast<int>(p.size()) != s.ambient_dim)
            throw PreconditionError("period vector has wrong length");
}

// Enumerate k-subsets of {0..n-1}.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    rec(0, 0);
}

} // namespace

QSubspace lineality(const PolyhedralParallelSpace& space) {
    check_space(space);
    QMatrix forms(static_cast<int>(space.constraints.size()), space.ambient_dim);
    for (size_t i = 0; i < space.constraints.size(); ++i)
        for (int j = 0; j < space.ambient_dim; ++j)
            forms.at(static_cast<int>(i), j) = space.constraints[i].form[j];
    return kernel_q(forms);
}

bool verify_periods(const PolyhedralParallelSpace& space) {
    QSubspace lin = lineality(space);
    for (const QVec& p : space.period_basis)
        if (!lin.contains(p)) return false;
    return true;
}

Decomposition decompose(const PolyhedralParallelSpace& space) {
    if (!verify_periods(space))
        throw PeriodsNotInLineality("decompose: a period vector escapes the lineality");
    QSubspace lin = lineality(space);
    std::vector<bool> is_pivot(space.ambient_dim, false);
    for (const QVec& row : lin.basis)
        for (int j = 0; j < space.ambient_dim; ++j)
            if (row[j] != 0) {
                is_pivot[j] = true;
                break;
            }
    Decomposition out;
    for (int j = 0; j < space.ambient_dim; ++j)
        if (!is_pivot[j]) out.complement_axes.push_back(j);
    const int dim = static_cast<int>(out.complement_axes.size());
    for (const ParallelConstraint& c : space.constraints) {
        ParallelConstraint rc;
        rc.offset = c.offset;
        rc.form.resize(dim);
        for (int j = 0; j < dim; ++j) rc.form[j] = c.form[out.complement_axes[j]];
        out.delta_constraints.push_back(std::move(rc));
    }

    const int m = static_cast<int>(out.delta_constraints.size());
    // Recession directions: nonzero x with every restricted form nonnegative.
    // The restricted forms have trivial common kernel, so the cone is pointed
    // and it suffices to scan candidate extreme rays.
    bool unbounded = false;
    if (dim > 0) {
        for_each_subset(m, dim - 1, [&](const std::vector<int>& idx) {
            if (unbounded) return;
            QMatrix sub(dim - 1, dim);
            for (int r = 0; r < dim - 1; ++r)
                for (int j = 0; j < dim; ++j) sub.at(r, j) = out.delta_constraints[idx[r]].form[j];
            QSubspace ker = kernel_q(sub);
            if (ker.dim() != 1) return;
            for (int sign = 0; sign < 2; ++sign) {
                QVec r = sign ? q_scale(ker.basis[0], Rat(-1)) : ker.basis[0];
                bool ok = true;
                for (int cidx = 0; cidx < m && ok; ++cidx)
                    if (q_dot(out.delta_constraints[cidx].form, r) < 0) ok = false;
                if (ok) unbounded = true;
            }
        });
        if (m == 0) unbounded = true;  // no constraints on a positive-dimensional slice
    }
    out.compact = !unbounded;

    if (out.compact && dim > 0) {
        std::set<QVec> verts;
        for_each_subset(m, dim, [&](const std::vector<int>& idx) {
            QMatrix sub(dim, dim);
            QVec rhs(dim);
            for (int r = 0; r < dim; ++r) {
                for (int j = 0; j < dim; ++j) sub.at(r, j) = out.delta_constraints[idx[r]].form[j];
                rhs[r] = out.delta_constraints[idx[r]].offset;
            }
            if (det_q(sub) == 0) return;
            QMatrix inv = q_inverse(sub);
            QVec x = q_mul_vec(inv, rhs);
            for (int cidx = 0; cidx < m; ++cidx)
                if (q_dot(out.delta_constraints[cidx].form, x) < out.delta_constraints[cidx].offset)
                    return;
            verts.insert(x);
        });
        out.delta_vertices.assign(verts.begin(), verts.end());
    } else if (out.compact) {
        // zero-dimensional slice: the single point with no coordinates
        out.delta_vertices.push_back(QVec{});
    }
    return out;
}

OrbitSpace orbit_space_of(const IngredientList& list) {
    Frame f = build_frame(list);
    return {list.delta, f.d_N};
}

// ---------------------------------------------------------------------------
// Serialization

using json = nlohmann::ordered_json;

PolyhedralParallelSpace parse_space(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "ambient_dim" && it.key() != "constraints" && it.key() != "periods")
            throw SchemaError("unknown field '" + it.key() + "'");
    auto need = [&](const char* k) -> const json& {
        auto it = doc.find(k);
        if (it == doc.end()) throw SchemaError(std::string("missing field '") + k + "'");
        return *it;
    };
    PolyhedralParallelSpace s;
    const json& ad = need("ambient_dim");
    if (!ad.is_number_integer() || ad.get<long long>() < 0 || ad.get<long long>() > 64)
        throw SchemaError("ambient_dim out of range");
    s.ambient_dim = static_cast<int>(ad.get<long long>());
    auto rational_vec = [&](const json& arr, const std::string& where) {
        if (!arr.is_array() || static_cast<int>(arr.size()) != s.ambient_dim)
            throw SchemaError(where + ": expected " + std::to_string(s.ambient_dim) + " rationals");
        QVec v;
        for (const auto& x : arr) {
            if (!x.is_string()) throw SchemaError(where + ": expected rational strings");
            v.push_back(parse_rational(x.get<std::string>()));
        }
        return v;
    };
    const json& cs = need("constraints");
    if (!cs.is_array()) throw SchemaError("constraints: expected an array");
    for (size_t i = 0; i < cs.size(); ++i) {
        const json& e = cs[i];
        std::string where = "constraints[" + std::to_string(i) + "]";
        if (!e.is_object()) throw SchemaError(where + ": expected an object");
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "form" && it.key() != "offset")
                throw SchemaError(where + ": unknown field '" + it.key() + "'");
        auto fit = e.find("form");
        auto oit = e.find("offset");
        if (fit == e.end() || oit == e.end())
            throw SchemaError(where + ": needs 'form' and 'offset'");
        ParallelConstraint c;
        c.form = rational_vec(*fit, where + ".form");
        if (q_is_zero(c.form)) throw SchemaError(where + ": form must be nonzero");
        if (!oit->is_string()) throw SchemaError(where + ".offset: expected a rational string");
        c.offset = parse_rational(oit->get<std::string>());
        s.constraints.push_back(std::move(c));
    }
    const json& ps = need("periods");
    if (!ps.is_array()) throw SchemaError("periods: expected an array");
    for (size_t i = 0; i < ps.size(); ++i)
        s.period_basis.push_back(rational_vec(ps[i], "periods[" + std::to_string(i) + "]"));
    {
        QMatrix pm(static_cast<int>(s.period_basis.size()), s.ambient_dim);
        for (size_t i = 0; i < s.period_basis.size(); ++i)
            for (int j = 0; j < s.ambient_dim; ++j)
                pm.at(static_cast<int>(i), j) = s.period_basis[i][j];
        if (rank_q(pm) != static_cast<int>(s.period_basis.size()))
            throw SchemaError("periods: vectors must be linearly independent");
    }
    return s;
}

std::string serialize_space(const PolyhedralParallelSpace& space) {
    json doc = json::object();
    doc["ambient_dim"] = space.ambient_dim;
    json cs = json::array();
    for (const ParallelConstraint& c : space.constraints) {
        json e = json::object();
        json form = json::array();
        for (const Rat& x : c.form) form.push_back(rat_to_string(x));
        e["form"] = form;
        e["offset"] = rat_to_string(c.offset);
        cs.push_back(e);
    }
    doc["constraints"] = cs;
    json ps = json::array();
    for (const QVec& p : space.period_basis) {
        json v = json::array();
        for (const Rat& x : p) v.push_back(rat_to_string(x));
        ps.push_back(v);
    }
    doc["periods"] = ps;
    return doc.dump(2) + "\n";
}

} // namespace torinv
