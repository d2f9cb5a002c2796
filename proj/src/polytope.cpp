#include "torinv/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace torinv {

using boost::multiprecision::abs;

namespace {

bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool facet_less(const Facet& a, const Facet& b) {
    for (size_t i = 0; i < a.normal.size(); ++i)
        if (a.normal[i] != b.normal[i]) return a.normal[i] < b.normal[i];
    return a.offset < b.offset;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    std::vector<QVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(q_sub(pts[i], pts[0]));
    return QSubspace::from_vectors(static_cast<int>(pts[0].size()), diffs).dim();
}

struct FaceInfo {
    QVec normal;  // inward, ambient coordinates, inside the direction space
    std::vector<int> members;
};

// Facets of conv(points) relative to its affine hull.
std::vector<FaceInfo> enumerate_faces(const std::vector<QVec>& points) {
    int n = static_cast<int>(points.size());
    int ambient = static_cast<int>(points[0].size());
    std::vector<QVec> diffs;
    for (int i = 1; i < n; ++i) diffs.push_back(q_sub(points[i], points[0]));
    QSubspace dir = QSubspace::from_vectors(ambient, diffs);
    int k = dir.dim();
    std::vector<FaceInfo> faces;
    if (k == 0) return faces;
    std::set<std::vector<int>> seen;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        std::vector<QVec> spts;
        for (int i : s) spts.push_back(points[i]);
        if (affine_rank(spts) != k - 1) return;
        // normal = sum of y_a * dir.basis[a] orthogonal to the span of s
        QMatrix sys(k - 1, k);
        for (int r = 0; r + 1 < k; ++r) {
            QVec diff = q_sub(spts[r + 1], spts[0]);
            for (int a = 0; a < k; ++a) sys.at(r, a) = q_dot(dir.basis[a], diff);
        }
        QSubspace ker = kernel_q(sys);
        if (ker.dim() != 1) return;
        QVec normal(ambient, Rat(0));
        for (int a = 0; a < k; ++a)
            normal = q_add(normal, q_scale(dir.basis[a], ker.basis[0][a]));
        bool has_pos = false, has_neg = false;
        std::vector<Rat> vals(n);
        for (int i = 0; i < n; ++i) {
            vals[i] = q_dot(normal, q_sub(points[i], spts[0]));
            if (vals[i] > 0) has_pos = true;
            if (vals[i] < 0) has_neg = true;
        }
        if (has_pos && has_neg) return;
        if (has_neg) {
            normal = q_scale(normal, Rat(-1));
        } else if (!has_pos) {
            return;  // all points on the hyperplane: cannot happen with normal in dir
        }
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (vals[i] == 0) members.push_back(i);
        if (seen.insert(members).second) faces.push_back({std::move(normal), std::move(members)});
    });
    return faces;
}

std::vector<QVec> dedupe_sorted(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

std::vector<Facet> vrep_to_hrep(int dim, const std::vector<QVec>& points) {
    if (points.empty()) throw NotAPolytope("vrep_to_hrep: empty vertex list");
    for (const QVec& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatch("vrep_to_hrep: point dimension mismatch");
    std::vector<QVec> pts = dedupe_sorted(points);
    if (dim == 0) {
        return {};
    }
    if (affine_rank(pts) != dim)
        throw NotFullDimensional("vrep_to_hrep: points do not span the ambient space affinely");
    std::vector<Facet> facets;
    for (const FaceInfo& f : enumerate_faces(pts)) {
        // scale the normal to a primitive integer vector, carrying the offset along
        Int den = common_denominator(f.normal);
        ZVec w(f.normal.size());
        for (size_t i = 0; i < w.size(); ++i) w[i] = numerator(Rat(f.normal[i] * den));
        Int g = gcd_vec(w);
        ZVec prim = primitive(w);
        Rat scale = Rat(den, g);
        Rat offset = q_dot(f.normal, pts[f.members[0]]) * scale;
        facets.push_back({std::move(prim), std::move(offset)});
    }
    std::sort(facets.begin(), facets.end(), facet_less);
    return facets;
}

std::vector<QVec> hrep_to_vrep(int dim, const std::vector<Facet>& facets) {
    if (dim == 0) {
        if (!facets.empty()) throw NotAPolytope("hrep_to_vrep: facets in dimension zero");
        return {QVec{}};
    }
    int m = static_cast<int>(facets.size());
    QMatrix normals(m, dim);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(facets[i].normal.size()) != dim)
            throw DimensionMismatch("hrep_to_vrep: facet normal dimension mismatch");
        for (int j = 0; j < dim; ++j) normals.at(i, j) = Rat(facets[i].normal[j]);
    }
    if (rank_q(normals) < dim)
        throw UnboundedPolytope("hrep_to_vrep: constraint normals do not span; lineality present");
    // Boundedness: the recession cone {y : A y >= 0} must be {0}. Any nonzero pointed
    // cone has an extreme ray cut out by dim-1 independent active normals.
    bool unbounded = false;
    for_each_subset(m, dim - 1, [&](const std::vector<int>& s) {
        if (unbounded) return;
        QMatrix sub(dim - 1, dim);
        for (int r = 0; r + 1 < dim; ++r)
            for (int j = 0; j < dim; ++j) sub.at(r, j) = Rat(facets[s[r]].normal[j]);
        QSubspace ker = kernel_q(sub);
        if (ker.dim() != 1) return;
        for (int sign = 0; sign < 2; ++sign) {
            QVec y = sign ? q_scale(ker.basis[0], Rat(-1)) : ker.basis[0];
            bool recession = true;
            for (int i = 0; i < m && recession; ++i)
                if (q_dot(to_qvec(facets[i].normal), y) < 0) recession = false;
            if (recession) { unbounded = true; return; }
        }
    });
    if (unbounded) throw UnboundedPolytope("hrep_to_vrep: nonzero recession direction found");
    std::vector<QVec> verts;
    for_each_subset(m, dim, [&](const std::vector<int>& s) {
        QMatrix a(dim, dim);
        QVec b(dim);
        for (int r = 0; r < dim; ++r) {
            for (int j = 0; j < dim; ++j) a.at(r, j) = Rat(facets[s[r]].normal[j]);
            b[r] = facets[s[r]].offset;
        }
        if (det_q(a) == 0) return;
        QVec x = *q_solve(a, b);
        for (int i = 0; i < m; ++i)
            if (q_dot(to_qvec(facets[i].normal), x) < facets[i].offset) return;
        verts.push_back(std::move(x));
    });
    verts = dedupe_sorted(verts);
    if (verts.empty()) throw EmptyPolytope("hrep_to_vrep: no feasible vertex");
    if (affine_rank(verts) != dim)
        throw NotFullDimensional("hrep_to_vrep: feasible set is not full-dimensional");
    return verts;
}

DelzantPolytope DelzantPolytope::point() {
    DelzantPolytope p;
    p.dim_h = 0;
    p.vertices = {QVec{}};
    return p;
}

DelzantPolytope DelzantPolytope::from_vertices(int dim, const std::vector<QVec>& points) {
    DelzantPolytope p;
    p.dim_h = dim;
    p.facets = vrep_to_hrep(dim, points);
    p.vertices = hrep_to_vrep(dim, p.facets);  // canonical: extreme points only, sorted
    return p;
}

DelzantPolytope DelzantPolytope::from_facets(int dim, const std::vector<Facet>& facets) {
    DelzantPolytope p;
    p.dim_h = dim;
    std::vector<QVec> verts = hrep_to_vrep(dim, facets);
    p.facets = vrep_to_hrep(dim, verts);  // canonical: irredundant, primitive, sorted
    p.vertices = verts;
    return p;
}

DelzantCertificate is_delzant(const DelzantPolytope& p) {
    DelzantCertificate cert;
    cert.accepted = true;
    for (int vi = 0; vi < static_cast<int>(p.vertices.size()); ++vi) {
        VertexReport rep;
        rep.vertex_index = vi;
        for (int fi = 0; fi < static_cast<int>(p.facets.size()); ++fi)
            if (q_dot(to_qvec(p.facets[fi].normal), p.vertices[vi]) == p.facets[fi].offset)
                rep.active_facets.push_back(fi);
        rep.simple_ok = static_cast<int>(rep.active_facets.size()) == p.dim_h;
        if (rep.simple_ok) {
            ZMatrix m(p.dim_h, p.dim_h);
            for (int j = 0; j < p.dim_h; ++j)
                for (int i = 0; i < p.dim_h; ++i)
                    m.at(i, j) = p.facets[rep.active_facets[j]].normal[i];
            rep.determinant = det_z(m);
            rep.unimodular_ok = abs(*rep.determinant) == 1;
        }
        if (!rep.simple_ok || !rep.unimodular_ok) cert.accepted = false;
        cert.vertices.push_back(std::move(rep));
    }
    return cert;
}

namespace {

// Triangulation of the vertex set of a polytope (fan from the lex-least vertex,
// recursing into the facets that miss it). Returns index simplices.
std::vector<std::vector<int>> triangulate(const std::vector<QVec>& pts) {
    int k = affine_rank(pts);
    int n = static_cast<int>(pts.size());
    if (n == k + 1) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return {all};
    }
    int anchor = 0;
    for (int i = 1; i < n; ++i)
        if (lex_less(pts[i], pts[anchor])) anchor = i;
    std::vector<std::vector<int>> out;
    for (const FaceInfo& f : enumerate_faces(pts)) {
        if (std::find(f.members.begin(), f.members.end(), anchor) != f.members.end()) continue;
        std::vector<QVec> sub;
        for (int i : f.members) sub.push_back(pts[i]);
        for (const std::vector<int>& tri : triangulate(sub)) {
            std::vector<int> mapped{anchor};
            for (int local : tri) mapped.push_back(f.members[local]);
            out.push_back(std::move(mapped));
        }
    }
    return out;
}

} // namespace

QVec centroid(const DelzantPolytope& p) {
    if (p.dim_h == 0) return QVec{};
    Rat total = 0;
    QVec acc(p.dim_h, Rat(0));
    for (const std::vector<int>& tri : triangulate(p.vertices)) {
        QMatrix edges(p.dim_h, p.dim_h);
        for (int j = 0; j < p.dim_h; ++j) {
            QVec e = q_sub(p.vertices[tri[j + 1]], p.vertices[tri[0]]);
            for (int i = 0; i < p.dim_h; ++i) edges.at(i, j) = e[i];
        }
        Rat w = abs(det_q(edges));
        if (w == 0) continue;
        QVec center(p.dim_h, Rat(0));
        for (int idx : tri) center = q_add(center, p.vertices[idx]);
        center = q_scale(center, Rat(1, p.dim_h + 1));
        acc = q_add(acc, q_scale(center, w));
        total += w;
    }
    return q_scale(acc, Rat(1) / total);
}

DelzantPolytope translate_to_centered(const DelzantPolytope& p) {
    if (p.dim_h == 0) return p;
    QVec c = centroid(p);
    std::vector<QVec> moved;
    for (const QVec& v : p.vertices) moved.push_back(q_sub(v, c));
    return DelzantPolytope::from_vertices(p.dim_h, moved);
}

int vertex_count(const DelzantPolytope& p) { return static_cast<int>(p.vertices.size()); }

} // namespace torinv
