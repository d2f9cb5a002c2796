#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "torinv/polytope.hpp"

using namespace torinv;
using namespace torinv::test;

namespace {

std::vector<QVec> simplex2() { return {qv({"0", "0"}), qv({"1", "0"}), qv({"0", "1"})}; }

std::vector<QVec> square2() {
    return {qv({"0", "0"}), qv({"1", "0"}), qv({"0", "1"}), qv({"1", "1"})};
}

bool has_facet(const std::vector<Facet>& fs, const ZVec& n, const Rat& off) {
    return std::any_of(fs.begin(), fs.end(),
                       [&](const Facet& f) { return f.normal == n && f.offset == off; });
}

}  // namespace

TEST_CASE("vrep_to_hrep examples") {
    auto fs = vrep_to_hrep(2, simplex2());
    REQUIRE(fs.size() == 3);
    CHECK(has_facet(fs, zv({1, 0}), Rat(0)));
    CHECK(has_facet(fs, zv({0, 1}), Rat(0)));
    CHECK(has_facet(fs, zv({-1, -1}), Rat(-1)));

    CHECK(vrep_to_hrep(2, square2()).size() == 4);

    auto fs3 = vrep_to_hrep(2, {qv({"0", "0"}), qv({"2", "0"}), qv({"0", "1"})});
    REQUIRE(fs3.size() == 3);
    CHECK(has_facet(fs3, zv({1, 0}), Rat(0)));
    CHECK(has_facet(fs3, zv({0, 1}), Rat(0)));
    CHECK(has_facet(fs3, zv({-1, -2}), Rat(-2)));
}

TEST_CASE("hrep/vrep round trip and canonical ordering") {
    Rng rng(301);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rand_int(rng, 1, 3));
        // Random unimodular image of a box: known vertex set.
        std::vector<QVec> verts;
        for (long long mask = 0; mask < (1LL << dim); ++mask) {
            QVec v(dim, Rat(0));
            for (int i = 0; i < dim; ++i)
                if (mask & (1LL << i)) v[i] = Rat(1);
            verts.push_back(v);
        }
        ZMatrix g = rand_unimodular(rng, dim);
        QMatrix gq = QMatrix::from_z(g);
        for (auto& v : verts) v = q_mul_vec(gq, v);

        DelzantPolytope p = DelzantPolytope::from_vertices(dim, verts);
        DelzantPolytope q = DelzantPolytope::from_facets(dim, p.facets);
        CHECK(p == q);
        CHECK(std::is_sorted(p.vertices.begin(), p.vertices.end()));
        // Interior points of the vertex list are not vertices: adding the
        // centroid of the input changes nothing.
        std::vector<QVec> padded = verts;
        padded.push_back(centroid(p));
        CHECK(DelzantPolytope::from_vertices(dim, padded) == p);
    }
}

TEST_CASE("degenerate and error inputs") {
    CHECK_THROWS_AS(DelzantPolytope::from_vertices(2, {qv({"0", "0"}), qv({"1", "1"})}),
                    NotFullDimensional);
    CHECK_THROWS_AS(vrep_to_hrep(2, {}), NotAPolytope);
    // Halfplane: unbounded.
    CHECK_THROWS_AS(hrep_to_vrep(2, {Facet{zv({1, 0}), Rat(0)}}), UnboundedPolytope);
    // Quadrant with a cap is bounded; without it, recession direction exists.
    CHECK_THROWS_AS(hrep_to_vrep(2, {Facet{zv({1, 0}), Rat(0)}, Facet{zv({0, 1}), Rat(0)}}),
                    UnboundedPolytope);
    // Infeasible system.
    CHECK_THROWS_AS(hrep_to_vrep(1, {Facet{zv({1}), Rat(1)}, Facet{zv({-1}), Rat(0)}}),
                    EmptyPolytope);
}

TEST_CASE("point polytope (dim 0)") {
    DelzantPolytope pt = DelzantPolytope::point();
    CHECK(vertex_count(pt) == 1);
    CHECK(is_delzant(pt).accepted);
    CHECK(centroid(pt).empty());
    CHECK(translate_to_centered(pt) == pt);
}

TEST_CASE("is_delzant examples") {
    DelzantPolytope simplex = DelzantPolytope::from_vertices(2, simplex2());
    DelzantCertificate c1 = is_delzant(simplex);
    CHECK(c1.accepted);
    for (const auto& v : c1.vertices) {
        CHECK(v.simple_ok);
        CHECK(v.unimodular_ok);
        REQUIRE(v.determinant.has_value());
        Int d = *v.determinant;
        CHECK((d == 1 || d == -1));
    }

    CHECK(is_delzant(DelzantPolytope::from_vertices(2, square2())).accepted);

    // conv{0, e1, 2 e2}: fails at vertex (1,0), |det| = 2.
    DelzantPolytope bad =
        DelzantPolytope::from_vertices(2, {qv({"0", "0"}), qv({"1", "0"}), qv({"0", "2"})});
    DelzantCertificate c2 = is_delzant(bad);
    CHECK(!c2.accepted);
    int bad_idx = -1;
    for (const auto& v : c2.vertices)
        if (!v.unimodular_ok) {
            REQUIRE(v.determinant.has_value());
            Int d = *v.determinant;
            CHECK((d == 2 || d == -2));
            bad_idx = v.vertex_index;
        }
    REQUIRE(bad_idx >= 0);
    CHECK(bad.vertices[static_cast<size_t>(bad_idx)] == qv({"1", "0"}));
}

TEST_CASE("is_delzant invariance under integral affine maps") {
    Rng rng(302);
    for (int trial = 0; trial < 40; ++trial) {
        bool use_simplex = rand_int(rng, 0, 1) == 0;
        std::vector<QVec> verts = use_simplex ? simplex2() : square2();
        std::vector<QVec> bad_verts = {qv({"0", "0"}), qv({"1", "0"}), qv({"0", "2"})};
        ZMatrix g = rand_unimodular(rng, 2);
        QMatrix gq = QMatrix::from_z(g);
        QVec t = to_qvec(rand_zvec(rng, 2, -3, 3));
        auto apply = [&](std::vector<QVec> vs) {
            for (auto& v : vs) v = q_add(q_mul_vec(gq, v), t);
            return vs;
        };
        CHECK(is_delzant(DelzantPolytope::from_vertices(2, apply(verts))).accepted);
        CHECK(!is_delzant(DelzantPolytope::from_vertices(2, apply(bad_verts))).accepted);
    }
}

TEST_CASE("centroid examples") {
    CHECK(centroid(DelzantPolytope::from_vertices(2, simplex2())) == qv({"1/3", "1/3"}));
    CHECK(centroid(DelzantPolytope::from_vertices(2, square2())) == qv({"1/2", "1/2"}));
    CHECK(centroid(DelzantPolytope::from_vertices(
              2, {qv({"0", "0"}), qv({"2", "0"}), qv({"0", "1"})})) == qv({"2/3", "1/3"}));
}

TEST_CASE("centroid transforms affinely") {
    Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rand_int(rng, 1, 3));
        std::vector<QVec> verts;
        bool use_simplex = rand_int(rng, 0, 1) == 0;
        if (use_simplex) {
            verts.emplace_back(dim, Rat(0));
            for (int i = 0; i < dim; ++i) {
                QVec v(dim, Rat(0));
                v[i] = Rat(Int(rand_int(rng, 1, 3)));
                verts.push_back(v);
            }
        } else {
            for (long long mask = 0; mask < (1LL << dim); ++mask) {
                QVec v(dim, Rat(0));
                for (int i = 0; i < dim; ++i)
                    if (mask & (1LL << i)) v[i] = Rat(1);
                verts.push_back(v);
            }
        }
        QVec base_centroid = centroid(DelzantPolytope::from_vertices(dim, verts));
        // Simplex centroid is the vertex average; box centroid the center.
        QVec expect(dim, Rat(0));
        for (const auto& v : verts) expect = q_add(expect, v);
        expect = q_scale(expect, Rat(1) / Rat(Int(verts.size())));
        CHECK(base_centroid == expect);

        ZMatrix g = rand_unimodular(rng, dim);
        QMatrix gq = QMatrix::from_z(g);
        QVec t = to_qvec(rand_zvec(rng, dim, -2, 2));
        std::vector<QVec> moved = verts;
        for (auto& v : moved) v = q_add(q_mul_vec(gq, v), t);
        CHECK(centroid(DelzantPolytope::from_vertices(dim, moved)) ==
              q_add(q_mul_vec(gq, base_centroid), t));
    }
}

TEST_CASE("translate_to_centered") {
    DelzantPolytope sq = DelzantPolytope::from_vertices(2, square2());
    DelzantPolytope centered = translate_to_centered(sq);
    CHECK(centered.vertices == std::vector<QVec>{qv({"-1/2", "-1/2"}), qv({"-1/2", "1/2"}),
                                                 qv({"1/2", "-1/2"}), qv({"1/2", "1/2"})});
    CHECK(translate_to_centered(centered) == centered);
    QVec c = centroid(centered);
    CHECK(q_is_zero(c));

    DelzantPolytope simplex = DelzantPolytope::from_vertices(2, simplex2());
    DelzantPolytope cs = translate_to_centered(simplex);
    CHECK(cs.vertices == std::vector<QVec>{qv({"-1/3", "-1/3"}), qv({"-1/3", "2/3"}),
                                           qv({"2/3", "-1/3"})});

    Rng rng(304);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<QVec> verts = simplex2();
        ZMatrix g = rand_unimodular(rng, 2);
        QMatrix gq = QMatrix::from_z(g);
        for (auto& v : verts) v = q_mul_vec(gq, v);
        CHECK(q_is_zero(centroid(translate_to_centered(DelzantPolytope::from_vertices(2, verts)))));
    }
}

TEST_CASE("vertex_count") {
    CHECK(vertex_count(DelzantPolytope::from_vertices(2, simplex2())) == 3);
    CHECK(vertex_count(DelzantPolytope::from_vertices(2, square2())) == 4);
    CHECK(vertex_count(translate_to_centered(DelzantPolytope::from_vertices(2, simplex2()))) == 3);
}
