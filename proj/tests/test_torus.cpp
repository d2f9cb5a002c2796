#include "doctest.h"

#include <set>

#include "gen.hpp"
#include "torinv/torus.hpp"

using namespace torinv;
using namespace torinv::test;

TEST_CASE("TorusElement reduction and arithmetic") {
    TorusElement t = TorusElement::from_coords(qv({"3/2", "-1/3"}));
    CHECK(t.coords == qv({"1/2", "2/3"}));
    CHECK(TorusElement::identity(2).is_identity());
    CHECK(t.add(t.neg()).is_identity());
    CHECK(t.mul_int(Int(3)) == TorusElement::from_coords(qv({"1/2", "0"})));
    CHECK(t.sub(t).is_identity());

    Rng rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        TorusElement a = TorusElement::from_coords(rand_qvec(rng, 3));
        TorusElement b = TorusElement::from_coords(rand_qvec(rng, 3));
        CHECK(a.add(b) == b.add(a));
        CHECK(a.add(b).sub(b) == a);
        for (const auto& x : a.coords) {
            CHECK(x >= 0);
            CHECK(x < 1);
        }
    }
}

TEST_CASE("complement examples") {
    Subtorus e1 = Subtorus::make(2, {zv({1, 0})});
    CHECK(complement(e1).lattice == IntegerLattice::from_generators(2, {zv({0, 1})}));

    Subtorus triv = Subtorus::trivial(2);
    CHECK(complement(triv) == Subtorus::full(2));

    Subtorus skew = Subtorus::make(2, {zv({2, 1})});
    Subtorus c = complement(skew);
    Int d = det_z(z_hstack(skew.lattice.basis, c.lattice.basis));
    CHECK((d == 1 || d == -1));

    CHECK_THROWS_AS(Subtorus::make(2, {zv({2, 0})}), NotSaturated);
}

TEST_CASE("complement_shifted examples") {
    Subtorus e1 = Subtorus::make(2, {zv({1, 0})});
    ZMatrix zero_shift(1, 1);
    CHECK(complement_shifted(e1, zero_shift) == complement(e1));

    ZMatrix three(1, 1);
    three.at(0, 0) = 3;
    CHECK(complement_shifted(e1, three).lattice ==
          IntegerLattice::from_generators(2, {zv({3, 1})}));

    ZMatrix bad(2, 1);
    CHECK_THROWS_AS(complement_shifted(e1, bad), DimensionMismatch);
}

TEST_CASE("complement_shifted: unimodular union and injectivity") {
    Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rand_int(rng, 1, 4));
        int r = static_cast<int>(rand_int(rng, 1, n));
        ZMatrix u = rand_unimodular(rng, n);
        std::vector<ZVec> gens;
        for (int j = 0; j < r; ++j) gens.push_back(u.column(j));
        Subtorus sub = Subtorus::make(n, gens);

        ZMatrix s1 = rand_zmatrix(rng, r, n - r, -3, 3);
        ZMatrix s2 = rand_zmatrix(rng, r, n - r, -3, 3);
        Subtorus c1 = complement_shifted(sub, s1);
        Subtorus c2 = complement_shifted(sub, s2);
        Int d = det_z(z_hstack(sub.lattice.basis, c1.lattice.basis));
        CHECK((d == 1 || d == -1));
        CHECK((c1 == c2) == (s1 == s2));
    }
}

TEST_CASE("split_element examples") {
    Subtorus u = Subtorus::make(2, {zv({1, 0})});
    Subtorus v = Subtorus::make(2, {zv({0, 1})});
    auto [tu, tv] = split_element(TorusElement::from_coords(qv({"1/2", "1/3"})), u, v);
    CHECK(tu == TorusElement::from_coords(qv({"1/2", "0"})));
    CHECK(tv == TorusElement::from_coords(qv({"0", "1/3"})));

    auto [zu, zvv] = split_element(TorusElement::identity(2), u, v);
    CHECK(zu.is_identity());
    CHECK(zvv.is_identity());

    Subtorus diag = Subtorus::make(2, {zv({1, 1})});
    auto [td, te] = split_element(TorusElement::from_coords(qv({"1/2", "1/2"})), diag, v);
    CHECK(td == TorusElement::from_coords(qv({"1/2", "1/2"})));
    CHECK(te.is_identity());

    CHECK_THROWS_AS(split_element(TorusElement::identity(2), u, u), NotComplementary);
}

TEST_CASE("split_element recomposition on random complementary pairs") {
    Rng rng(203);
    for (int trial = 0; trial < 80; ++trial) {
        int n = static_cast<int>(rand_int(rng, 1, 4));
        int r = static_cast<int>(rand_int(rng, 0, n));
        ZMatrix um = rand_unimodular(rng, n);
        std::vector<ZVec> gu, gv;
        for (int j = 0; j < r; ++j) gu.push_back(um.column(j));
        for (int j = r; j < n; ++j) gv.push_back(um.column(j));
        Subtorus u = Subtorus::make(n, gu);
        Subtorus v = Subtorus::make(n, gv);
        TorusElement t = TorusElement::from_coords(rand_qvec(rng, n));
        auto [tu, tv] = split_element(t, u, v);
        CHECK(tu.add(tv) == t);
        // Component lies on its subtorus: tu is in span(u.lattice) + Z^n.
        QSubspace su = QSubspace::from_vectors(
            n, [&] {
                std::vector<QVec> cols;
                for (int j = 0; j < u.lattice.basis.cols; ++j)
                    cols.push_back(to_qvec(u.lattice.basis.column(j)));
                return cols;
            }());
        CHECK(member_subspace_plus_lattice(tu.coords, su, IntegerLattice::standard(n)));
    }
}
