// Acceptance gate: one line per criterion, PASS or FAIL, exit code = number
// of failed criteria. Each criterion is exact arithmetic; no tolerances.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "torinv/cli.hpp"
#include "torinv/invariants.hpp"
#include "torinv/nilgroup.hpp"
#include "torinv/orbitspace.hpp"

#include "gen.hpp"

using namespace torinv;
using namespace torinv::test;

namespace {

int g_failures = 0;

struct CheckFailure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure{what};
}

void criterion(int n, const std::string& desc, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS  criterion " << n << ": " << desc << "\n";
    } catch (const CheckFailure& f) {
        ++g_failures;
        std::cout << "FAIL  criterion " << n << ": " << desc << " -- " << f.what << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "FAIL  criterion " << n << ": " << desc << " -- exception: " << e.what()
                  << "\n";
    }
}

ZVec add_zv(const ZVec& a, const ZVec& b) {
    ZVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

int main() {
    criterion(1, "flat 4-manifold fixture: validation and invariants", [] {
        IngredientList list = load_fixture("thurston.json");
        require(validate(list).all_pass(), "validation failed");
        require(dim_m(list) == 4, "dim_m != 4");
        require(euler_characteristic(list) == 0, "euler != 0");
        require(!pi1_abelian(list), "pi1 unexpectedly abelian");
        require(betti1(list) == 3, "betti1 != 3");
        H1Group g = h1(list, complement(list.t_h));
        require(g.free_rank == 3 && g.invariant_factors.empty(), "H1 != Z^3");
    });

    criterion(2, "Hamiltonian fixture: toric invariants with no period directions", [] {
        IngredientList list = load_fixture("cp2.json");
        require(validate(list).all_pass(), "validation failed");
        require(is_hamiltonian(list), "not detected Hamiltonian");
        require(euler_characteristic(list) == 3, "euler != 3");
        require(betti1(list) == 0, "betti1 != 0");
        require(list.k() == 0, "expected no period generators");
        // Exercise the degenerate paths.
        InvariantReport rep = invariant_report(list);
        require(rep.split.feasible, "trivial splitting infeasible");
        require(rep.moduli.direct == 0, "moduli space not a point");
        require(lists_equal(list, list), "self-equality failed");
    });

    criterion(3, "product-obstruction fixture: infeasible splitting certificate", [] {
        IngredientList list = load_fixture("benoist.json");
        require(validate(list).all_pass(), "validation failed");
        SplittingResult s = splitting(list);
        require(!s.feasible, "splitting unexpectedly feasible");
        require(s.certificate.find("0 = 1") != std::string::npos,
                "certificate does not exhibit the unsatisfiable equation");
        std::vector<ZMatrix> chern = chern_forms(list);
        require(chern.size() == 2, "expected two curvature matrices");
        ZMatrix expect(2, 2);
        expect.at(0, 1) = 1;
        expect.at(1, 0) = -1;
        require(chern[0] == expect, "first curvature matrix wrong");
        require(chern[1] == ZMatrix(2, 2), "second curvature matrix nonzero");
        require(betti1(list) == 4, "betti1 != 4");
        require(pi1_abelian(list), "pi1 not abelian");
    });

    criterion(4, "group laws: 1000 random instances with zero failures", [] {
        Rng rng(904);
        const std::vector<ListParams> grid = {{2, 0, 0}, {3, 0, 1}, {4, 2, 1}, {4, 0, 2},
                                              {5, 0, 2}};
        int instances = 0;
        while (instances < 1000) {
            const ListParams& params = grid[instances % grid.size()];
            IngredientList list = rand_valid_list(rng, params);
            Frame f = build_frame(list);
            HolonomyMap tau{list.tau_values};
            for (int rep = 0; rep < 5; ++rep, ++instances) {
                GElement a{TorusElement::from_coords(rand_qvec(rng, f.d)),
                           rand_qvec(rng, f.d_N, 4, 3)};
                GElement b{TorusElement::from_coords(rand_qvec(rng, f.d)),
                           rand_qvec(rng, f.d_N, 4, 3)};
                GElement c{TorusElement::from_coords(rand_qvec(rng, f.d)),
                           rand_qvec(rng, f.d_N, 4, 3)};
                require(g_multiply(f, g_multiply(f, a, b), c) ==
                            g_multiply(f, a, g_multiply(f, b, c)),
                        "G associativity failed");

                GammaElement ga{rand_zvec(rng, f.d - f.d_h, -3, 3), rand_zvec(rng, f.d_N, -3, 3)};
                GammaElement gb{rand_zvec(rng, f.d - f.d_h, -3, 3), rand_zvec(rng, f.d_N, -3, 3)};
                require(gamma_multiply(f, ga, gamma_inverse(f, ga)) == gamma_identity(f),
                        "Gamma inverse failed");
                GammaElement word = gamma_multiply(
                    f, gamma_multiply(f, gamma_inverse(f, gb), gamma_inverse(f, ga)),
                    gamma_multiply(f, gb, ga));
                GammaElement comm = gamma_commutator(f, ga, gb);
                require(word == comm, "Gamma commutator formula != word brute force");
                for (const auto& x : comm.beta)
                    require(x == 0, "commutator not in the translation factor");
                GammaElement gc{rand_zvec(rng, f.d - f.d_h, -3, 3), rand_zvec(rng, f.d_N, -3, 3)};
                require(gamma_multiply(f, comm, gc) == gamma_multiply(f, gc, comm),
                        "commutator not central");

                ParallelPoint p{rand_qvec(rng, f.d - f.d_h, 4, 3), rand_qvec(rng, f.d_N, 4, 3),
                                rand_qvec(rng, f.d_h, 2, 3)};
                GammaActResult r1 = gamma_act(f, tau, ga, p);
                GammaActResult r21 = gamma_act(f, tau, gb, r1.point);
                GammaActResult rc = gamma_act(f, tau, gamma_multiply(f, gb, ga), p);
                require(rc.point == r21.point, "Gamma action composition (point) failed");
                require(rc.h_factor == r21.h_factor.add(r1.h_factor),
                        "Gamma action composition (torus factor) failed");
            }
        }
    });

    criterion(5, "holonomy: product law over the whole period box; twist equivalence", [] {
        Rng rng(905);
        const std::vector<ListParams> grid = {{2, 0, 0}, {3, 0, 1}, {4, 2, 1}, {4, 2, 0}};
        int alpha_checks = 0;
        for (int t = 0; t < 100; ++t) {
            IngredientList list = rand_valid_list(rng, grid[t % grid.size()]);
            Frame f = build_frame(list);
            HolonomyMap tau{list.tau_values};
            int k = list.k();

            // Exhaustive product law over [-3,3]^k.
            std::vector<ZVec> box;
            ZVec z(k, Int(-3));
            while (true) {
                box.push_back(z);
                int j = 0;
                while (j < k && z[j] == 3) z[j++] = Int(-3);
                if (j == k) break;
                ++z[j];
            }
            for (const auto& z1 : box)
                for (const auto& z2 : box) {
                    TorusElement lhs = tau_of(f, tau, z2).add(tau_of(f, tau, z1));
                    QVec corr =
                        q_scale(f.c_bilinear_t(to_qvec(z2), to_qvec(z1)), Rat(1) / 2);
                    TorusElement rhs =
                        tau_of(f, tau, add_zv(z1, z2)).add(TorusElement::from_coords(corr));
                    require(lhs == rhs, "product law failed inside the box");
                }

            // Twisting inside the allowed space preserves the class.
            SpaceA a = space_a_basis(f);
            HolonomyMap t2 = tau, t3 = tau;
            for (int twist = 0; twist < 2 && !a.generators.empty(); ++twist) {
                HolonomyMap& target = twist == 0 ? t2 : t3;
                HolonomyMap base = twist == 0 ? tau : t2;
                size_t gi = static_cast<size_t>(rand_int(rng, 0, a.generators.size() - 1));
                Rat s = rand_rat(rng, 2, 3);
                target = base;
                for (int l = 0; l < k; ++l) {
                    QVec slice(a.generators[gi].begin() + l * f.d,
                               a.generators[gi].begin() + (l + 1) * f.d);
                    target.values[l] =
                        target.values[l].add(TorusElement::from_coords(q_scale(slice, s)));
                }
                require(equivalent(f, tau, target), "twist by a space-A direction not equivalent");
                ++alpha_checks;
            }
            // Equivalence relation axioms on the sampled triple.
            require(equivalent(f, tau, tau), "not reflexive");
            require(equivalent(f, t2, tau), "not symmetric");
            require(equivalent(f, t3, tau) && equivalent(f, tau, t3), "not transitive");
        }
        require(alpha_checks >= 100, "fewer than 100 twist samples");
    });

    criterion(6, "moduli dimension: direct count vs closed form", [] {
        Rng rng(906);
        const std::vector<ListParams> flat = {{2, 0, 0}, {3, 0, 0}, {3, 2, 0}, {4, 0, 0},
                                              {4, 2, 0}};
        for (int t = 0; t < 50; ++t) {
            IngredientList list = rand_valid_list(rng, flat[t % flat.size()]);
            ModuliDimension m = dim_moduli(list);
            require(m.formula.has_value(), "closed form missing for trivial t_h");
            require(m.direct == *m.formula, "direct != closed form");
        }
        for (int t = 0; t < 10; ++t) {
            IngredientList list = rand_valid_list(rng, {4, 0, 2});
            ModuliDimension m = dim_moduli(list);
            require(!m.formula.has_value(), "closed form emitted despite nontrivial t_h");
            require(!m.note.empty(), "missing discrepancy note");
            require(m.direct >= 0, "negative dimension");
        }
    });

    criterion(7, "lattice algebra: 500 random matrices vs oracles", [] {
        Rng rng(907);
        for (int t = 0; t < 500; ++t) {
            int r = static_cast<int>(rand_int(rng, 1, 3));
            int c = static_cast<int>(rand_int(rng, 1, 3));
            ZMatrix m = rand_zmatrix(rng, r, c, -5, 5);

            HnfResult hr = hnf(m);
            require(hr.h == z_mul(m, hr.u), "HNF certificate h = m u failed");
            Int du = det_z(hr.u);
            require(du == 1 || du == -1, "HNF transform not unimodular");
            require(hnf(hr.h).h == hr.h, "HNF not idempotent");

            SnfResult sr = snf(m);
            require(sr.d == z_mul(sr.u, z_mul(m, sr.v)), "SNF certificate failed");
            Int prod(1);
            for (int k = 1; k <= std::min(r, c); ++k) {
                prod *= sr.d.at(k - 1, k - 1);
                require(prod == minor_gcd(m, k), "SNF disagrees with minor-gcd oracle");
            }

            ZVec b = rand_zvec(rng, r, -5, 5);
            auto sol = solve_diophantine(m, b);
            auto brute = brute_solutions(m, b, 6);
            if (!sol.has_value()) {
                require(brute.empty(), "solver says infeasible, brute force found a solution");
            } else {
                require(z_mul_vec(m, sol->particular) == b, "particular solution wrong");
                for (const auto& x : brute) {
                    ZVec diff(x.size());
                    for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - sol->particular[i];
                    require(sol->homogeneous.contains(diff),
                            "brute-force solution outside the solution lattice");
                }
            }

            int n = static_cast<int>(rand_int(rng, 1, 4));
            int rk = static_cast<int>(rand_int(rng, 0, n));
            ZMatrix um = rand_unimodular(rng, n);
            std::vector<ZVec> gens;
            for (int j = 0; j < rk; ++j) gens.push_back(um.column(j));
            IntegerLattice sub = IntegerLattice::from_generators(n, gens);
            Int dd = det_z(z_hstack(sub.basis, extend_to_zbasis(sub)));
            require(dd == 1 || dd == -1, "basis completion not unimodular");
        }
    });

    criterion(8, "polytopes: Delzant verdicts and exact centroids", [] {
        Rng rng(908);
        for (int t = 0; t < 50; ++t) {
            int dim = static_cast<int>(rand_int(rng, 1, 3));
            bool use_simplex = rand_int(rng, 0, 1) == 0;
            std::vector<QVec> verts;
            if (use_simplex) {
                // Uniform dilation keeps the simplex Delzant; per-axis scaling
                // would not.
                Rat scale(Int(rand_int(rng, 1, 3)));
                verts.emplace_back(dim, Rat(0));
                for (int i = 0; i < dim; ++i) {
                    QVec v(dim, Rat(0));
                    v[i] = scale;
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
            ZMatrix g = rand_unimodular(rng, dim);
            QMatrix gq = QMatrix::from_z(g);
            QVec shift = to_qvec(rand_zvec(rng, dim, -3, 3));
            QVec avg(dim, Rat(0));
            for (auto& v : verts) {
                v = q_add(q_mul_vec(gq, v), shift);
                avg = q_add(avg, v);
            }
            avg = q_scale(avg, Rat(1) / Rat(Int(verts.size())));
            DelzantPolytope p = DelzantPolytope::from_vertices(dim, verts);
            require(is_delzant(p).accepted, "unimodular simplex/cube image rejected");
            // Both shapes have centroid = vertex average (simplex directly,
            // cube by central symmetry), commuting with affine maps.
            require(centroid(p) == avg, "centroid != independent vertex-average oracle");
        }

        DelzantPolytope bad = DelzantPolytope::from_vertices(
            2, {QVec{Rat(0), Rat(0)}, QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(2)}});
        DelzantCertificate cert = is_delzant(bad);
        require(!cert.accepted, "non-Delzant simplex accepted");
        bool found = false;
        for (const auto& v : cert.vertices)
            if (!v.unimodular_ok && v.determinant.has_value() &&
                (*v.determinant == 2 || *v.determinant == -2))
                found = true;
        require(found, "missing vertex determinant certificate of absolute value 2");
    });

    criterion(9, "orbit spaces: reassembly, lineality, compactness", [] {
        Rng rng(909);
        for (const char* name : {"strip_space.json", "halfplane_space.json"}) {
            PolyhedralParallelSpace space =
                parse_space(read_file(fixture_path(name)));
            QSubspace lin = lineality(space);
            // Kernel oracle: every form annihilates the lineality, and the
            // dimensions match the rank of the constraint matrix.
            QMatrix forms = QMatrix::from_rows(
                space.ambient_dim, [&] {
                    std::vector<QVec> rows;
                    for (const auto& c : space.constraints) rows.push_back(c.form);
                    return rows;
                }());
            require(lin.dim() == space.ambient_dim - rank_q(forms), "lineality dimension wrong");
            for (const auto& v : lin.basis)
                for (const auto& c : space.constraints)
                    require(q_dot(c.form, v) == 0, "lineality not annihilated by a form");

            Decomposition dec = decompose(space);
            for (int t = 0; t < 200; ++t) {
                QVec x = rand_qvec(rng, space.ambient_dim, 4, 3);
                bool in_space = true;
                for (const auto& c : space.constraints)
                    if (q_dot(c.form, x) < c.offset) in_space = false;
                QVec slice;
                for (int axis : dec.complement_axes) slice.push_back(x[axis]);
                bool in_slice = true;
                for (const auto& c : dec.delta_constraints)
                    if (q_dot(c.form, slice) < c.offset) in_slice = false;
                require(in_space == in_slice, "membership not preserved by the decomposition");
            }
        }

        PolyhedralParallelSpace strip = parse_space(read_file(fixture_path("strip_space.json")));
        require(decompose(strip).compact, "strip slice should be compact");
        PolyhedralParallelSpace half =
            parse_space(read_file(fixture_path("halfplane_space.json")));
        require(!decompose(half).compact, "halfplane slice should not be compact");
        PolyhedralParallelSpace all;
        all.ambient_dim = 2;
        all.period_basis = {QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(1)}};
        Decomposition free = decompose(all);
        require(free.compact && free.delta_vertices.size() == 1,
                "unconstrained space should decompose to a single point");
    });

    criterion(10, "completeness: equality decision under mutations and twists", [] {
        std::vector<IngredientList> fixtures = {
            load_fixture("thurston.json"), load_fixture("torus4.json"),
            load_fixture("cp2.json"), load_fixture("benoist.json")};
        for (const auto& l : fixtures) require(lists_equal(l, l), "not reflexive on a fixture");

        // sigma_t mutation (scaling keeps the list valid).
        IngredientList kod;
        kod.torus_dim = 3;
        kod.sigma_t = QMatrix(3, 3);
        kod.sigma_t.at(0, 1) = Rat(1);
        kod.sigma_t.at(1, 0) = Rat(-1);
        kod.t_h = Subtorus::trivial(3);
        kod.delta = DelzantPolytope::point();
        kod.p_basis = ZMatrix::identity(1);
        kod.c_values.assign(1, std::vector<QVec>(1, QVec(1, Rat(0))));
        kod.tau_values.push_back(TorusElement::identity(3));
        IngredientList kod2 = kod;
        kod2.sigma_t.at(0, 1) = Rat(2);
        kod2.sigma_t.at(1, 0) = Rat(-2);
        require(validate(kod).all_pass() && validate(kod2).all_pass(), "mutants must be valid");
        require(!lists_equal(kod, kod2), "sigma mutation not detected");

        // Polytope mutation.
        IngredientList cp2 = load_fixture("cp2.json");
        IngredientList big = cp2;
        std::vector<QVec> scaled;
        for (const auto& v : cp2.delta.vertices) scaled.push_back(q_scale(v, Rat(2)));
        big.delta = DelzantPolytope::from_vertices(2, scaled);
        require(validate(big).all_pass(), "scaled polytope must stay valid");
        require(!lists_equal(cp2, big), "polytope mutation not detected");

        // Period-generator mutation.
        IngredientList nil = load_fixture("thurston.json");
        IngredientList coarse = nil;
        coarse.p_basis = ZMatrix::identity(2);
        coarse.p_basis.at(0, 0) = 2;
        require(validate(coarse).all_pass(), "coarser period lattice must stay valid");
        require(!lists_equal(nil, coarse), "period mutation not detected");

        // Curvature mutation.
        IngredientList twoc = nil;
        twoc.c_values[0][1][0] = Rat(2);
        twoc.c_values[1][0][0] = Rat(-2);
        require(!lists_equal(nil, twoc), "curvature mutation not detected");

        // Holonomy twisted inside the allowed space: same list.
        IngredientList ben = load_fixture("benoist.json");
        IngredientList twisted = ben;
        twisted.tau_values = {
            TorusElement::from_coords(QVec{Rat(0), Rat(0), Rat(0), Rat(1) / 3}),
            TorusElement::from_coords(QVec{Rat(0), Rat(0), Rat(1) / 3, Rat(0)})};
        require(lists_equal(ben, twisted), "allowed twist detected as different");
        require(lists_equal(twisted, ben), "allowed twist detected as different (swapped)");
    });

    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria passed\n";
    } else {
        std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    }
    return g_failures;
}
