#pragma once

#include <optional>
#include <utility>

#include "torinv/holonomy.hpp"
#include "torinv/ingredients.hpp"

namespace torinv {

// ---------------------------------------------------------------------------
// The two-step nilpotent group G = T x N and its Lie algebra.

struct GElement {
    TorusElement t;
    QVec zeta;  // N-coordinates
    bool operator==(const GElement&) const = default;
};

// Lie algebra pair (X, zeta): ambient t-coordinates plus N-coordinates.
struct GTangent {
    QVec x;
    QVec zeta;
    bool operator==(const GTangent&) const = default;
};

GElement g_identity(const Frame& f);
GElement g_multiply(const Frame& f, const GElement& a, const GElement& b);
GElement g_inverse(const Frame& f, const GElement& a);
GTangent g_bracket(const Frame& f, const GTangent& x1, const GTangent& x2);

// Membership in the subgroup H: integral period and t * tau_zeta inside T_h.
bool h_contains(const Frame& f, const HolonomyMap& tau, const GElement& g);

// ---------------------------------------------------------------------------
// The covering group Gamma = (T_f)_Z x P with twisted product.

struct GammaElement {
    ZVec b_part;  // coordinates along the canonical complement basis, length d - d_h
    ZVec beta;    // P-coordinates, length k
    bool operator==(const GammaElement&) const = default;
};

GammaElement gamma_identity(const Frame& f);
GammaElement gamma_multiply(const Frame& f, const GammaElement& left, const GammaElement& right);
GammaElement gamma_inverse(const Frame& f, const GammaElement& a);
GammaElement gamma_commutator(const Frame& f, const GammaElement& a, const GammaElement& b);

// The one-sided bilinear expansion b(beta, beta') with b - b^T = c; the
// complementary-component value lands in the integer lattice when the
// integrality condition holds.
ZVec b_f_values(const Frame& f, const ZVec& beta1, const ZVec& beta2);

// Point of the covering-space factor: complement coordinates, N-coordinates,
// and the image point in the polytope.
struct ParallelPoint {
    QVec z;     // t_f coordinates, length d - d_h
    QVec zeta;  // N-coordinates
    QVec mu;    // polytope point, length d_h
    bool operator==(const ParallelPoint&) const = default;
};

struct GammaActResult {
    ParallelPoint point;
    TorusElement h_factor;  // torus element acting on the Hamiltonian factor
};

// Deck action of Gamma; the Hamiltonian-factor effect is reported as the
// acting torus element rather than applied to a manifold point.
GammaActResult gamma_act(const Frame& f, const HolonomyMap& tau, const GammaElement& g,
                         const ParallelPoint& p);

// ---------------------------------------------------------------------------
// Exact evaluation of the model symplectic forms.

// Tangent data for the pulled-back form: dt ambient, dzeta in N-coordinates,
// and the pairing covector Y |-> sigma_h(dx, Y_M(x)) in Y-coordinates
// (empty covector instead means dx = 0).
struct OmegaTangent {
    QVec dt;
    QVec dzeta;
    QVec dx_pair_th;
};

struct SigmaHOracle {
    std::optional<Rat> dx_dx;  // sigma_h(dx, d'x) for the ordered argument pair
};

// omega(da, d'a) at base point (t, zeta, x) with mu = mu(x):
//   sigma_t(dt, d't) + dzeta(X'_l) - d'zeta(X_l) - mu(c_h(dzeta, d'zeta))
//   + <da.dx_pair, X'_h> - <d'a.dx_pair, X_h> + sigma_h(dx, d'x),
// where X = dt + c(dzeta, zeta)/2. Throws OracleMissing when both dx parts
// are present without the oracle value.
Rat omega_eval(const Frame& f, const QVec& zeta_n, const OmegaTangent& da, const OmegaTangent& dpa,
               const QVec& mu, const SigmaHOracle& oracle);

// ---------------------------------------------------------------------------
// Local chart around a point with stabilizer subtorus exp(span X_j).

struct LocalChart {
    ZMatrix x_basis;            // d x m, Z-basis of the saturated stabilizer sublattice inside l
    int m = 0;
    std::vector<QVec> xi;       // functionals Y |-> iota(Y_h)^j, as covectors on the l-frame
    std::vector<QVec> x_frame;  // l-frame coordinates of each stabilizer basis vector
};

// Throws SingularChart unless the columns are a Z-basis of a saturated
// sublattice contained in ker sigma_t.
LocalChart make_chart(const Frame& f, const ZMatrix& x_basis);

// Tangent vector in the local chart: ambient complement direction, a covector
// on the kernel frame vanishing on the stabilizer, and (theta, rho) parts.
struct LocalTangent {
    QVec x;        // ambient t-coordinates
    QVec dlambda;  // l-frame covector, length dim l
    QVec dtheta;   // length m
    QVec drho;     // length m
};

// sigma_t(x, x') + dlambda(x'_l) - d'lambda(x_l) + sum_j (drho_j d'theta^j - d'rho_j dtheta^j).
// Angle units normalized so that a full turn is 1.
Rat local_form_eval(const Frame& f, const LocalChart& chart, const LocalTangent& a,
                    const LocalTangent& b);

// The chart isomorphism (dlambda, drho) |-> [Y |-> dlambda(Y) + sum_j iota(Y_h)^j drho_j]
// onto covectors of the kernel frame, and its exact inverse.
QVec a_iso(const LocalChart& chart, const QVec& dlambda, const QVec& drho);
std::pair<QVec, QVec> a_iso_inverse(const LocalChart& chart, const QVec& xi);

// ---------------------------------------------------------------------------
// The constant product form on t_f x N and the split form.

// Matrix of sigma_t(dZ, d'Z) + dzeta(d'Z_l) - d'zeta(dZ_l) in the basis
// (t_f basis, N basis). Throws NotComplementary unless t_f complements t_h.
QMatrix nu_matrix(const IngredientList& list, const Subtorus& t_f);
bool nu_nondegenerate(const IngredientList& list);

// sigma_f((dt, dzeta), (d't, d'zeta)) at base period zeta_n:
//   sigma_t(dt, d't) + dzeta(X'_l) - d'zeta(X_l), X = dt + c(dzeta, zeta)/2.
// Requires the t_h-component of c to vanish for the supplied complement;
// throws SplittingAbsent otherwise.
Rat sigma_f_eval(const Frame& f, const Subtorus& t_f, const QVec& zeta_n, const GTangent& da,
                 const GTangent& dpa);

} // namespace torinv
