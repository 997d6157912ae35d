#pragma once

/*
 * Sigma-form machinery: the sigma-function built from the exact partition
 * polynomial, the Painleve VI sigma-form residual as an exact
 * rational-function identity, the expansion coefficients at x = infinity,
 * 0, 1, and the Hahn-polynomial route to the x = 1 coefficients.
 */

#include "fivevertex/hankel.hpp"
#include "fivevertex/model.hpp"
#include "fivevertex/ratfun.hpp"

#include <vector>

namespace fv {

struct SigmaParams {
    Rat nu1, nu2, nu3, nu4;
    Rat Atil, Btil;

    static SigmaParams from(const LatticeSpec& spec);
};

// sigma(x) = x(x-1) d/dx log P(1/x) - Atil*x + Btil, with P given as a
// polynomial in u = 1/x
RatFun sigma_from_P(const Poly& P_in_u, const LatticeSpec& spec);

// sigma'(x(x-1)sigma'')^2 + (sigma'[2 sigma + (1-2x) sigma'] + nu1nu2nu3nu4)^2
//   - prod_j (sigma' + nu_j^2)
// identically zero iff the sigma-form identity holds
RatFun pvi_residual(const RatFun& sigma, const SigmaParams& par);

struct ExpansionCoeffs {
    long a = 0, b = 0, c = 0;
    Rat C;        // leading constant
    Rat kappa1;   // first correction
    Rat kappa2;   // second correction
    long lead_exp = 0;  // power of the local variable in the leading term
};

ExpansionCoeffs coeffs_at_infinity(const LatticeSpec& spec);
ExpansionCoeffs coeffs_at_zero(const LatticeSpec& spec);
ExpansionCoeffs coeffs_at_one(const LatticeSpec& spec);

struct HahnParams {
    long alpha = 0, beta = 0, n = 0;

    static HahnParams from(const LatticeSpec& spec);
};

// recurrence coefficients of the monic Hahn polynomials; C_i = h_i/h_{i-1}
Rat hahn_B(const HahnParams& par, long i);
Rat hahn_h(const HahnParams& par, long i);
Rat hahn_C(const HahnParams& par, long i);

// kappa_1, kappa_2 at x = 1 via gamma_1 = -sum B_i and
// kappa_2 = (kappa_1^2 - kappa_1 + C_N)/2
struct HahnKappas {
    Rat kappa1, kappa2;
};
HahnKappas hahn_route_kappas(const LatticeSpec& spec);

struct SeriesCheck {
    ExpansionPoint point;
    std::vector<Rat> expected, actual;  // paired by position
    bool pass = false;
};

// expands sigma at the point and compares each printed coefficient of the
// corollary formulas (in nu1, nu2, N); degenerate denominators are skipped
SeriesCheck sigma_series_check(const LatticeSpec& spec, ExpansionPoint point);

// exact identity d/dx log P(1/x) = (sigma + Atil*x - Btil)/(x(x-1))
bool reconstruction_check(const LatticeSpec& spec);

}  // namespace fv
