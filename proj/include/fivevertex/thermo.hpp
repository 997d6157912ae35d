#pragma once

/*
 * Thermodynamic-limit expansions: regime classification, the f2/f1/f0
 * closed forms for square- and rectangle-shaped domains, the quartic
 * branch y(x), sigma_2 leading-order profiles, Barnes G, the free energy
 * per site, and helpers for comparing predictions against exact finite-N
 * values of log P.
 *
 * Everything floating here runs at 50 decimal digits; the epsilon = 0
 * Regime III identity gets a 250-digit type because its residual decays
 * exponentially in N and sinks below 50-digit resolution already at
 * moderate sizes.
 */

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fivevertex/model.hpp"
#include "fivevertex/rational.hpp"

namespace fv {

using Real = boost::multiprecision::cpp_bin_float_50;
using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<250>>;

enum class Regime { I, II, III };

struct GeometrySquare {
    Real r;
    long eps = 0;
};

struct GeometryRect {
    Real p;
    Real q;
};

struct AsymptoticExpansion {
    Regime regime = Regime::I;
    Real f2 = 0;
    Real f1 = 0;
    Real f0 = 0;
    Real logN_coeff = 0;
    // set when x sits exactly on a point where some term diverges
    bool boundary_divergence = false;
};

// mathematical zeta'(-1); the commonly cited decimal with two digits
// transposed is kept alongside for comparison purposes
const Real& zeta_prime_minus_one();
const Real& zeta_prime_minus_one_printed();
const Real& log_sqrt_2pi();

Real critical_x(const GeometrySquare& g);
Real critical_x(const GeometryRect& g);

// boundary points belong to both adjacent regimes; these return the
// lower-x regime label there (II at xc, III at 1/xc)
Regime classify_regime(const GeometrySquare& g, const Real& x);
Regime classify_regime(const GeometryRect& g, const Real& x);

AsymptoticExpansion f_terms_square(const GeometrySquare& g, const Real& x);
AsymptoticExpansion f_terms_rect(const GeometryRect& g, const Real& x);

// forced-regime overloads, used for continuity checks at the boundaries
AsymptoticExpansion f_terms_square(const GeometrySquare& g, const Real& x,
                                   Regime rg);
AsymptoticExpansion f_terms_rect(const GeometryRect& g, const Real& x,
                                 Regime rg);

// the quartic parametrization x(y) and its monotone inverse on
// y in [|p-q|, xc - 1]
Real quartic_x_of_y(const GeometryRect& g, const Real& y);
Real solve_quartic_branch(const GeometryRect& g, const Real& x);

// leading-order sigma/N^2 profiles
Real sigma2_leading(const GeometrySquare& g, const Real& x);
Real sigma2_leading(const GeometryRect& g, const Real& x);

// N^2 F2 + N F1 + kappa log N + F0 for log of the weighted partition
// function binom(M,N) * P; the rectangle version assembles the binomial
// asymptotics from Stirling-type expansions
Real wtZ_expansion(const GeometrySquare& g, const Real& x, long N);
Real wtZ_expansion(const GeometryRect& g, const Real& x, long N, long M);

// free energy per site; throws if (x-1)/Delta <= 0 or alpha <= 0
Real free_energy(const Real& p, const Real& q, const Real& x,
                 const Real& Delta, const Real& alpha);

// log G(n) for integer n >= 1 via G(n+2) = 1! 2! ... n!
Real log_barnes_G_exact(long n);
// log G(z+1) via the large-z expansion, error O(z^-2)
Real log_barnes_G_asymptotic(const Real& z);

// exact geometry parameters of a concrete spec:
// r N = (M+L)/2 - N, eps = M-L+1; p N = M-N+1/2, q N = L-N-1/2
GeometrySquare square_geometry(const LatticeSpec& spec);
GeometryRect rect_geometry(const LatticeSpec& spec);

// N^2 f2 + N f1 + logN_coeff log N + f0
Real predict_logP(const AsymptoticExpansion& e, long N);

// logs of exact rational quantities at full working precision
Real log_rat(const Rat& v);
BigReal log_rat_big(const Rat& v);
Real log_P_exact(const LatticeSpec& spec, const Rat& x);

// epsilon = 0 Regime III: prediction and exact log of binom(M,N) * P
BigReal e0_regimeIII_prediction(const LatticeSpec& spec, const Rat& x);
BigReal log_wtZ_exact(const LatticeSpec& spec, const Rat& x);

// one-sided finite-difference derivative estimates of f2 on both sides
// of xc; jump[k] = |right - left| for the k-th derivative, k = 1,2,3
struct ThirdOrderReport {
    Real jump1;
    Real jump2;
    Real jump3;
};
ThirdOrderReport third_order_scan(const GeometrySquare& g, const Real& h);
ThirdOrderReport third_order_scan(const GeometryRect& g, const Real& h);

}  // namespace fv
