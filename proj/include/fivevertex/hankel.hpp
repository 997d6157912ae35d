#pragma once

/*
 * Hankel-determinant representations of the partition polynomial
 * P_{N,M,L}(1/x): the N x N moment form built on the terminating
 * hypergeometric series 2F1(-L+2,-M+1;2;1/x), and the two (L-N) x (L-N)
 * and N x N forms with (x-1)-power inner functions. All evaluation is
 * exact over rationals; the symbolic operator x d/dx is applied to Laurent
 * monomials term-wise.
 */

#include "fivevertex/model.hpp"
#include "fivevertex/polynomial.hpp"
#include "fivevertex/rational.hpp"

#include <vector>

namespace fv {

// mu(m) = (-L+2)_m (-M+1)_m / ((m+1)! m!), zero for m > min(L-2, M-1)
Rat moment_mu(long m, const LatticeSpec& spec);

// terminating Gauss series sum_m (a)_m (b)_m / ((c)_m m!) z^m as a
// polynomial in z; throws if (c)_m hits zero before termination
Poly hyp2F1_terminating(const Rat& a, const Rat& b, const Rat& c);

// exact determinant of a rational matrix (fraction-free elimination)
Rat hankel_determinant_exact(const std::vector<std::vector<Rat>>& m);

// the three representations, evaluated at a rational point
Rat P_via_pnew(const LatticeSpec& spec, const Rat& x);
Rat P_via_zhom1(const LatticeSpec& spec, const Rat& x);
Rat P_via_zhom2(const LatticeSpec& spec, const Rat& x);

// full polynomial in u = 1/x (symbolic determinant over Q[u])
Poly P_exact_polynomial(const LatticeSpec& spec, long size_cap = 32);

// P(1) = binom(M,N)^{-1} PL(N, L-N, M-N)
Rat P_at_one(const LatticeSpec& spec);

enum class ExpansionPoint { infinity, zero, one };

struct SeriesResult {
    // at infinity: coeffs[j] multiplies x^{-(lead_exp+j)}, lead_exp = 0
    // at zero:     coeffs[j] multiplies x^{lead_exp+j},    lead_exp = -ac
    // at one:      coeffs[j] multiplies (x-1)^{lead_exp+j}, lead_exp = 0
    long lead_exp = 0;
    std::vector<Rat> coeffs;
};

SeriesResult P_series_at(const LatticeSpec& spec, ExpansionPoint point,
                         long k);

}  // namespace fv
