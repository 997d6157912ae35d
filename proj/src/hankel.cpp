/*
 * Exact evaluation of the Hankel-determinant representations.
 *
 * The moment form: entries sum_m mu(m) m^{i+j-2} z^m with z = 1/x. The
 * original entries carry (-m)^{i+j-2}; rescaling row i by (-1)^i and
 * column j by (-1)^j leaves the determinant unchanged, so the positive
 * powers are used throughout (one shared power table per matrix).
 *
 * The (x-1)-power forms are handled by tracking pairs (p, k) representing
 * p(x)/(x-1)^k, on which x d/dx acts as (p, k) -> (x(p'(x-1) - k p), k+1);
 * the (x-1) powers then cancel exactly against the prefactors.
 */

#include "fivevertex/hankel.hpp"

#include "fivevertex/ratfun.hpp"

#include <stdexcept>

namespace fv {

Rat moment_mu(long m, const LatticeSpec& spec) {
    if (m < 0) throw std::domain_error("negative moment index");
    return pochhammer(Rat(-spec.L + 2), m) * pochhammer(Rat(-spec.M + 1), m) /
           Rat(factorial(m + 1) * factorial(m));
}

Poly hyp2F1_terminating(const Rat& a, const Rat& b, const Rat& c) {
    long stop = -1;
    if (a <= 0 && a.get_den() == 1) stop = -a.get_num().get_si();
    if (b <= 0 && b.get_den() == 1) {
        long s = -b.get_num().get_si();
        if (stop < 0 || s < stop) stop = s;
    }
    if (stop < 0)
        throw std::domain_error("2F1 series does not terminate");
    Poly p;
    Rat term = 1;
    for (long m = 0; m <= stop; ++m) {
        p = p + Poly::monomial(term, m);
        Rat cm = c + Rat(m);
        if (cm == 0) {
            if (m < stop)
                throw std::domain_error("2F1 denominator vanishes before termination");
            break;
        }
        term *= (a + Rat(m)) * (b + Rat(m)) / (cm * Rat(m + 1));
    }
    return p;
}

Rat hankel_determinant_exact(const std::vector<std::vector<Rat>>& m) {
    return det_rational(m);
}

namespace {

void check_spec(const LatticeSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid lattice spec");
}

// prefactor of the moment representation:
// N! prod_j (L-N-1+j)!(M-N+j)! / ((L-2)!(M-1)!)
Rat pnew_prefactor(const LatticeSpec& spec) {
    const long N = spec.N, M = spec.M, L = spec.L;
    Rat pref = Rat(factorial(N));
    Int dj = factorial(L - 2) * factorial(M - 1);
    for (long j = 0; j < N; ++j)
        pref *= frac(factorial(L - N - 1 + j) * factorial(M - N + j), dj);
    return pref;
}

}  // namespace

Rat P_via_pnew(const LatticeSpec& spec, const Rat& x) {
    check_spec(spec);
    if (x == 0) throw std::domain_error("x = 0: use the Laurent leading form");
    const long N = spec.N, M = spec.M, L = spec.L;
    if (N == 0 || L == N) return 1;
    const long mmax = std::min(L - 2, M - 1);
    const Rat z = Rat(1) / x;
    // shared table m^k z^m weighted by mu(m)
    std::vector<Rat> mu(static_cast<std::size_t>(mmax + 1));
    std::vector<Rat> zp(static_cast<std::size_t>(mmax + 1));
    for (long m = 0; m <= mmax; ++m) {
        mu[static_cast<std::size_t>(m)] = moment_mu(m, spec);
        zp[static_cast<std::size_t>(m)] = rat_pow(z, m);
    }
    std::vector<std::vector<Rat>> h(static_cast<std::size_t>(N),
                                    std::vector<Rat>(static_cast<std::size_t>(N)));
    for (long s = 0; s <= 2 * N - 2; ++s) {
        Rat e = 0;
        for (long m = 0; m <= mmax; ++m) {
            Rat mp = (s == 0) ? Rat(1) : rat_pow(Rat(m), s);
            e += mu[static_cast<std::size_t>(m)] * mp *
                 zp[static_cast<std::size_t>(m)];
        }
        for (long i = 0; i < N; ++i) {
            long j = s - i;
            if (j >= 0 && j < N)
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }
    return pnew_prefactor(spec) * rat_pow(x, N * (N - 1) / 2) * det_rational(h);
}

Poly P_exact_polynomial(const LatticeSpec& spec, long size_cap) {
    check_spec(spec);
    const long N = spec.N, M = spec.M, L = spec.L;
    if (N == 0 || L == N) return Poly(Rat(1));
    if (N > size_cap)
        throw std::runtime_error("symbolic determinant size exceeds cap");
    const long mmax = std::min(L - 2, M - 1);
    std::vector<Rat> mu(static_cast<std::size_t>(mmax + 1));
    for (long m = 0; m <= mmax; ++m)
        mu[static_cast<std::size_t>(m)] = moment_mu(m, spec);
    // entries are polynomials in u = 1/x
    std::vector<Poly> band(static_cast<std::size_t>(2 * N - 1));
    for (long s = 0; s <= 2 * N - 2; ++s) {
        Poly e;
        for (long m = 0; m <= mmax; ++m) {
            Rat mp = (s == 0) ? Rat(1) : rat_pow(Rat(m), s);
            e = e + Poly::monomial(mu[static_cast<std::size_t>(m)] * mp, m);
        }
        band[static_cast<std::size_t>(s)] = e;
    }
    std::vector<std::vector<Poly>> h(static_cast<std::size_t>(N),
                                     std::vector<Poly>(static_cast<std::size_t>(N)));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                band[static_cast<std::size_t>(i + j)];
    Poly det = det_poly_bareiss(std::move(h));
    // x^{N(N-1)/2} = u^{-N(N-1)/2}
    Poly p = pnew_prefactor(spec) * det.shifted(-N * (N - 1) / 2);
    if (p.deg_low() < 0 || p.coeff(0) != 1)
        throw std::logic_error("P(0) != 1: representation inconsistency");
    return p;
}

Rat P_via_zhom1(const LatticeSpec& spec, const Rat& x) {
    check_spec(spec);
    if (x == 0 || x == 1)
        throw std::domain_error("zhom1 is singular at x in {0,1}");
    const long N = spec.N, M = spec.M, L = spec.L;
    if (N == 0 || L == N) return 1;
    const long n = L - N;
    // inner function g(x) = (x-1)^{M+L-2N-1} 2F1(-N, L-N-1; -M; x)
    Poly f = hyp2F1_terminating(Rat(-N), Rat(L - N - 1), Rat(-M));
    Poly pw(Rat(1));
    Poly xm1 = Poly::monomial(1, 1) - Poly(Rat(1));
    for (long j = 0; j < M + L - 2 * N - 1; ++j) pw = pw * xm1;
    Poly g = f * pw;
    // derivatives D^s g with D = x d/dx
    std::vector<Rat> dval(static_cast<std::size_t>(2 * n - 1));
    Poly cur = g;
    for (long s = 0; s <= 2 * n - 2; ++s) {
        dval[static_cast<std::size_t>(s)] = cur.eval(x);
        cur = cur.xdx();
    }
    std::vector<std::vector<Rat>> h(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                dval[static_cast<std::size_t>(i + j)];
    // the printed prefactor reproduces binom(M,N)*P (the weighted partition
    // function); divide by the binomial, validated against the enumeration
    // oracle
    Rat pref = frac(Int(1), binomial(M, N));
    Int dj = factorial(M - N) * factorial(M + L - N - 1);
    for (long j = 0; j < n; ++j)
        pref *= frac(factorial(M) * factorial(M + j), dj * factorial(N + j));
    Rat sign = (((n * (n - 1) / 2) % 2) == 0) ? 1 : -1;
    return sign * pref * det_rational(h) /
           (rat_pow(x - 1, (L - N) * (M - N)) *
            rat_pow(x, (L + N) * (L - N - 1) / 2));
}

Rat P_via_zhom2(const LatticeSpec& spec, const Rat& x) {
    check_spec(spec);
    if (x == 0 || x == 1)
        throw std::domain_error("zhom2 is singular at x in {0,1}");
    const long N = spec.N, M = spec.M, L = spec.L;
    if (N == 0 || L == N) return 1;
    // inner function (x-1)^{-K} q(x) with K = M+L-2N+1 and
    // q(x) = 2F1(-L+N+1, -L+N; -L-M+2N; 1-x); D acts on the pair (p, k)
    // as (p, k) -> (x(p'(x-1) - k p), k+1). Row/column extraction of the
    // (x-1) powers cancels the prefactor's (x-1)^{N(M+L-N)} exactly, so
    // only det[p_{i+j-2}(x)] remains.
    const long K = M + L - 2 * N + 1;
    Poly fw = hyp2F1_terminating(Rat(-L + N + 1), Rat(-L + N),
                                 Rat(-L - M + 2 * N));
    // substitute w = 1 - x by Horner
    Poly q;
    Poly lin = Poly(Rat(1)) - Poly::monomial(1, 1);
    for (long k = fw.deg_high(); k >= 0; --k) q = q * lin + Poly(fw.coeff(k));
    Poly xm1 = Poly::monomial(1, 1) - Poly(Rat(1));
    Poly xp = Poly::monomial(1, 1);
    std::vector<Rat> dval(static_cast<std::size_t>(2 * N - 1));
    Poly p = q;
    long k = K;
    for (long s = 0; s <= 2 * N - 2; ++s) {
        dval[static_cast<std::size_t>(s)] = p.eval(x);
        p = xp * (p.deriv() * xm1 - Rat(k) * p);
        ++k;
    }
    std::vector<std::vector<Rat>> h(static_cast<std::size_t>(N),
                                    std::vector<Rat>(static_cast<std::size_t>(N)));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                dval[static_cast<std::size_t>(i + j)];
    // same normalization slip as in the (L-N)-sized form: the printed
    // prefactor yields binom(M,N)*P, so divide by the binomial
    Rat pref = frac(Int(1), binomial(M, N));
    for (long j = 0; j < N; ++j)
        pref *= frac(factorial(L + M - 2 * N),
                     factorial(L - N + j) * factorial(M - N + j));
    return pref * det_rational(h) /
           rat_pow(x, N * (L - 1) - N * (N + 1) / 2);
}

Rat P_at_one(const LatticeSpec& spec) {
    check_spec(spec);
    if (spec.L == spec.N) return 1;  // P == 1 by convention
    return frac(macmahon_PL(spec.N, spec.L - spec.N, spec.M - spec.N),
                binomial(spec.M, spec.N));
}

SeriesResult P_series_at(const LatticeSpec& spec, ExpansionPoint point,
                         long k) {
    Poly pu = P_exact_polynomial(spec);
    SeriesResult res;
    res.coeffs.resize(static_cast<std::size_t>(k), Rat(0));
    switch (point) {
        case ExpansionPoint::infinity:
            // u-coefficients are directly the 1/x coefficients
            res.lead_exp = 0;
            for (long j = 0; j < k; ++j)
                res.coeffs[static_cast<std::size_t>(j)] = pu.coeff(j);
            return res;
        case ExpansionPoint::zero: {
            // P(1/x) = x^{-d} (a_d + a_{d-1} x + ...), d = deg_u P
            Poly px = pu.reversed();
            res.lead_exp = px.is_zero() ? 0 : px.deg_low();
            for (long j = 0; j < k; ++j)
                res.coeffs[static_cast<std::size_t>(j)] =
                    px.coeff(res.lead_exp + j);
            return res;
        }
        case ExpansionPoint::one: {
            RatFun f(pu.reversed(), Poly(Rat(1)));
            res.lead_exp = 0;
            res.coeffs = f.laurent_at(Rat(1), 0, k - 1);
            return res;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace fv
