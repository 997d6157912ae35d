/*
 * Thermodynamic-limit formulas. The square-domain forms are implemented
 * directly from the three-regime closed expressions; the rectangle-domain
 * Regime II leading term is implemented in the half-integer variables
 * u = q + 1/2, v = p + 1/2 together with its integration constant, which
 * avoids an index slip present in the compact display of the same result.
 */

#include "fivevertex/thermo.hpp"

#include "fivevertex/hankel.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace fv {

namespace {

// construct an arbitrary-precision float from an exact rational
template <typename R>
R from_rat(const Rat& v) {
    return R(v.get_num().get_str()) / R(v.get_den().get_str());
}

// log of a (possibly huge) positive integer: keep a mantissa-sized head
// and account for the discarded low bits as a power of two
template <typename R>
R log_int(const Int& n) {
    if (n <= 0) throw std::domain_error("log of non-positive integer");
    const long keep = std::numeric_limits<R>::digits + 64;
    long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    if (bits <= keep) return log(R(n.get_str()));
    Int head;
    mpz_tdiv_q_2exp(head.get_mpz_t(), n.get_mpz_t(),
                    static_cast<unsigned long>(bits - keep));
    return log(R(head.get_str())) + R(bits - keep) * log(R(2));
}

template <typename R>
R log_rat_t(const Rat& v) {
    if (v <= 0) throw std::domain_error("log of non-positive rational");
    return log_int<R>(v.get_num()) - log_int<R>(v.get_den());
}

// Stirling with the 1/(12n) correction; enough for O(1/N) residual tests
template <typename R>
R log_factorial_asymptotic(long n) {
    R nn(n);
    return (nn + R(1) / 2) * log(nn) - nn +
           R("0.91893853320467274178032973640561763986139747363778") +
           1 / (R(12) * nn);
}

}  // namespace

const Real& zeta_prime_minus_one() {
    static const Real v(
        "-0.16542114370045092921391966024278064276403638033520");
    return v;
}

const Real& zeta_prime_minus_one_printed() {
    // the decimal that circulates in print, with two digits transposed
    static const Real v("-0.165142");
    return v;
}

const Real& log_sqrt_2pi() {
    static const Real v(
        "0.91893853320467274178032973640561763986139747363778");
    return v;
}

Real critical_x(const GeometrySquare& g) {
    Real t = 2 * g.r + 1;
    return t * t;
}

Real critical_x(const GeometryRect& g) {
    Real t = sqrt((g.p + 1) * (g.q + 1)) + sqrt(g.p * g.q);
    return t * t;
}

Regime classify_regime(const GeometrySquare& g, const Real& x) {
    Real xc = critical_x(g);
    if (x > xc) return Regime::I;
    if (x > 1 / xc) return Regime::II;
    return Regime::III;
}

Regime classify_regime(const GeometryRect& g, const Real& x) {
    return x > critical_x(g) ? Regime::I : Regime::II;
}

AsymptoticExpansion f_terms_square(const GeometrySquare& g, const Real& x,
                                   Regime rg) {
    const Real r = g.r;
    const Real eps2 = Real(g.eps) * Real(g.eps);
    const Real abse = g.eps < 0 ? Real(-g.eps) : Real(g.eps);
    const Real xc = critical_x(g);
    const Real sxc = 2 * r + 1;
    AsymptoticExpansion e;
    e.regime = rg;
    switch (rg) {
        case Regime::I: {
            e.logN_coeff = 0;
            e.f2 = r * r * log(x / (x - 1));
            Real sx = sqrt(x);
            e.f1 = sxc * log((sqrt(xc * (x - 1)) + sqrt(x - xc)) /
                             ((1 + sxc) * sx)) -
                   log((sqrt(x - 1) + sqrt(x - xc)) / (2 * sx));
            if (x == xc) {
                e.boundary_divergence = true;  // log(x/(x-xc)) blows up
                e.f0 = -eps2 / 4 * log(x / (x - 1));
            } else {
                e.f0 = log(x / (x - xc)) / 4 - eps2 / 4 * log(x / (x - 1));
            }
            break;
        }
        case Regime::II: {
            e.logN_coeff = Real(5) / 12;
            Real sx = sqrt(x);
            e.f2 = sxc * log((1 + sx) / (1 + sxc)) -
                   (r + Real(1) / 4) * log(x / xc) +
                   r * r * log(xc / (xc - 1));
            e.f1 = log(2 * sx / (sxc + 1)) + r * log((sxc - 1) / (sxc + 1));
            Real sxcx = sqrt(xc * x);
            if (x == xc || sxcx == 1) {
                e.boundary_divergence = true;
                e.f0 = -log(sxc * (xc - 1)) / 12 + zeta_prime_minus_one() +
                       log_sqrt_2pi();
            } else {
                Real d = sxc - sx;
                e.f0 = log(d * d * d * sx / (sxcx - 1)) / 8 -
                       log(sxc * (xc - 1)) / 12 +
                       eps2 / 2 * log((sxcx - 1) / (sqrt(xc - 1) * sx)) +
                       zeta_prime_minus_one() + log_sqrt_2pi();
            }
            break;
        }
        case Regime::III: {
            e.logN_coeff = (1 - eps2) / 2;
            if (x == 0) {
                e.boundary_divergence = true;  // -r log x and f1 blow up
                e.f0 = (1 - abse) * log_sqrt_2pi() +
                       log_barnes_G_exact(1 + (g.eps < 0 ? -g.eps : g.eps));
                break;
            }
            e.f2 = r * r * log(1 / (1 - x)) - r * log(x);
            Real sx = sqrt(x);
            Real s1mx = sqrt(1 - x);
            Real s1mxcx = sqrt(1 - xc * x);
            e.f1 = abse * sxc * log((sxc * s1mx + s1mxcx) / sqrt(xc - 1)) -
                   abse * log((s1mx + s1mxcx) / (sqrt(xc - 1) * sx)) +
                   log(2 * sx / (sxc + 1)) +
                   r * log((sxc - 1) / (sxc + 1));
            Real g_abse =
                log_barnes_G_exact(1 + (g.eps < 0 ? -g.eps : g.eps));
            if (xc * x == 1 && g.eps != 0) {
                e.boundary_divergence = true;
                e.f0 = log(1 - x) / 4 + (1 - abse) * log_sqrt_2pi() + g_abse;
            } else {
                e.f0 = log(1 - x) / 4 - eps2 / 4 * log(1 - xc * x) +
                       (1 - abse) * log_sqrt_2pi() + g_abse;
            }
            break;
        }
    }
    return e;
}

AsymptoticExpansion f_terms_square(const GeometrySquare& g, const Real& x) {
    return f_terms_square(g, x, classify_regime(g, x));
}

Real quartic_x_of_y(const GeometryRect& g, const Real& y) {
    const Real p = g.p, q = g.q;
    Real num = (y + 1) * (y + 1) * (y - p + q) * (y + p - q);
    Real den = ((2 * p + 1) * y + p - q) * ((2 * q + 1) * y + q - p);
    return num / den;
}

Real solve_quartic_branch(const GeometryRect& g, const Real& x) {
    Real xc = critical_x(g);
    Real tol = Real("1e-45");
    if (x < -tol || x > xc * (1 + tol))
        throw std::domain_error("x outside [0, xc] for the quartic branch");
    Real lo = g.p > g.q ? g.p - g.q : g.q - g.p;
    if (x <= 0) return lo;
    Real hi = xc - 1;
    // x(y) is monotone increasing on [|p-q|, xc-1]
    for (int it = 0; it < 220; ++it) {
        Real mid = (lo + hi) / 2;
        if (quartic_x_of_y(g, mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

AsymptoticExpansion f_terms_rect(const GeometryRect& g, const Real& x,
                                 Regime rg) {
    const Real p = g.p, q = g.q;
    const Real u = q + Real(1) / 2, v = p + Real(1) / 2;
    AsymptoticExpansion e;
    e.regime = rg;
    if (rg == Regime::I) {
        e.logN_coeff = 0;
        e.f2 = p * q * log(x / (x - 1));
        Real s = x * x - 2 * (2 * p * q + p + q + 1) * x +
                 (p + q + 1) * (p + q + 1);
        if (s < 0) s = 0;
        Real ss = sqrt(s);
        Real sxx1 = sqrt(x * (x - 1));
        e.f1 = (2 * p + 1) / 2 *
                   log(((2 * p + 1) * x - p - q - 1 + ss) /
                       (2 * (p + 1) * sxx1)) +
               (2 * q + 1) / 2 *
                   log(((2 * q + 1) * x - p - q - 1 + ss) /
                       (2 * (q + 1) * sxx1)) -
               log((x - 2 * p * q - p - q - 1 + ss) / (2 * x)) / 2;
        if (s == 0) {
            e.boundary_divergence = true;  // log(x(x-1)/s)
        } else {
            e.f0 = log(x * (x - 1) / s) / 4;
        }
        return e;
    }
    // Regime II through the quartic branch
    e.logN_coeff = Real(5) / 12;
    if (x <= 0) {
        e.boundary_divergence = true;
        return e;
    }
    Real y = solve_quartic_branch(g, x);
    Real C2 = -(2 * v + 1) * (2 * v + 1) / 8 * log(2 * v + 1) -
              (2 * v - 1) * (2 * v - 1) / 8 * log(2 * v - 1) -
              (2 * u + 1) * (2 * u + 1) / 8 * log(2 * u + 1) -
              (2 * u - 1) * (2 * u - 1) / 8 * log(2 * u - 1);
    e.f2 = -(u + v - 1) * (u + v - 1) / 2 * log(y) -
           ((u - v) * (u - v) + 2 * v + 2 * u - 1) / 2 * log(y + 1) +
           (4 * u * u - 1) / 4 * log(2 * u * y + u - v) +
           (4 * v * v - 1) / 4 * log(2 * v * y + v - u) -
           (2 * u - 1) / 2 * log(y + u - v) -
           (2 * v - 1) / 2 * log(y + v - u) +
           (u + v) * log(y + u + v + 1) + C2;
    e.f1 = log(x) / 2 -
           ((p + 1) * log(p + 1) + (q + 1) * log(q + 1) - p * log(p) -
            q * log(q)) /
               2;
    Real pq2 = (p - q) * (p - q);
    // this quadratic is the one whose root is y(xc); it is negative on the
    // interior of the branch, and the log is to be read of its modulus
    Real quad = abs(y * y - 2 * (2 * p * q + p + q) * y + pq2);
    Real cub = abs((2 * p + 1) * (2 * q + 1) * y * y * y -
                   pq2 * (3 * y * y + 3 * y - (p + q + 1) * (p + q + 1) + 1));
    // the cubic enters with a minus sign: the opposite sign fails the
    // p = q reduction by exactly twice the cubic term
    e.f0 = (log(y) + log(y + 1) - 2 * log((2 * p + 1) * y + p - q) -
            2 * log((2 * q + 1) * y + q - p) + 3 * log(quad) -
            log(cub) / 3) /
               8 -
           log(16 * p * (p + 1) * q * (q + 1)) / 24 +
           zeta_prime_minus_one() + log_sqrt_2pi();
    return e;
}

AsymptoticExpansion f_terms_rect(const GeometryRect& g, const Real& x) {
    return f_terms_rect(g, x, classify_regime(g, x));
}

Real sigma2_leading(const GeometrySquare& g, const Real& x) {
    Real w = g.r + Real(1) / 2;
    switch (classify_regime(g, x)) {
        case Regime::I:
            return -x / 4 - w * w / 2 + Real(1) / 8;
        case Regime::II:
            return -w * sqrt(x) + w * w / 2 + Real(1) / 8;
        case Regime::III:
            return -w * w * x + w * w / 2 - Real(1) / 8;
    }
    throw std::logic_error("unreachable");
}

Real sigma2_leading(const GeometryRect& g, const Real& x) {
    const Real u = g.q + Real(1) / 2, v = g.p + Real(1) / 2;
    if (classify_regime(g, x) == Regime::I)
        return -x / 4 - u * v / 2 + Real(1) / 8;
    Real y = solve_quartic_branch(g, x);
    return v * u / 2 - (v * v + u * u) / (16 * v * u) - Real(1) / 4 -
           y / 2 +
           (4 * v * v - 1) * (u * u - v * v) /
               (16 * v * (2 * v * y + v - u)) +
           (4 * u * u - 1) * (v * v - u * u) /
               (16 * u * (2 * u * y + u - v));
}

Real wtZ_expansion(const GeometrySquare& g, const Real& x, long N) {
    AsymptoticExpansion e = f_terms_square(g, x);
    Real sxc = 2 * g.r + 1;
    Real ratio = (sxc - 1) / (sxc + 1);
    Real F1 = e.f1 - log(2 / (sxc + 1)) - g.r * log(ratio);
    Real F0 = e.f0 - log_sqrt_2pi() - Real(g.eps) / 2 * log(ratio);
    Real kappa = e.logN_coeff - Real(1) / 2;
    Real nn(N);
    return nn * nn * e.f2 + nn * F1 + kappa * log(nn) + F0;
}

Real wtZ_expansion(const GeometryRect& g, const Real& x, long N, long M) {
    AsymptoticExpansion e = f_terms_rect(g, x);
    Real lb = log_factorial_asymptotic<Real>(M) -
              log_factorial_asymptotic<Real>(N) -
              log_factorial_asymptotic<Real>(M - N);
    return predict_logP(e, N) + lb;
}

Real free_energy(const Real& p, const Real& q, const Real& x,
                 const Real& Delta, const Real& alpha) {
    if (alpha <= 0) throw std::domain_error("alpha must be positive");
    if (Delta == 0 || (x - 1) / Delta <= 0)
        throw std::domain_error("(x-1)/Delta must be positive");
    Real f2;
    if (p == q) {
        GeometrySquare g{p, 0};
        f2 = f_terms_square(g, x).f2;
    } else {
        GeometryRect g{p, q};
        f2 = f_terms_rect(g, x).f2;
    }
    Real area = (p + 1) * (q + 1);
    return -f2 / area - p * q / area * log((x - 1) / Delta) +
           (Real(1) / 2 - 1 / area) * log(x) -
           (q - 1) / (q + 1) * log(alpha);
}

Real log_barnes_G_exact(long n) {
    if (n < 1) throw std::domain_error("Barnes G needs n >= 1");
    // log G(n) = sum_{k=1}^{n-2} (n-1-k) log k
    Real s = 0;
    for (long k = 2; k <= n - 2; ++k) s += Real(n - 1 - k) * log(Real(k));
    return s;
}

Real log_barnes_G_asymptotic(const Real& z) {
    return z * z / 2 * log(z) - 3 * z * z / 4 + log_sqrt_2pi() * z -
           log(z) / 12 + zeta_prime_minus_one();
}

GeometrySquare square_geometry(const LatticeSpec& spec) {
    GeometrySquare g;
    g.r = from_rat<Real>(frac(spec.M + spec.L - 2 * spec.N, 2 * spec.N));
    g.eps = spec.M - spec.L + 1;
    return g;
}

GeometryRect rect_geometry(const LatticeSpec& spec) {
    GeometryRect g;
    g.p = from_rat<Real>(frac(2 * (spec.M - spec.N) + 1, 2 * spec.N));
    g.q = from_rat<Real>(frac(2 * (spec.L - spec.N) - 1, 2 * spec.N));
    return g;
}

Real predict_logP(const AsymptoticExpansion& e, long N) {
    Real nn(N);
    return nn * nn * e.f2 + nn * e.f1 + e.logN_coeff * log(nn) + e.f0;
}

Real log_rat(const Rat& v) { return log_rat_t<Real>(v); }

BigReal log_rat_big(const Rat& v) { return log_rat_t<BigReal>(v); }

Real log_P_exact(const LatticeSpec& spec, const Rat& x) {
    return log_rat(P_via_pnew(spec, x));
}

BigReal log_wtZ_exact(const LatticeSpec& spec, const Rat& x) {
    return log_rat_big(P_via_pnew(spec, x)) +
           log_int<BigReal>(binomial(spec.M, spec.N));
}

BigReal e0_regimeIII_prediction(const LatticeSpec& spec, const Rat& x) {
    if (spec.M != spec.L - 1)
        throw std::domain_error("epsilon = 0 requires M = L-1");
    BigReal r =
        from_rat<BigReal>(frac(spec.M + spec.L - 2 * spec.N, 2 * spec.N));
    BigReal xc = (2 * r + 1) * (2 * r + 1);
    BigReal xx = from_rat<BigReal>(x);
    if (xx < 0 || xx * xc >= 1)
        throw std::domain_error("x outside Regime III");
    BigReal f2 = -r * r * log(1 - xx) - r * log(xx);
    BigReal nn(spec.N);
    return nn * nn * f2 + nn * log(xx) / 2 + log(1 - xx) / 4;
}

namespace {

// one-sided O(h^2) derivative estimates from both sides of xc; f2 only,
// since f0 diverges at the boundary
template <typename F>
ThirdOrderReport jump_scan(const F& f2_left, const F& f2_right,
                           const Real& xc, const Real& h) {
    Real fr[5], fl[5];
    for (int k = 0; k < 5; ++k) {
        fr[k] = f2_right(xc + k * h);
        fl[k] = f2_left(xc - k * h);
    }
    Real d1r = (-3 * fr[0] + 4 * fr[1] - fr[2]) / (2 * h);
    Real d2r = (2 * fr[0] - 5 * fr[1] + 4 * fr[2] - fr[3]) / (h * h);
    Real d3r = (-5 * fr[0] + 18 * fr[1] - 24 * fr[2] + 14 * fr[3] -
                3 * fr[4]) /
               (2 * h * h * h);
    Real d1l = (3 * fl[0] - 4 * fl[1] + fl[2]) / (2 * h);
    Real d2l = (2 * fl[0] - 5 * fl[1] + 4 * fl[2] - fl[3]) / (h * h);
    Real d3l = (5 * fl[0] - 18 * fl[1] + 24 * fl[2] - 14 * fl[3] +
                3 * fl[4]) /
               (2 * h * h * h);
    return {abs(d1r - d1l), abs(d2r - d2l), abs(d3r - d3l)};
}

}  // namespace

ThirdOrderReport third_order_scan(const GeometrySquare& g, const Real& h) {
    Real xc = critical_x(g);
    auto left = [&](const Real& x) {
        return f_terms_square(g, x, Regime::II).f2;
    };
    auto right = [&](const Real& x) {
        return f_terms_square(g, x, Regime::I).f2;
    };
    return jump_scan<std::function<Real(const Real&)>>(left, right, xc, h);
}

ThirdOrderReport third_order_scan(const GeometryRect& g, const Real& h) {
    Real xc = critical_x(g);
    auto left = [&](const Real& x) {
        return f_terms_rect(g, x, Regime::II).f2;
    };
    auto right = [&](const Real& x) {
        return f_terms_rect(g, x, Regime::I).f2;
    };
    return jump_scan<std::function<Real(const Real&)>>(left, right, xc, h);
}

}  // namespace fv
