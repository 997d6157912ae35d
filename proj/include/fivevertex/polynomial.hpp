#pragma once

/*
 * Laurent polynomials over exact rationals, plus the exact linear algebra
 * built on them:
 *
 *   - Poly: dense coefficient vector with a lowest-exponent offset, so the
 *     same class covers ordinary polynomials in u = 1/x and Laurent
 *     expressions in x. Supports the operator x d/dx (acts on x^k as k x^k),
 *     plain differentiation, evaluation at rational points, Taylor shift
 *     x -> x + a, and exponent reversal x -> 1/x.
 *   - divmod / gcd / exact division for ordinary (lo >= 0) polynomials.
 *   - Fraction-free (Bareiss) determinants over integers, over rationals
 *     (after per-row denominator clearing) and over polynomial rings.
 *
 * Everything here is exact; no floating point. Speed is adequate for the
 * matrix sizes that occur (Hankel determinants up to ~32x32).
 */

#include "fivevertex/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fv {

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c0) {
        if (c0 != 0) {
            lo_ = 0;
            c_ = {c0};
        }
    }
    static Poly monomial(const Rat& coeff, long k) {
        Poly p;
        if (coeff != 0) {
            p.lo_ = k;
            p.c_ = {coeff};
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long deg_low() const { return lo_; }                               // 0 if zero
    long deg_high() const { return lo_ + static_cast<long>(c_.size()) - 1; }

    Rat coeff(long k) const {
        long i = k - lo_;
        if (is_zero() || i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::max(a.deg_high(), b.deg_high());
        Poly r;
        r.lo_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(a.lo_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(b.lo_ - lo) + i] += b.c_[i];
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        if (s == 0) return Poly();
        Poly r = p;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // x d/dx: x^k -> k x^k
    Poly xdx() const {
        Poly r = *this;
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] *= Rat(r.lo_ + static_cast<long>(i));
        r.normalize();
        return r;
    }

    // d/dx: x^k -> k x^{k-1}
    Poly deriv() const {
        Poly r = xdx();
        if (!r.is_zero()) r.lo_ -= 1;
        return r;
    }

    // multiply by x^k
    Poly shifted(long k) const {
        Poly r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }

    // x -> 1/x (exponent reversal)
    Poly reversed() const {
        if (is_zero()) return Poly();
        Poly r;
        r.lo_ = -deg_high();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }

    Rat eval(const Rat& x) const {
        if (is_zero()) return Rat(0);
        if (x == 0) {
            if (lo_ < 0) throw std::domain_error("Laurent polynomial at x = 0");
            return lo_ == 0 ? c_[0] : Rat(0);
        }
        // Horner on the dense part, then attach x^lo
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc * rat_pow(x, lo_);
    }

    const std::vector<Rat>& raw_coeffs() const { return c_; }

private:
    void normalize() {
        std::size_t b = 0, e = c_.size();
        while (e > b && c_[e - 1] == 0) --e;
        while (b < e && c_[b] == 0) ++b;
        if (b == e) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (b > 0 || e < c_.size()) {
            c_ = std::vector<Rat>(c_.begin() + static_cast<long>(b),
                                  c_.begin() + static_cast<long>(e));
            lo_ += static_cast<long>(b);
        }
    }

    long lo_ = 0;          // exponent of c_[0]
    std::vector<Rat> c_;   // no leading/trailing zeros; empty means 0
};

// ---- ordinary-polynomial (lo >= 0) helpers --------------------------------

struct DivMod {
    Poly q, r;
};

// polynomial long division; requires b != 0 and both operands with lo >= 0
inline DivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.deg_low() < 0 || b.deg_low() < 0)
        throw std::domain_error("divmod needs ordinary polynomials");
    Poly r = a, q;
    Rat lead_b = b.coeff(b.deg_high());
    while (!r.is_zero() && r.deg_high() >= b.deg_high()) {
        long k = r.deg_high() - b.deg_high();
        Rat f = r.coeff(r.deg_high()) / lead_b;
        Poly t = Poly::monomial(f, k);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

inline Poly poly_exact_div(const Poly& a, const Poly& b) {
    DivMod dm = poly_divmod(a, b);
    if (!dm.r.is_zero()) throw std::logic_error("inexact polynomial division");
    return dm.q;
}

// monic gcd via Euclid; gcd(0,0) = 0
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).r;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rat inv = Rat(1) / a.coeff(a.deg_high());
        a = inv * a;
    }
    return a;
}

// Taylor shift p(x) -> p(x + a), for ordinary polynomials
inline Poly taylor_shift(const Poly& p, const Rat& a) {
    if (p.deg_low() < 0) throw std::domain_error("taylor_shift needs lo >= 0");
    // Horner: p = c_n x^n + ... rebuilt with x replaced by (x + a)
    Poly res;
    Poly xa = Poly::monomial(1, 1) + Poly(a);
    for (long k = p.deg_high(); k >= 0; --k) res = res * xa + Poly(p.coeff(k));
    return res;
}

// ---- determinants ----------------------------------------------------------

// Bareiss fraction-free elimination over integers
inline Int det_int_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// determinant of a rational matrix: clear denominators per row, then Bareiss
inline Rat det_rational(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> zi(n, std::vector<Int>(n));
    Int denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int d = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m[i][j].get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m[i][j] * Rat(d);
            zi[i][j] = v.get_num();  // v is integral by construction
        }
        denom *= d;
    }
    Rat det(det_int_bareiss(std::move(zi)), denom);
    det.canonicalize();
    return det;
}

// determinant over Q[x] (ordinary polynomials), fraction-free with exact
// polynomial division; pivoting on zero polynomials only
inline Poly det_poly_bareiss(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(Rat(1));
    int sign = 1;
    Poly prev(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace fv
