#pragma once

/*
 * Rational functions num/den over exact rationals, with just enough calculus
 * for the sigma-form work: arithmetic, differentiation, reduction by gcd,
 * evaluation, and exact Laurent expansions around finite points and infinity.
 */

#include "fivevertex/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace fv {

class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    explicit RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        // clear Laurent offsets so both parts are ordinary polynomials
        long s = std::min(num.is_zero() ? 0 : num.deg_low(), den.deg_low());
        if (s < 0) {
            num = num.shifted(-s);
            den = den.shifted(-s);
        }
        num_ = std::move(num);
        den_ = std::move(den);
        reduce();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const { return RatFun(-num_, den_); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun deriv() const {
        return RatFun(num_.deriv() * den_ - num_ * den_.deriv(), den_ * den_);
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("pole of rational function");
        return num_.eval(x) / d;
    }

    // coefficients of (x-a)^j for j = from_exp .. to_exp in the Laurent
    // expansion around a finite point a
    std::vector<Rat> laurent_at(const Rat& a, long from_exp, long to_exp) const {
        Poly n = taylor_shift(num_, a);
        Poly d = taylor_shift(den_, a);
        return laurent_core(n, d, from_exp, to_exp);
    }

    // coefficients of x^{-j} for j = from_exp .. to_exp around infinity
    // (from_exp may be negative to capture polynomial growth)
    std::vector<Rat> laurent_at_infinity(long from_exp, long to_exp) const {
        // substitute x = 1/u and expand at u = 0
        Poly n = num_.reversed();
        Poly d = den_.reversed();
        long s = std::min(n.is_zero() ? 0 : n.deg_low(), d.deg_low());
        return laurent_core(n.shifted(-s), d.shifted(-s), from_exp, to_exp);
    }

private:
    void reduce() {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_zero() && g.deg_high() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        // normalize so the denominator's leading coefficient is 1
        if (!den_.is_zero()) {
            Rat lead = den_.coeff(den_.deg_high());
            if (lead != 1) {
                Rat inv = Rat(1) / lead;
                num_ = inv * num_;
                den_ = inv * den_;
            }
        }
    }

    // series of n/d at 0 where n, d are ordinary polynomials, d != 0;
    // the quotient may have a pole (n, d can share powers of x)
    static std::vector<Rat> laurent_core(Poly n, Poly d, long from_exp,
                                         long to_exp) {
        if (to_exp < from_exp) return {};
        std::vector<Rat> out(static_cast<std::size_t>(to_exp - from_exp + 1),
                             Rat(0));
        if (n.is_zero()) return out;
        long a = n.deg_low(), b = d.deg_low();
        n = n.shifted(-a);
        d = d.shifted(-b);
        long lead = a - b;  // exponent of the first series term
        if (d.coeff(0) == 0) throw std::logic_error("series division by x^k");
        // power-series long division, terms lead, lead+1, ..., to_exp
        long terms = to_exp - lead + 1;
        if (terms <= 0) return out;
        std::vector<Rat> nc(static_cast<std::size_t>(terms), Rat(0));
        std::vector<Rat> dc(static_cast<std::size_t>(terms), Rat(0));
        for (long j = 0; j < terms; ++j) {
            nc[static_cast<std::size_t>(j)] = n.coeff(j);
            dc[static_cast<std::size_t>(j)] = d.coeff(j);
        }
        std::vector<Rat> q(static_cast<std::size_t>(terms), Rat(0));
        for (long j = 0; j < terms; ++j) {
            Rat acc = nc[static_cast<std::size_t>(j)];
            for (long i = 1; i <= j; ++i)
                acc -= dc[static_cast<std::size_t>(i)] *
                       q[static_cast<std::size_t>(j - i)];
            q[static_cast<std::size_t>(j)] = acc / dc[0];
        }
        for (long j = 0; j < terms; ++j) {
            long e = lead + j;
            if (e >= from_exp && e <= to_exp)
                out[static_cast<std::size_t>(e - from_exp)] =
                    q[static_cast<std::size_t>(j)];
        }
        return out;
    }

    Poly num_, den_;
};

}  // namespace fv
