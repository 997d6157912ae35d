#pragma once

/*
 * Exact rational arithmetic helpers on top of GMP's mpq_class:
 * parsing/printing of "num/den" strings, integer powers with negative
 * exponents, factorials, binomials and Pochhammer symbols.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// (z)_m = z(z+1)...(z+m-1), empty product for m = 0
inline Rat pochhammer(const Rat& z, long m) {
    if (m < 0) throw std::domain_error("pochhammer with negative m");
    Rat r = 1;
    Rat f = z;
    for (long i = 0; i < m; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), b.get_den_mpz_t(), n);
    Rat out(pn, pd);
    out.canonicalize();
    return out;
}

// Accepts "3", "-5/7" or a plain decimal like "0.24"
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long frac_len = static_cast<long>(s.size() - dot - 1);
        Rat v(Int(digits), 1);
        Int den = 1;
        for (long i = 0; i < frac_len; ++i) den *= 10;
        v /= Rat(den);
        v.canonicalize();
        return v;
    }
    Rat v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational string: " + s);
    v.canonicalize();
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return v;
}

// canonicalizing constructors; plain mpq_class(n, d) leaves the fraction
// unreduced, which breaks mpq-level comparisons
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}
inline Rat frac(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace fv
