#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fivevertex/hankel.hpp"

using namespace fv;

TEST_CASE("moments of the (1,2,3) box") {
    LatticeSpec spec{1, 2, 3};
    CHECK(moment_mu(0, spec) == Rat(1));
    CHECK(moment_mu(1, spec) == frac(1, 2));
    CHECK(moment_mu(2, spec) == Rat(0));
}

TEST_CASE("terminating Gauss series") {
    // 2F1(-1, b; c; z) = 1 - (b/c) z
    Poly p = hyp2F1_terminating(Rat(-1), Rat(3), Rat(5));
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(1) == frac(-3, 5));
    CHECK(p.deg_high() == 1);
}

TEST_CASE("frozen point values of the three determinant forms") {
    LatticeSpec spec{1, 2, 3};
    CHECK(P_via_pnew(spec, Rat(2)) == frac(5, 4));
    CHECK(P_via_zhom1(spec, Rat(3)) == frac(7, 6));
    CHECK(P_via_zhom2(spec, frac(1, 2)) == Rat(2));
}

TEST_CASE("all methods agree with enumeration") {
    for (auto [N, M, L] : {std::array<long, 3>{2, 4, 5},
                           std::array<long, 3>{3, 5, 5},
                           std::array<long, 3>{2, 5, 4}}) {
        LatticeSpec spec{N, M, L};
        Poly tz = brute_force_tilde_Z(spec);
        for (Rat x : {Rat(2), frac(7, 5), frac(1, 2)}) {
            Rat ref = tz.eval(Rat(1) / x) / Rat(binomial(M, N));
            CHECK(P_via_pnew(spec, x) == ref);
            CHECK(P_via_zhom1(spec, x) == ref);
            CHECK(P_via_zhom2(spec, x) == ref);
        }
    }
}

TEST_CASE("exact polynomial, degree and symmetry") {
    LatticeSpec spec{1, 2, 3};
    Poly P = P_exact_polynomial(spec);
    CHECK(P.coeff(0) == Rat(1));
    CHECK(P.coeff(1) == frac(1, 2));
    CHECK(P.deg_high() == 1);

    // deg P = N min(M-N, L-N-1)
    LatticeSpec big{2, 4, 5};
    CHECK(P_exact_polynomial(big).deg_high() == 4);

    // P_{N,M,L} = P_{N,L-1,M+1}
    for (auto [N, M, L] : {std::array<long, 3>{2, 4, 5},
                           std::array<long, 3>{2, 3, 4},
                           std::array<long, 3>{3, 5, 6}}) {
        LatticeSpec a{N, M, L}, b{N, L - 1, M + 1};
        CHECK(P_exact_polynomial(a) == P_exact_polynomial(b));
    }
}

TEST_CASE("P at 1 via the box product") {
    LatticeSpec spec{2, 4, 5};
    CHECK(P_at_one(spec) == frac(25, 3));
    CHECK(P_exact_polynomial(spec).eval(Rat(1)) == frac(25, 3));

    // degenerate L = N box has P == 1
    LatticeSpec deg{2, 4, 2};
    CHECK(P_at_one(deg) == Rat(1));
    CHECK(P_via_pnew(deg, Rat(2)) == Rat(1));
}

TEST_CASE("series at zero starts at x^{-ac}") {
    LatticeSpec spec{2, 4, 5};  // a = N = 2, c = min(L-N-1, M-N) = 2
    SeriesResult s = P_series_at(spec, ExpansionPoint::zero, 2);
    CHECK(s.lead_exp == -4);
    REQUIRE(s.coeffs.size() >= 1);
    CHECK(s.coeffs[0] != Rat(0));
}

TEST_CASE("series at infinity and at one match the polynomial") {
    LatticeSpec spec{2, 4, 5};
    Poly P = P_exact_polynomial(spec);
    SeriesResult si = P_series_at(spec, ExpansionPoint::infinity, 3);
    // P(1/x) as a series in 1/x is literally the polynomial in u
    for (std::size_t j = 0; j < si.coeffs.size(); ++j)
        CHECK(si.coeffs[j] == P.coeff(static_cast<long>(j)));

    SeriesResult s1 = P_series_at(spec, ExpansionPoint::one, 1);
    CHECK(s1.coeffs[0] == P.eval(Rat(1)));
}
