#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "fivevertex/model.hpp"

using namespace fv;

TEST_CASE("enumeration of the (1,2,3) box") {
    LatticeSpec spec{1, 2, 3};
    long count = enumerate_configurations(spec, [](const Configuration&) {});
    CHECK(count == 3);

    // tilde Z = sum_configs u^{l5 - N} = 2 + u
    Poly tz = brute_force_tilde_Z(spec);
    CHECK(tz.deg_low() == 0);
    CHECK(tz.deg_high() == 1);
    CHECK(tz.coeff(0) == Rat(2));
    CHECK(tz.coeff(1) == Rat(1));
}

TEST_CASE("vertex count bookkeeping") {
    LatticeSpec spec{2, 4, 5};
    enumerate_configurations(spec, [&](const Configuration& cfg) {
        VertexCounts vc = vertex_counts(cfg, spec);
        CHECK(vc.l1 + vc.l3 + vc.l4 + vc.l5 + vc.l6 == spec.M * spec.L);
        CHECK(vc.l5 == vc.l6);     // every horizontal run has two turn ends
        CHECK(vc.l5 >= spec.N);    // at least one run per path
        CHECK(vc.l5 == turn_pairs(cfg));
    });
}

TEST_CASE("boundary slices are pinned") {
    LatticeSpec spec{2, 3, 4};
    enumerate_configurations(spec, [&](const Configuration& cfg) {
        REQUIRE(cfg.slices.size() == static_cast<std::size_t>(spec.M + 1));
        CHECK(cfg.slices.front() == std::vector<int>{1, 2});
        CHECK(cfg.slices.back() == std::vector<int>{3, 4});
    });
}

TEST_CASE("empty weight E at the free-fermion-like point") {
    // (L-N)(M-N) = 2, M(L-2N) = 2, N(L-N-1) = 1:
    // E = ((x-1)/Delta)^2 (alpha/sqrt(x))^2 x = 1 at x=2, Delta=1, alpha=1
    LatticeSpec spec{1, 2, 3};
    Weights w;
    w.gauge = Weights::Gauge::parametrized;
    w.x = 2;
    w.Delta = 1;
    w.alpha = 1;
    QuadRat e = empty_weight_E(spec, w);
    CHECK(e.a == Rat(1));
    CHECK(e.b == Rat(0));
}

TEST_CASE("partition function factorizes as E * binom * P(1/x)") {
    for (auto [N, M, L] : {std::array<long, 3>{1, 2, 3},
                           std::array<long, 3>{2, 3, 4}}) {
        LatticeSpec spec{N, M, L};
        Weights w;
        w.gauge = Weights::Gauge::parametrized;
        w.x = 2;
        w.Delta = 1;
        w.alpha = 3;
        QuadRat z{0, 0};
        enumerate_configurations(spec, [&](const Configuration& cfg) {
            z = qr_add(z, config_weight(cfg, w, spec));
        });
        Poly tz = brute_force_tilde_Z(spec);
        Rat wtZ = tz.eval(Rat(1) / w.x);  // binom(M,N) * P(1/x)
        QuadRat rhs = qr_mul(empty_weight_E(spec, w), QuadRat{wtZ, 0}, w.x);
        CHECK(z.a == rhs.a);
        CHECK(z.b == rhs.b);
    }
}

TEST_CASE("simulation gauge weight is x^{-l5}") {
    LatticeSpec spec{2, 4, 4};
    Weights w;
    w.gauge = Weights::Gauge::simulation;
    w.x = 3;
    enumerate_configurations(spec, [&](const Configuration& cfg) {
        QuadRat v = config_weight(cfg, w, spec);
        CHECK(v.b == Rat(0));
        CHECK(v.a == rat_pow(Rat(3), -vertex_counts(cfg, spec).l5));
    });
}

TEST_CASE("plane partition bijection round-trips and counts match") {
    for (auto [N, M, L] : {std::array<long, 3>{2, 4, 4},
                           std::array<long, 3>{2, 5, 4},
                           std::array<long, 3>{3, 5, 6}}) {
        LatticeSpec spec{N, M, L};
        long count = enumerate_configurations(spec, [&](const Configuration& cfg) {
            PlanePartition pp = config_to_plane_partition(cfg, spec);
            REQUIRE(pp.a == L - N);
            REQUIRE(pp.b == N);
            REQUIRE(pp.c == M - N);
            for (long r = 0; r < pp.a; ++r)
                for (long c = 0; c < pp.b; ++c) {
                    CHECK(pp.h[r][c] >= 0);
                    CHECK(pp.h[r][c] <= pp.c);
                    if (r + 1 < pp.a) CHECK(pp.h[r][c] >= pp.h[r + 1][c]);
                    if (c + 1 < pp.b) CHECK(pp.h[r][c] >= pp.h[r][c + 1]);
                }
            Configuration back = plane_partition_to_config(pp, spec);
            CHECK(back.slices == cfg.slices);
        });
        CHECK(Int(count) == macmahon_PL(L - N, N, M - N));
    }
}

TEST_CASE("MacMahon box counts") {
    CHECK(macmahon_PL(1, 1, 1) == 2);
    CHECK(macmahon_PL(2, 2, 2) == 20);
    CHECK(macmahon_PL(0, 3, 5) == 1);
    CHECK(macmahon_PL(2, 3, 4) == macmahon_PL(4, 3, 2));
}

TEST_CASE("enumeration cap honors the environment override") {
    setenv("FIVEVERTEX_MAX_CONFIGS", "2", 1);
    CHECK(default_config_cap() == 2);
    LatticeSpec spec{1, 2, 3};  // 3 configurations
    CHECK_THROWS_AS(enumerate_configurations(spec, [](const Configuration&) {}),
                    std::runtime_error);
    unsetenv("FIVEVERTEX_MAX_CONFIGS");
    CHECK(default_config_cap() == 10000000L);
}

TEST_CASE("degenerate boxes") {
    // L = N: single straight configuration, tilde Z is the constant binom
    LatticeSpec spec{2, 4, 2};
    Poly tz = brute_force_tilde_Z(spec);
    CHECK(tz.deg_high() == 0);
    CHECK(tz.coeff(0) == Rat(6));

    // N = 0: one empty configuration
    LatticeSpec empty{0, 3, 4};
    CHECK(enumerate_configurations(empty, [](const Configuration&) {}) == 1);
}
