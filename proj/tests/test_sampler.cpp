#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "fivevertex/model.hpp"
#include "fivevertex/sampler.hpp"

using namespace fv;

namespace {

using Key = std::vector<std::vector<int>>;

// exact stationary probabilities x^{-l5} / Z from the enumeration oracle
std::map<Key, double> exact_law(const LatticeSpec& spec, double x) {
    std::map<Key, double> law;
    double z = 0;
    enumerate_configurations(spec, [&](const Configuration& cfg) {
        double w = std::pow(x, -static_cast<double>(
                                   vertex_counts(cfg, spec).l5));
        law[cfg.slices] = w;
        z += w;
    });
    for (auto& [k, v] : law) v /= z;
    return law;
}

struct FitResult {
    double tv = 0;
    double chi2 = 0;
};

FitResult sample_fit(const LatticeSpec& spec, double x, long n,
                     std::uint64_t seed0) {
    std::map<Key, double> law = exact_law(spec, x);
    std::map<Key, long> counts;
    for (long s = 0; s < n; ++s)
        counts[cftp_sample(spec, x, seed0 + static_cast<std::uint64_t>(s))
                   .config.slices]++;
    FitResult fr;
    for (const auto& [k, p] : law) {
        double obs = counts.count(k) ? static_cast<double>(counts[k]) : 0.0;
        double exp = p * static_cast<double>(n);
        fr.tv += std::abs(obs / n - p);
        fr.chi2 += (obs - exp) * (obs - exp) / exp;
    }
    fr.tv /= 2;
    return fr;
}

// chi-square critical values at p = 0.001 for the state counts that occur
double chi2_crit(std::size_t states) {
    switch (states - 1) {
        case 2: return 13.82;
        case 5: return 20.52;
        case 19: return 43.82;
        default: REQUIRE(false); return 0;
    }
}

}  // namespace

TEST_CASE("counter-based variates are deterministic and in range") {
    double u = sampler_uniform(42, 7, 3);
    CHECK(u == sampler_uniform(42, 7, 3));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(sampler_uniform(42, 7, 4) != u);
    CHECK(sampler_uniform(42, 8, 3) != u);
    CHECK(sampler_uniform(43, 7, 3) != u);
}

TEST_CASE("heat-bath update respects monotone bounds") {
    PlanePartition pp;
    pp.a = 2;
    pp.b = 2;
    pp.c = 3;
    pp.h = {{3, 2}, {1, 0}};
    for (double u : {0.0, 0.3, 0.7, 0.999}) {
        PlanePartition q = pp;
        heat_bath_site(q, 0, 1, u, 2.0);
        CHECK(q.h[0][1] <= q.h[0][0]);
        CHECK(q.h[0][1] >= q.h[1][1]);
        CHECK(q.h[0][1] >= 0);
        CHECK(q.h[0][1] <= 3);
    }
}

TEST_CASE("CFTP matches the exact law on tiny boxes") {
    const long n = 10000;
    std::uint64_t seed = 20260823;
    for (auto [N, M, L] : {std::array<long, 3>{1, 2, 3},
                           std::array<long, 3>{2, 4, 4},
                           std::array<long, 3>{2, 3, 4}}) {
        LatticeSpec spec{N, M, L};
        for (double x : {0.5, 1.0, 2.0}) {
            FitResult fr = sample_fit(spec, x, n, seed);
            seed += n;
            CAPTURE(N);
            CAPTURE(M);
            CAPTURE(L);
            CAPTURE(x);
            CHECK(fr.tv < 0.05);
            CHECK(fr.chi2 < chi2_crit(exact_law(spec, x).size()));
        }
    }
}

TEST_CASE("uniformity at the free-fermion point x = 1") {
    LatticeSpec spec{1, 2, 3};
    FitResult fr = sample_fit(spec, 1.0, 6000, 99);
    CHECK(fr.tv < 0.05);  // exact law is (1/3, 1/3, 1/3)
}

TEST_CASE("monotone coupling for x <= 1") {
    for (double x : {0.25, 0.5, 1.0})
        CHECK(monotonicity_probe(LatticeSpec{3, 7, 8}, x, 4242, 20000) == 0);
    // for x > 1 the site conditional is not stochastically monotone and a
    // nonzero count is expected; the probe reports rather than hides it
    long v = monotonicity_probe(LatticeSpec{3, 7, 8}, 2.0, 42, 100000);
    CHECK(v >= 0);
}

TEST_CASE("deterministic replay") {
    LatticeSpec spec{2, 4, 4};
    SampleResult a = cftp_sample(spec, 0.5, 777);
    SampleResult b = cftp_sample(spec, 0.5, 777);
    CHECK(a.config.slices == b.config.slices);
    CHECK(a.coalescence_T == b.coalescence_T);
}

TEST_CASE("degenerate boxes sample without coupling") {
    LatticeSpec deg{2, 4, 2};  // L = N: unique configuration
    SampleResult r = cftp_sample(deg, 2.0, 5);
    CHECK(r.coalescence_T == 0);
    CHECK(r.config.slices.size() == 5);
}

TEST_CASE("vertex density measurement") {
    LatticeSpec spec{2, 3, 4};
    std::vector<Configuration> samples;
    for (long s = 0; s < 50; ++s)
        samples.push_back(cftp_sample(spec, 1.0, 1000 + s).config);
    auto grid = measure_vertex_densities(samples, spec);
    REQUIRE(grid.size() == static_cast<std::size_t>(spec.M * spec.L));
    for (const auto& cell : grid) {
        double sum = 0;
        for (double f : cell) sum += f;
        CHECK(sum == doctest::Approx(1.0));
        CHECK(cell[1] == 0.0);  // type 2 is excluded by the five-vertex rule
    }

    // a single sample has a deterministic 0/1 density map
    auto single = measure_vertex_densities({samples[0]}, spec);
    for (const auto& cell : single)
        for (double f : cell) CHECK((f == 0.0 || f == 1.0));
}

TEST_CASE("rendering is deterministic and well-formed") {
    LatticeSpec spec{1, 1, 2};
    SampleResult r = cftp_sample(spec, 1.0, 1);
    std::string svg = render(r.config, spec, "svg");
    CHECK(svg == render(r.config, spec, "svg"));
    CHECK(svg.find("<svg") == 0);
    // the unique path yields exactly one polyline
    std::size_t n = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++n;
    CHECK(n == 1);

    std::string ppm = render(r.config, spec, "ppm");
    CHECK(ppm.substr(0, 3) == "P6\n");
    CHECK(ppm == render(r.config, spec, "ppm"));
    CHECK_THROWS_AS(render(r.config, spec, "gif"), std::invalid_argument);
}
