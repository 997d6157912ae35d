/*
 * Model core: enumeration of admissible configurations, vertex-type counts,
 * Boltzmann weights in both gauges, the brute-force partition polynomial,
 * and the bijection to boxed plane partitions.
 *
 * Enumeration is a straight DFS over interlacing slices with a pruning bound
 * c_i(t) <= L-N+i (needed to reach the pinned top boundary). This is meant
 * for desk-scale oracle work, guarded by a configuration cap.
 */

#include "fivevertex/model.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace fv {

long default_config_cap() {
    if (const char* env = std::getenv("FIVEVERTEX_MAX_CONFIGS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 10'000'000L;
}

QuadRat sqrtx_pow(const Rat& x, long s) {
    if (s % 2 == 0) return {rat_pow(x, s / 2), Rat(0)};
    // s = 2k+1 with k = floor(s/2): sqrt(x)^s = x^k * sqrt(x)
    long k = (s - 1) / 2;
    return {Rat(0), rat_pow(x, k)};
}

namespace {

void check_spec(const LatticeSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid lattice spec");
}

// recursive slice-by-slice generation
struct Enumerator {
    const LatticeSpec& spec;
    const std::function<void(const Configuration&)>& visit;
    long cap;
    long count = 0;
    Configuration work;

    void emit() {
        ++count;
        if (cap > 0 && count > cap)
            throw std::runtime_error("configuration count exceeds cap " +
                                     std::to_string(cap));
        visit(work);
    }

    // fill slice t+1 positions from index i onward given slice t
    void extend(long t, long i) {
        const long N = spec.N, M = spec.M, L = spec.L;
        if (i == N) {
            if (t + 1 == M - 1) {
                // last free slice: must interlace with the pinned top slice
                const auto& s = work.slices[static_cast<std::size_t>(t + 1)];
                const auto& top = work.slices[static_cast<std::size_t>(M)];
                for (long k = 0; k < N; ++k) {
                    if (s[static_cast<std::size_t>(k)] > top[static_cast<std::size_t>(k)])
                        return;
                    if (k + 1 < N &&
                        top[static_cast<std::size_t>(k)] >= s[static_cast<std::size_t>(k + 1)])
                        return;
                }
                emit();
            } else {
                extend(t + 1, 0);
            }
            return;
        }
        const auto& prev = work.slices[static_cast<std::size_t>(t)];
        auto& cur = work.slices[static_cast<std::size_t>(t + 1)];
        int lov = prev[static_cast<std::size_t>(i)];
        int hiv = (i + 1 < N) ? prev[static_cast<std::size_t>(i + 1)] - 1
                              : static_cast<int>(L);
        // cannot overshoot the final position L-N+i+1
        int reach = static_cast<int>(L - N + i + 1);
        if (hiv > reach) hiv = reach;
        for (int v = lov; v <= hiv; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            extend(t, i + 1);
        }
    }
};

}  // namespace

long enumerate_configurations(const LatticeSpec& spec,
                              const std::function<void(const Configuration&)>& visit,
                              long cap) {
    check_spec(spec);
    if (cap < 0) cap = default_config_cap();
    const long N = spec.N, M = spec.M, L = spec.L;

    Configuration work;
    work.slices.assign(static_cast<std::size_t>(M + 1),
                       std::vector<int>(static_cast<std::size_t>(N)));
    for (long i = 0; i < N; ++i) {
        work.slices[0][static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
        work.slices[static_cast<std::size_t>(M)][static_cast<std::size_t>(i)] =
            static_cast<int>(L - N + i + 1);
    }

    Enumerator en{spec, visit, cap};
    en.work = work;
    if (N == 0 || M == 1) {
        // nothing free: N=0 gives the empty path set, M=1 pins both slices
        bool ok = true;
        if (M == 1 && N > 0) {
            // S_0 and S_1 must interlace: i <= L-N+i (always) and
            // L-N+i < i+1 requires L == N
            for (long i = 0; i + 1 < N; ++i)
                if (work.slices[1][static_cast<std::size_t>(i)] >=
                    work.slices[0][static_cast<std::size_t>(i + 1)])
                    ok = false;
            for (long i = 0; i < N; ++i)
                if (work.slices[0][static_cast<std::size_t>(i)] >
                    work.slices[1][static_cast<std::size_t>(i)])
                    ok = false;
        }
        if (ok) en.emit();
        return en.count;
    }
    en.extend(0, 0);
    return en.count;
}

VertexCounts vertex_counts(const Configuration& cfg, const LatticeSpec& spec) {
    check_spec(spec);
    const long N = spec.N, M = spec.M, L = spec.L;
    if (cfg.slices.size() != static_cast<std::size_t>(M + 1))
        throw std::invalid_argument("wrong slice count");
    VertexCounts vc;
    for (long t = 1; t <= M; ++t) {
        const auto& a = cfg.slices[static_cast<std::size_t>(t - 1)];
        const auto& b = cfg.slices[static_cast<std::size_t>(t)];
        if (a.size() != static_cast<std::size_t>(N) ||
            b.size() != static_cast<std::size_t>(N))
            throw std::invalid_argument("malformed slice");
        for (long i = 0; i < N; ++i) {
            int lo = a[static_cast<std::size_t>(i)];
            int hi = b[static_cast<std::size_t>(i)];
            if (hi < lo) throw std::invalid_argument("slices not interlacing");
            if (hi == lo) {
                vc.l3 += 1;  // vertical through
            } else {
                vc.l6 += 1;  // turn at the entry column
                vc.l5 += 1;  // turn at the exit column
                vc.l4 += hi - lo - 1;
            }
        }
    }
    vc.l1 = M * L - vc.l3 - vc.l4 - vc.l5 - vc.l6;
    return vc;
}

long turn_pairs(const Configuration& cfg) {
    long l5 = 0;
    for (std::size_t t = 1; t < cfg.slices.size(); ++t)
        for (std::size_t i = 0; i < cfg.slices[t].size(); ++i)
            if (cfg.slices[t][i] > cfg.slices[t - 1][i]) ++l5;
    return l5;
}

Poly brute_force_tilde_Z(const LatticeSpec& spec, long cap) {
    check_spec(spec);
    if (spec.L == spec.N) {
        // single straight-line configuration; return the constant so that
        // P = tilde_Z / binom(M,N) == 1 holds in the degenerate case
        return Poly(Rat(binomial(spec.M, spec.N)));
    }
    std::map<long, Int> hist;  // l5 - N -> count
    enumerate_configurations(
        spec,
        [&](const Configuration& cfg) { hist[turn_pairs(cfg) - spec.N] += 1; },
        cap);
    Poly z;
    for (const auto& [k, cnt] : hist) z = z + Poly::monomial(Rat(cnt), k);
    return z;
}

QuadRat config_weight(const Configuration& cfg, const Weights& w,
                      const LatticeSpec& spec) {
    VertexCounts vc = vertex_counts(cfg, spec);
    switch (w.gauge) {
        case Weights::Gauge::free_fermion:
            return {Rat(1), Rat(0)};
        case Weights::Gauge::simulation:
            // w1 = w3 = w4 = 1, w5 = w6 = 1/sqrt(x): weight x^{-l5}
            return {rat_pow(w.x, -vc.l5), Rat(0)};
        case Weights::Gauge::parametrized: {
            if (w.Delta == 0)
                throw std::domain_error(
                    "Delta = 0: use the free-fermion gauge marker");
            // w1 = (alpha/sqrt(x))(x-1)/Delta, w3 = sqrt(x)/alpha,
            // w4 = alpha sqrt(x), w5 = w6 = 1
            Rat rat = rat_pow(w.alpha * (w.x - 1) / w.Delta, vc.l1) *
                      rat_pow(w.alpha, vc.l4 - vc.l3);
            long s = vc.l3 + vc.l4 - vc.l1;  // power of sqrt(x)
            QuadRat sq = sqrtx_pow(w.x, s);
            return {rat * sq.a, rat * sq.b};
        }
    }
    throw std::logic_error("unreachable");
}

QuadRat empty_weight_E(const LatticeSpec& spec, const Weights& w) {
    check_spec(spec);
    if (w.gauge != Weights::Gauge::parametrized)
        throw std::domain_error("E is defined in the parametrized gauge");
    if (w.x == 1) throw std::domain_error("E is singular at x = 1");
    if (w.Delta == 0) throw std::domain_error("Delta must be nonzero");
    const long N = spec.N, M = spec.M, L = spec.L;
    Rat rat = rat_pow((w.x - 1) / w.Delta, (L - N) * (M - N)) *
              rat_pow(w.alpha, M * (L - 2 * N)) *
              rat_pow(w.x, N * (L - N - 1));
    QuadRat sq = sqrtx_pow(w.x, -M * (L - 2 * N));
    return {rat * sq.a, rat * sq.b};
}

PlanePartition config_to_plane_partition(const Configuration& cfg,
                                         const LatticeSpec& spec) {
    check_spec(spec);
    const long N = spec.N, M = spec.M, L = spec.L;
    PlanePartition pp;
    pp.a = L - N;
    pp.b = N;
    pp.c = M - N;
    pp.h.assign(static_cast<std::size_t>(pp.a),
                std::vector<long>(static_cast<std::size_t>(pp.b), 0));
    // T_{i,k} = first slice index at which line i has passed column i+k;
    // interlacing confines it to [N-i+1, M-i+1]
    for (long i = 1; i <= N; ++i) {
        for (long k = 1; k <= L - N; ++k) {
            long T = -1;
            for (long t = 0; t <= M; ++t) {
                if (cfg.slices[static_cast<std::size_t>(t)]
                              [static_cast<std::size_t>(i - 1)] >= i + k) {
                    T = t;
                    break;
                }
            }
            if (T < 0) throw std::invalid_argument("config misses boundary");
            pp.h[static_cast<std::size_t>(L - N - k)]
                [static_cast<std::size_t>(i - 1)] = T - (N - i + 1);
        }
    }
    return pp;
}

Configuration plane_partition_to_config(const PlanePartition& pp,
                                        const LatticeSpec& spec) {
    check_spec(spec);
    const long N = spec.N, M = spec.M, L = spec.L;
    if (pp.a != L - N || pp.b != N || pp.c != M - N)
        throw std::invalid_argument("box does not match spec");
    Configuration cfg;
    cfg.slices.assign(static_cast<std::size_t>(M + 1),
                      std::vector<int>(static_cast<std::size_t>(N)));
    for (long t = 0; t <= M; ++t) {
        for (long i = 1; i <= N; ++i) {
            long pos = i;
            for (long k = 1; k <= L - N; ++k) {
                long T = pp.h[static_cast<std::size_t>(L - N - k)]
                             [static_cast<std::size_t>(i - 1)] + (N - i + 1);
                if (T <= t) ++pos;
            }
            cfg.slices[static_cast<std::size_t>(t)][static_cast<std::size_t>(i - 1)] =
                static_cast<int>(pos);
        }
    }
    return cfg;
}

Int macmahon_PL(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::domain_error("PL needs non-negative box dimensions");
    Rat v = 1;
    for (long j = 0; j < a; ++j) {
        v *= frac(factorial(b + c + j) * factorial(j),
                  factorial(b + j) * factorial(c + j));
    }
    if (v.get_den() != 1) throw std::logic_error("PL not integral");
    return v.get_num();
}

}  // namespace fv
