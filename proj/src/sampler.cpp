/*
 * Monotone coupling-from-the-past sampler on plane-partition heights.
 *
 * The stationary law is pi(H) proportional to x^{-l5(H)} with
 * l5 = N + sum over columns of strict vertically-adjacent differences,
 * so the heat-bath conditional of one height given the rest depends only
 * on the four nearest neighbors: two give the support [lo, hi], the two
 * vertical ones enter the weight through g(h) in {0, 1, 2}.
 */

#include "fivevertex/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fv {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

PlanePartition boundary_state(const LatticeSpec& spec, bool maximal) {
    PlanePartition pp;
    pp.a = spec.L - spec.N;
    pp.b = spec.N;
    pp.c = spec.M - spec.N;
    pp.h.assign(pp.a, std::vector<long>(pp.b, maximal ? pp.c : 0));
    return pp;
}

bool leq_pointwise(const PlanePartition& A, const PlanePartition& B) {
    for (long r = 0; r < A.a; ++r)
        for (long c = 0; c < A.b; ++c)
            if (A.h[r][c] > B.h[r][c]) return false;
    return true;
}

}  // namespace

double sampler_uniform(std::uint64_t seed, long t, long site) {
    std::uint64_t z = splitmix64(splitmix64(splitmix64(seed) ^
                                            static_cast<std::uint64_t>(t)) ^
                                 static_cast<std::uint64_t>(site));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

void heat_bath_site(PlanePartition& pp, long row, long col, double u,
                    double x) {
    long lo = 0, hi = pp.c;
    if (row + 1 < pp.a) lo = std::max(lo, pp.h[row + 1][col]);
    if (col + 1 < pp.b) lo = std::max(lo, pp.h[row][col + 1]);
    if (row >= 1) hi = std::min(hi, pp.h[row - 1][col]);
    if (col >= 1) hi = std::min(hi, pp.h[row][col - 1]);

    // weight x^{-g(v)}, g = number of strict vertical mismatches created
    const double ux = 1.0 / x;
    double total = 0;
    for (long v = lo; v <= hi; ++v) {
        int g = 0;
        if (row >= 1 && pp.h[row - 1][col] != v) ++g;
        if (row + 1 < pp.a && pp.h[row + 1][col] != v) ++g;
        total += (g == 0 ? 1.0 : (g == 1 ? ux : ux * ux));
    }
    const double target = u * total;
    double cum = 0;
    for (long v = lo; v <= hi; ++v) {
        int g = 0;
        if (row >= 1 && pp.h[row - 1][col] != v) ++g;
        if (row + 1 < pp.a && pp.h[row + 1][col] != v) ++g;
        cum += (g == 0 ? 1.0 : (g == 1 ? ux : ux * ux));
        if (cum > target) {
            pp.h[row][col] = v;
            return;
        }
    }
    pp.h[row][col] = hi;  // guard against rounding at u near 1
}

void heat_bath_sweep(PlanePartition& pp, std::uint64_t seed, long t,
                     double x) {
    for (long r = 0; r < pp.a; ++r)
        for (long c = 0; c < pp.b; ++c)
            heat_bath_site(pp, r, c, sampler_uniform(seed, t, r * pp.b + c),
                           x);
}

SampleResult cftp_sample(const LatticeSpec& spec, double x,
                         std::uint64_t seed, long t_cap) {
    if (!spec.valid()) throw std::invalid_argument("invalid lattice spec");
    if (!(x > 0)) throw std::invalid_argument("x must be positive");

    const long a = spec.L - spec.N, b = spec.N, c = spec.M - spec.N;
    if (a == 0 || b == 0 || c == 0) {
        // single configuration: every height is pinned
        SampleResult res;
        res.config = plane_partition_to_config(boundary_state(spec, false),
                                               spec);
        res.coalescence_T = 0;
        return res;
    }

    for (long T = 2;; T *= 2) {
        if (T > t_cap)
            throw std::runtime_error("cftp: no coalescence within t_cap");
        PlanePartition low = boundary_state(spec, false);
        PlanePartition high = boundary_state(spec, true);
        // evolve both chains from time -T to -1 with shared randomness;
        // earlier epochs are automatically replayed because the variate
        // for time -t depends only on (seed, t, site)
        for (long t = T; t >= 1; --t) {
            heat_bath_sweep(low, seed, t, x);
            heat_bath_sweep(high, seed, t, x);
        }
        if (low.h == high.h) {
            SampleResult res;
            res.config = plane_partition_to_config(low, spec);
            res.coalescence_T = T;
            return res;
        }
    }
}

std::vector<std::array<double, 6>> measure_vertex_densities(
    const std::vector<Configuration>& samples, const LatticeSpec& spec) {
    const long M = spec.M, L = spec.L;
    std::vector<std::array<double, 6>> grid(M * L, {0, 0, 0, 0, 0, 0});
    if (samples.empty()) return grid;

    std::vector<int> type(M * L);
    for (const Configuration& cfg : samples) {
        std::fill(type.begin(), type.end(), 1);
        for (long t = 1; t <= M; ++t) {
            for (long i = 0; i < spec.N; ++i) {
                const long lo = cfg.slices[t - 1][i];
                const long hi = cfg.slices[t][i];
                if (hi == lo) {
                    type[(t - 1) * L + (lo - 1)] = 3;
                } else {
                    type[(t - 1) * L + (lo - 1)] = 6;
                    type[(t - 1) * L + (hi - 1)] = 5;
                    for (long j = lo + 1; j < hi; ++j)
                        type[(t - 1) * L + (j - 1)] = 4;
                }
            }
        }
        for (long cell = 0; cell < M * L; ++cell)
            grid[cell][type[cell] - 1] += 1.0;
    }
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (auto& cell : grid)
        for (double& f : cell) f *= inv;
    return grid;
}

namespace {

// polyline through the lattice: vertical in the column, horizontal jog at
// mid-row height when the path advances
std::vector<std::pair<long, long>> path_points(const Configuration& cfg,
                                               const LatticeSpec& spec,
                                               long i, long scale) {
    std::vector<std::pair<long, long>> pts;
    auto X = [&](long col) { return col * scale; };
    auto Ymid = [&](long t) { return (2 * t - 1) * scale / 2; };
    pts.push_back({X(cfg.slices[0][i]), 0});
    for (long t = 1; t <= spec.M; ++t) {
        pts.push_back({X(cfg.slices[t - 1][i]), Ymid(t)});
        pts.push_back({X(cfg.slices[t][i]), Ymid(t)});
        pts.push_back({X(cfg.slices[t][i]), t * scale});
    }
    return pts;
}

void draw_segment(std::vector<unsigned char>& img, long W, long H, long x0,
                  long y0, long x1, long y1, long thick) {
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    const long r = thick / 2;
    for (long y = y0 - r; y <= y1 + r; ++y) {
        if (y < 0 || y >= H) continue;
        for (long x = x0 - r; x <= x1 + r; ++x) {
            if (x < 0 || x >= W) continue;
            unsigned char* p = &img[3 * (y * W + x)];
            p[0] = 0x1f;
            p[1] = 0x4e;
            p[2] = 0x79;
        }
    }
}

}  // namespace

std::string render(const Configuration& cfg, const LatticeSpec& spec,
                   const std::string& format, long scale) {
    if (scale < 2) scale = 2;
    const long W = (spec.L + 1) * scale;
    const long H = (spec.M + 1) * scale;

    if (format == "svg") {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
           << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
           << "\">\n";
        os << "<rect width=\"" << W << "\" height=\"" << H
           << "\" fill=\"#ffffff\"/>\n";
        for (long j = 1; j <= spec.L; ++j)
            os << "<line x1=\"" << j * scale << "\" y1=\"0\" x2=\""
               << j * scale << "\" y2=\"" << H
               << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        for (long i = 0; i < spec.N; ++i) {
            os << "<polyline fill=\"none\" stroke=\"#1f4e79\" "
                  "stroke-width=\"" << std::max(2L, scale / 6)
               << "\" points=\"";
            bool first = true;
            for (auto [px, py] : path_points(cfg, spec, i, scale)) {
                if (!first) os << " ";
                first = false;
                os << px << "," << py;
            }
            os << "\"/>\n";
        }
        os << "</svg>\n";
        return os.str();
    }
    if (format == "ppm") {
        std::vector<unsigned char> img(3 * W * H, 0xff);
        const long thick = std::max(2L, scale / 6);
        for (long i = 0; i < spec.N; ++i) {
            auto pts = path_points(cfg, spec, i, scale);
            for (std::size_t k = 1; k < pts.size(); ++k)
                draw_segment(img, W, H, pts[k - 1].first, pts[k - 1].second,
                             pts[k].first, pts[k].second, thick);
        }
        std::ostringstream os;
        os << "P6\n" << W << " " << H << "\n255\n";
        os.write(reinterpret_cast<const char*>(img.data()),
                 static_cast<std::streamsize>(img.size()));
        return os.str();
    }
    throw std::invalid_argument("render: unknown format " + format);
}

long monotonicity_probe(const LatticeSpec& spec, double x,
                        std::uint64_t seed, long trials) {
    const long a = spec.L - spec.N, b = spec.N, c = spec.M - spec.N;
    if (a == 0 || b == 0 || c == 0) return 0;

    PlanePartition low = boundary_state(spec, false);
    PlanePartition high = boundary_state(spec, true);

    // three middle chains from random plane partitions (running minima of
    // a raw random array stay weakly decreasing both ways)
    std::vector<PlanePartition> mids;
    for (int m = 0; m < 3; ++m) {
        PlanePartition pp = boundary_state(spec, false);
        for (long r = 0; r < a; ++r)
            for (long col = 0; col < b; ++col) {
                long raw = static_cast<long>(
                    sampler_uniform(seed ^ 0xabcdefULL, m, r * b + col) *
                    (c + 1));
                if (raw > c) raw = c;
                if (r >= 1) raw = std::min(raw, pp.h[r - 1][col]);
                if (col >= 1) raw = std::min(raw, pp.h[r][col - 1]);
                pp.h[r][col] = raw;
            }
        mids.push_back(pp);
    }

    long violations = 0;
    for (long tr = 0; tr < trials; ++tr) {
        const long site = static_cast<long>(
            sampler_uniform(seed, tr, 0) * static_cast<double>(a * b));
        const long row = std::min(site / b, a - 1);
        const long col = site % b;
        const double u = sampler_uniform(seed, tr, 1);
        heat_bath_site(low, row, col, u, x);
        heat_bath_site(high, row, col, u, x);
        for (auto& mid : mids) heat_bath_site(mid, row, col, u, x);
        for (auto& mid : mids)
            if (!leq_pointwise(low, mid) || !leq_pointwise(mid, high))
                ++violations;
    }
    return violations;
}

}  // namespace fv
