#pragma once

/*
 * Perfect sampling of configurations at the weights w1 = w3 = w4 = 1,
 * w5 = w6 = 1/sqrt(x), i.e. pi(C) proportional to x^{-l5(C)}, via
 * monotone coupling from the past on the plane-partition height
 * representation.
 *
 * The turn count decomposes over height columns: l5 = N plus the number
 * of strictly differing vertically adjacent height pairs, so a single-site
 * heat-bath update only involves the two vertical neighbors. Randomness
 * is counter-based (keyed by seed, time and site), which lets every epoch
 * replay the past without storing variates.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fivevertex/model.hpp"

namespace fv {

// uniform variate in [0,1) for the update of `site` at time -t
double sampler_uniform(std::uint64_t seed, long t, long site);

// single-site heat-bath update of heights[row][col] with variate u;
// stationary for pi(H) proportional to x^{-l5(H)}
void heat_bath_site(PlanePartition& pp, long row, long col, double u,
                    double x);

// one full sweep in fixed scan order at time -t
void heat_bath_sweep(PlanePartition& pp, std::uint64_t seed, long t,
                     double x);

struct SampleResult {
    Configuration config;
    long coalescence_T = 0;  // sweeps from the past until coalescence
};

// coupling from the past with doubling epochs; throws on non-coalescence
// beyond t_cap sweeps
SampleResult cftp_sample(const LatticeSpec& spec, double x,
                         std::uint64_t seed, long t_cap = 1L << 20);

// per-cell empirical frequency of vertex types 1..6 (type 2 never occurs);
// grid[row*L + col][type-1], rows 1..M and columns 1..L zero-based
std::vector<std::array<double, 6>> measure_vertex_densities(
    const std::vector<Configuration>& samples, const LatticeSpec& spec);

// deterministic rendering of a configuration; format is "svg" or "ppm"
std::string render(const Configuration& cfg, const LatticeSpec& spec,
                   const std::string& format, long scale = 16);

// sandwich probe: random ordered pairs A <= B updated with a shared
// (site, u); returns the number of order violations observed
long monotonicity_probe(const LatticeSpec& spec, double x,
                        std::uint64_t seed, long trials);

}  // namespace fv
