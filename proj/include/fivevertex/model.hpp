#pragma once

/*
 * Model core for the five-vertex model with scalar-product boundary
 * conditions on an M x L lattice with N lines.
 *
 * A configuration is stored as M+1 interlacing slices S_0..S_M; slice t is
 * the strictly increasing N-tuple of columns where the lines cross the t-th
 * horizontal edge row. Boundary slices are pinned to (1..N) and
 * (L-N+1..L), and adjacent slices interlace:
 *
 *     c_i(t) <= c_i(t+1) < c_{i+1}(t)
 *
 * which encodes non-intersecting up-right paths (no type-2 vertices).
 *
 * The brute-force partition polynomial from enumeration is the ground-truth
 * oracle for the determinant representations.
 */

#include "fivevertex/polynomial.hpp"
#include "fivevertex/rational.hpp"

#include <functional>
#include <vector>

namespace fv {

struct LatticeSpec {
    long N = 0;  // line count
    long M = 1;  // rows
    long L = 1;  // columns

    bool valid() const { return N >= 0 && M >= 1 && L >= 1 && N <= M && N <= L; }
};

struct Configuration {
    // slices[t][i] = c_{i+1}(t), t = 0..M
    std::vector<std::vector<int>> slices;
};

struct VertexCounts {
    long l1 = 0;  // empty
    long l3 = 0;  // vertical through
    long l4 = 0;  // horizontal through
    long l5 = 0;  // turn: enter left, exit up
    long l6 = 0;  // turn: enter below, exit right
};

// value a + b*sqrt(x); closed under +,* once x is fixed
struct QuadRat {
    Rat a, b;
};

inline QuadRat qr_add(const QuadRat& p, const QuadRat& q) {
    return {p.a + q.a, p.b + q.b};
}
inline QuadRat qr_mul(const QuadRat& p, const QuadRat& q, const Rat& x) {
    return {p.a * q.a + p.b * q.b * x, p.a * q.b + p.b * q.a};
}
// (sqrt(x))^s as a QuadRat, s may be negative
QuadRat sqrtx_pow(const Rat& x, long s);

struct Weights {
    enum class Gauge { parametrized, simulation, free_fermion };
    Gauge gauge = Gauge::simulation;
    Rat x = 1;      // spectral parameter, > 0
    Rat Delta = 0;  // parametrized gauge only; sign tied to x vs 1
    Rat alpha = 1;  // parametrized gauge only, > 0
};

struct PlanePartition {
    long a = 0, b = 0, c = 0;  // box (L-N) x N x (M-N)
    std::vector<std::vector<long>> h;  // a rows, b columns, entries 0..c
};

// enumeration cap from FIVEVERTEX_MAX_CONFIGS, default 10^7
long default_config_cap();

// Calls visit for every admissible configuration; returns the count.
// Throws std::runtime_error once the count exceeds cap.
long enumerate_configurations(const LatticeSpec& spec,
                              const std::function<void(const Configuration&)>& visit,
                              long cap = -1);

VertexCounts vertex_counts(const Configuration& cfg, const LatticeSpec& spec);

long turn_pairs(const Configuration& cfg);

// sum over configs of u^{l5 - N}, a polynomial in u = 1/x with constant
// term binom(M,N); for L = N returns the constant binom(M,N) so that
// P == 1 holds in the degenerate case
Poly brute_force_tilde_Z(const LatticeSpec& spec, long cap = -1);

QuadRat config_weight(const Configuration& cfg, const Weights& w,
                      const LatticeSpec& spec);

// weight of the minimal-turn (ferroelectric) configuration in the
// parametrized gauge: ((x-1)/Delta)^{(L-N)(M-N)} (alpha/sqrt(x))^{M(L-2N)}
// x^{N(L-N-1)}
QuadRat empty_weight_E(const LatticeSpec& spec, const Weights& w);

PlanePartition config_to_plane_partition(const Configuration& cfg,
                                         const LatticeSpec& spec);
Configuration plane_partition_to_config(const PlanePartition& pp,
                                        const LatticeSpec& spec);

// MacMahon box formula PL(a,b,c)
Int macmahon_PL(long a, long b, long c);

}  // namespace fv
