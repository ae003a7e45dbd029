#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sgl/cut_embed.hpp"
#include "sgl/graph.hpp"
#include "sgl/metric.hpp"

namespace sgl {

// Poincare ratio of a single map:
//   [n^-2 sum_{v,u} rho(f(v),f(u))^p] / [|E|^-1 sum_{edges} rho(f(v),f(u))^p]
// Ordered pairs including the diagonal in the numerator. Throws
// degenerate_error when the edge sum vanishes (f constant on every edge).
double ratio(const Graph& g, const MetricMatrix& m, const VertexMap& f, double p);

struct GammaEstimate {
    double lower = 0.0;
    std::optional<VertexMap> lower_witness;
    double upper = metric_inf();
    std::string provenance; // "brute-force exact" | "local search" | "l1-distortion certificate"
    bool exact = false;

    // certificate diagnostics (set by gamma_upper_certificate)
    double l1_distortion = 0.0;
    double classical = 0.0;
    double lambda_2 = 0.0;
    bool spectral_expander = false;     // lambda2 <= 2.1 sqrt(d-1)
    double restricted_image_bound = 0.0; // 10746/eps, valid for |Im(f)| <= m^{1-eps}
    double restricted_image_eps = 0.0;
};

// Exact gamma: sup of ratio over all m^n maps with nondegenerate edge sum,
// enumerated in mixed-radix order. Requires m^n <= cap ratio evaluations.
// start_index/max_evals allow checkpointed range runs; the default covers the
// whole map space.
GammaEstimate gamma_bruteforce(const Graph& g, const MetricMatrix& m, double p,
                               std::uint64_t cap = 100000000ULL);

// Range worker behind gamma_bruteforce: scans map indices [begin, end) and
// returns the best (ratio, index); resumable.
struct BruteRange {
    double best = -1.0;
    std::uint64_t best_index = 0;
    bool any = false;
};
BruteRange gamma_bruteforce_range(const Graph& g, const MetricMatrix& m, double p,
                                  std::uint64_t begin, std::uint64_t end);

// Coordinate-ascent lower bound: sweeps vertices in order, reassigning f(v) to
// the argmax target (ties -> smallest index), with uniform random restarts.
// Deterministic given seed; never exceeds the true gamma.
GammaEstimate gamma_local_search(const Graph& g, const MetricMatrix& m, double p, int restarts,
                                 std::uint64_t seed);

// Upper bound via the L1 certificate: min_l1_distortion(dist_H) times
// d/(2(d - lambda2(G))). Also records the 10746/eps constant that applies to
// maps with |Im(f)| <= m^{1-eps} when lambda2(G) <= 2.1 sqrt(d-1).
GammaEstimate gamma_upper_certificate(const Graph& g, const Graph& h, double tol = 1e-9,
                                      double eps = 1e-4, int lp_cap = 12);

// max{ exp(12*2^q*(d/h)*log d), 5^q * 2^(q/p) * gamma_p^(q/p) }, natural logs,
// evaluated in log space. Linear value may overflow to infinity.
struct ExtrapolationBound {
    double value = 0.0;
    double log_value = 0.0;
    bool exp_branch = false; // which branch attained the max
};
ExtrapolationBound extrapolation_bound(double gamma_p, double p, double q, int d, double h);

// (average ordered-pair distance in G) / gamma_upper; a certified lower bound
// on c_H(G) whenever gamma_upper >= gamma(G, dist_H).
double distortion_lower_bound(const Graph& g, double gamma_upper);

// Exact bi-Lipschitz distortion c_H(G) over all injections V_G -> V_H:
// min over e of (max stretch)/(min stretch), scaling normalized out.
double min_distortion_bruteforce(const Graph& g, const Graph& h, std::uint64_t cap = 10000000ULL);

} // namespace sgl
