#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/metric.hpp"

namespace sgl {

using Pairing = std::vector<std::pair<int, int>>; // k disjoint pairs covering {0,...,2k-1}

struct QuotientResult {
    Multigraph quotient;
    Pairing pairing;
};

// Block quotient of a 3-regular graph on 2k vertices: pair up the vertices
// (default A_i = {2i, 2i+1}), emit one quotient edge (possibly a loop) per
// source edge. |E_U| = 3k by construction.
QuotientResult build_universal_approximator(const Graph& g2k,
                                            const std::optional<Pairing>& pairing = std::nullopt);

Pairing random_pairing(int two_k, std::uint64_t seed);

struct QuotientIdentity {
    double lhs = 0; // sum over source edges of rho(f(v),f(u))^p, f = lift of points
    double rhs = 0; // sum over quotient edge multiset of rho(x_i,x_j)^p
    bool pass = false;
};

// The two sums traverse the same multiset of values, so they agree exactly
// (loops contribute zero).
QuotientIdentity quotient_identity_check(const Graph& g2k, const Multigraph& u, const Pairing& pairing,
                                         const std::vector<int>& points, const MetricMatrix& m,
                                         double p);

struct ApproximatorReport {
    int k = 0;
    std::int64_t edge_count = 0;
    double ratio_min = 0; // min over tested tuples of A/B
    double ratio_max = 0; // max over tested tuples of A/B
    double spread = 1.0;  // ratio_max / ratio_min
    double s_lower = 0;   // admissible scalings need s >= max A/B
    std::optional<double> s_upper; // and s <= D * min A/B, when D supplied
    std::optional<double> d_bound;
    std::optional<bool> pass; // spread <= D
    std::int64_t degenerate_tuples = 0;
    std::int64_t tuples_checked = 0;
    std::string coverage = "sampled"; // "exact" when the tuple space is exhausted
};

// Per tuple x in M^k: A = k^-2 sum_{i,j} rho(x_i,x_j)^p (ordered, diagonal),
// B = |E_U|^-1 sum_{edges} rho(x_i,x_j)^p. Tuples with B = 0 are excluded and
// counted. Exhausts the tuple space when m^k <= exhaustive_cap; otherwise
// samples `trials` uniform tuples plus two deterministic extremal ones.
ApproximatorReport approximator_spread(const Multigraph& u, const MetricMatrix& m, double p,
                                       int trials, std::uint64_t seed,
                                       std::optional<double> d_bound = std::nullopt,
                                       std::uint64_t exhaustive_cap = 2000000ULL);

struct TwoSidedCheck {
    bool pass = false;
    double a = 0;
    double b = 0;
    bool left_holds = false;  // A <= s B
    bool right_holds = false; // s B <= D A
};

// The defining two-sided containment for one tuple.
TwoSidedCheck two_sided_check(const Multigraph& u, const MetricMatrix& m, double p, double d_bound,
                              double s, const std::vector<int>& points);

// Complete multigraph on k vertices (the small-k fallback construction).
Multigraph complete_multigraph(int k);

} // namespace sgl
