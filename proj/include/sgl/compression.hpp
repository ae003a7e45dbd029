#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/metric.hpp"

namespace sgl {

// Fiber-size decomposition of a map: M0 (nearly injective region),
// M1 (intermediate), M2 (nearly constant region), with thresholds
// (n/m) m^{2 eps} and (n/m) m^{4 eps}. M0 uses <=, M1 (strict, <=], M2 strict.
struct DecompositionReport {
    std::vector<int> m0, m1, m2;
    std::map<int, std::int64_t> fiber_size_of_image; // image point -> fiber size
    double threshold_m0 = 0; // (n/m) m^{2 eps}
    double threshold_m2 = 0; // (n/m) m^{4 eps}
    bool strict_regime = true; // eps <= 1e-4
};

DecompositionReport decompose(const VertexMap& f, int m, double eps);

// Dyadic split of M0 by fiber size: M_{0,r} holds vertices with
// 2^{r-1} <= fiber < 2^r. M0' collects classes in the window
// [r* - 2 log2 m, r*] whose image is large (>= m^{1-2 eps}); M0'' collects
// classes below the window.
struct DyadicReport {
    bool m0_empty = false; // early exit: no classes, everything below is empty
    std::map<int, std::vector<int>> classes;
    int r_star = 0;
    double window_low = 0;       // r* - 2 log2 m (real-valued)
    double image_threshold = 0;  // m^{1-2 eps}
    std::map<int, std::int64_t> class_image_sizes;
    std::vector<int> m0_prime, m0_double_prime;
};

DyadicReport dyadic(const VertexMap& f, int m, double eps);

// f with M0'' collapsed to a fixed target (vertex 0 under 0-based labels).
VertexMap hat_f(const VertexMap& f, const DyadicReport& dy);

struct Compression {
    VertexMap map;            // realization of the random compression
    std::optional<int> pivot; // empty when M0' is empty (map == hat_f)
};

// hat_f with M0' collapsed to hat_f(pivot), pivot uniform on M0'.
Compression compress(const VertexMap& f, const DyadicReport& dy, std::uint64_t seed);

struct IdentityCheck {
    double lhs = 0; // E over all pivots of sum_{v,u} dist(F(v),F(u))
    double rhs = 0; // sum_{v,u} dist(hat,hat) - sum_{v,u in M0'} dist(hat,hat)
    bool pass = false;
};

// Exact expectation identity for the compressed pair sum, by full pivot
// enumeration; asserts equality within 1e-9 relative.
IdentityCheck expectation_identity_check(const Graph& g, const MetricMatrix& h_metric,
                                         const VertexMap& f, double eps);

struct ImageBoundCheck {
    std::int64_t max_image_size = 0; // worst over pivot realizations
    double bound = 0;                // 2 + (2 log2 m + 1) m^{1-2eps} + m^{1-2eps}
    bool pass = false;
    bool image_regime_met = false; // m >= ceil((4 + 2 log2 m)^{1/eps})
};

ImageBoundCheck image_bound_check(const VertexMap& f, const DyadicReport& dy, int m, double eps);

struct InequalityRecord {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool hypothesis_met = false; // size hypotheses of the underlying estimate
    bool asserted = false;       // whether this artifact asserts it
    bool holds = false;
};

// Full ledger for one realized compression, including the layer/atypical-edge
// proof-trace diagnostics. The two unconditional items (the expectation
// identity and the 8x pair-sum bound under |M0'| <= 7(n-|M0'|)) are asserted;
// the size-hypothesis inequalities are report-only.
struct CompressionTrace {
    int n = 0, m = 0;
    double eps = 0, alpha = 0;
    std::uint64_t seed = 0;

    DecompositionReport decomposition;
    DyadicReport dyadic_report;
    VertexMap f, f_hat, f_compressed;
    std::optional<int> pivot;

    double edge_sum_f = 0, edge_sum_hat = 0, edge_sum_compressed = 0;
    double pair_sum_f = 0, pair_sum_hat = 0, pair_sum_compressed = 0;
    double expected_pair_sum_compressed = 0;
    double expected_edge_sum_compressed = 0;
    double pair_sum_hat_on_m0_prime = 0;

    double ln_eta_value = 0;
    bool image_regime_met = false;

    std::vector<InequalityRecord> inequalities;

    // layers T_k from M0', edge layers, atypical edges, typical layers
    std::vector<std::int64_t> layer_sizes;
    std::vector<std::int64_t> layer_edge_counts;
    std::vector<std::int64_t> atypical_edge_counts;
    std::vector<std::int64_t> typical_layer_sizes;
    std::optional<int> k0; // min k with |B(M0',k)| >= 15n/16

    const InequalityRecord& record(const std::string& name) const;
};

CompressionTrace compression_trace(const Graph& g, const Graph& h, const VertexMap& f, double eps,
                               double alpha, std::uint64_t seed);

} // namespace sgl
