#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "sgl/constants.hpp"
#include "sgl/parallel.hpp"
#include "sgl/poincare.hpp"
#include "sgl/spectral.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace sgl;
using namespace sgl::testing;

TEST_SUITE_BEGIN("poincare");

namespace {

MetricMatrix two_point_metric() {
    MetricMatrix m(2);
    m.set(0, 1, 1.0);
    return m;
}

} // namespace

TEST_CASE("ratio on K4 with the two-point metric is 3/4 for every nonconstant map") {
    const Graph k4 = Graph::complete(4);
    const MetricMatrix m = two_point_metric();
    for (int bits = 1; bits < 15; ++bits) { // skip 0 and 15: constant maps
        VertexMap f{4, 2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1}};
        CHECK(ratio(k4, m, f, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ratio(k4, m, VertexMap::constant(4, 2, 1), 1.0), degenerate_error);
}

TEST_CASE("ratio is exactly scale invariant for power-of-two scalings") {
    SplitMix64 rng(1);
    const Graph g = sample_regular_graph(8, 3, 5);
    const MetricMatrix m = random_metric(5, rng);
    for (double p : {1.0, 2.0}) {
        for (int t = 0; t < 10; ++t) {
            const VertexMap f = VertexMap::uniform_random(8, 5, rng);
            double base;
            try {
                base = ratio(g, m, f, p);
            } catch (const degenerate_error&) {
                continue;
            }
            CHECK(ratio(g, m.scaled(4.0), f, p) == base);       // exact: exponent shift
            CHECK(ratio(g, m.scaled(3.0), f, p) ==
                  doctest::Approx(base).epsilon(1e-12));        // near-exact otherwise
        }
    }
}

TEST_CASE("ratio is invariant under relabeling G") {
    SplitMix64 rng(2);
    const Graph g = sample_regular_graph(8, 3, 17);
    const MetricMatrix m = random_metric(4, rng);
    std::vector<int> perm = {3, 1, 7, 0, 5, 2, 6, 4};
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph pg = Graph::from_edges(8, edges);
    for (int t = 0; t < 10; ++t) {
        const VertexMap f = VertexMap::uniform_random(8, 4, rng);
        VertexMap pf{8, 4, std::vector<int>(8)};
        for (int v = 0; v < 8; ++v) pf.values[perm[v]] = f.values[v];
        double base;
        try {
            base = ratio(g, m, f, 1.0);
        } catch (const degenerate_error&) {
            continue;
        }
        CHECK(ratio(pg, m, pf, 1.0) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("complete-graph law: brute gamma is (k-1)/k for any metric") {
    SplitMix64 rng(3);
    for (int k : {4, 6}) {
        for (double p : {1.0, 2.0}) {
            const MetricMatrix m = random_metric(3, rng);
            const GammaEstimate est = gamma_bruteforce(Graph::complete(k), m, p);
            CHECK(est.exact);
            CHECK(est.upper == doctest::Approx((k - 1.0) / k).epsilon(1e-12));
            // witness reproduces the bound
            CHECK(ratio(Graph::complete(k), m, *est.lower_witness, p) ==
                  doctest::Approx(est.lower).epsilon(1e-12));
        }
    }
}

TEST_CASE("brute gamma dominates sampled ratios") {
    SplitMix64 rng(4);
    const Graph g = sample_regular_graph(6, 3, 21);
    const Graph h = sample_regular_graph(6, 3, 22);
    const MetricMatrix m = all_pairs_distances(h);
    const GammaEstimate est = gamma_bruteforce(g, m, 1.0);
    for (int t = 0; t < 100; ++t) {
        const VertexMap f = VertexMap::uniform_random(6, 6, rng);
        try {
            CHECK(ratio(g, m, f, 1.0) <= est.upper + 1e-12);
        } catch (const degenerate_error&) {
        }
    }
}

TEST_CASE("brute force in two checkpointed halves matches the full run") {
    const Graph g = sample_regular_graph(6, 3, 31);
    const MetricMatrix m = all_pairs_distances(sample_regular_graph(6, 3, 32));
    const GammaEstimate full = gamma_bruteforce(g, m, 1.0);
    const std::uint64_t total = 46656; // 6^6
    const BruteRange a = gamma_bruteforce_range(g, m, 1.0, 0, total / 2);
    const BruteRange b = gamma_bruteforce_range(g, m, 1.0, total / 2, total);
    const double resumed = std::max(a.best, b.best);
    CHECK(resumed == full.upper);
}

TEST_CASE("brute force cap") {
    const MetricMatrix m = all_pairs_distances(Graph::complete(4));
    CHECK_THROWS_AS(gamma_bruteforce(sample_regular_graph(40, 3, 1), m, 1.0), resource_error);
}

TEST_CASE("brute force is schedule independent under SGL_THREADS") {
    const Graph g = sample_regular_graph(6, 3, 61);
    const MetricMatrix m = all_pairs_distances(sample_regular_graph(6, 3, 62));
    setenv("SGL_THREADS", "1", 1);
    const GammaEstimate one = gamma_bruteforce(g, m, 1.0);
    setenv("SGL_THREADS", "3", 1);
    const GammaEstimate capped = gamma_bruteforce(g, m, 1.0); // env only caps, never raises
    unsetenv("SGL_THREADS");
    CHECK(one.upper == capped.upper);
    CHECK(one.lower_witness->values == capped.lower_witness->values);

    // explicit multi-chunk split with in-order max reduction
    const std::uint64_t total = 46656;
    std::vector<BruteRange> parts(3);
    parallel_chunks(total, 3, [&](int c, std::uint64_t b, std::uint64_t e) {
        parts[c] = gamma_bruteforce_range(g, m, 1.0, b, e);
    });
    double best = -1.0;
    for (const BruteRange& r : parts)
        if (r.any) best = std::max(best, r.best);
    CHECK(best == one.upper);
}

TEST_CASE("local search finds the K4 optimum and is deterministic") {
    const Graph k4 = Graph::complete(4);
    const MetricMatrix m = two_point_metric();
    const GammaEstimate a = gamma_local_search(k4, m, 1.0, 5, 99);
    CHECK(a.lower == doctest::Approx(0.75).epsilon(1e-12));
    const GammaEstimate b = gamma_local_search(k4, m, 1.0, 5, 99);
    CHECK(a.lower == b.lower);
    CHECK(a.lower_witness->values == b.lower_witness->values);
}

TEST_CASE("local search never exceeds brute gamma") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = sample_regular_graph(6, 3, 100 + seed);
        const MetricMatrix m = all_pairs_distances(sample_regular_graph(6, 3, 200 + seed));
        const GammaEstimate brute = gamma_bruteforce(g, m, 1.0);
        const GammaEstimate search = gamma_local_search(g, m, 1.0, 10, seed);
        CHECK(search.lower <= brute.upper + 1e-9);
        CHECK(ratio(g, m, *search.lower_witness, 1.0) == doctest::Approx(search.lower));
    }
}

TEST_CASE("upper certificate landmarks and diagnostics") {
    const Graph k4 = Graph::complete(4);
    const GammaEstimate est = gamma_upper_certificate(k4, k4);
    CHECK(est.upper == doctest::Approx(3.0 / 8.0).epsilon(1e-6));
    CHECK(est.l1_distortion == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(est.classical == doctest::Approx(3.0 / 8.0));
    CHECK(est.spectral_expander); // lambda2 = -1 <= 2.1 sqrt(2)
    CHECK(est.restricted_image_bound == doctest::Approx(10746.0 / 1e-4));

    CHECK_THROWS_AS(gamma_upper_certificate(two_k4(), k4), degenerate_error);
    CHECK_THROWS_AS(gamma_upper_certificate(k4, two_triangles()), parameter_error); // H disconnected
    CHECK_THROWS_AS(gamma_upper_certificate(k4, sample_regular_graph(14, 3, 3)), resource_error);
}

TEST_CASE("extrapolation bound") {
    SUBCASE("q = p substitutes directly") {
        const ExtrapolationBound b = extrapolation_bound(0.5, 2.0, 2.0, 3, 1.0);
        const double exp_branch = 12.0 * 4.0 * 3.0 * std::log(3.0);
        const double poly_branch = 2.0 * std::log(5.0) + std::log(2.0) + std::log(0.5);
        CHECK(b.log_value == doctest::Approx(std::max(exp_branch, poly_branch)).epsilon(1e-12));
    }
    SUBCASE("agrees with the high-precision evaluation path") {
        const ExtrapolationBound b = extrapolation_bound(0.75, 1.0, 2.0, 3, 2.0);
        const double hp = extrapolation_log_hp(0.75, 1.0, 2.0, 3, 2.0);
        CHECK(std::abs(b.log_value - hp) <= 1e-12 * std::abs(hp));
        CHECK(b.value == doctest::Approx(std::exp(hp)));
    }
    SUBCASE("parameter errors") {
        CHECK_THROWS_AS(extrapolation_bound(0.75, 1.0, 2.0, 3, 0.0), parameter_error);
        CHECK_THROWS_AS(extrapolation_bound(0.75, 2.0, 1.0, 3, 1.0), parameter_error);
    }
}

TEST_CASE("distortion lower bound") {
    CHECK(distortion_lower_bound(Graph::complete(4), 0.75) == doctest::Approx(1.0));
    CHECK(distortion_lower_bound(Graph::complete(4), metric_inf()) == 0.0);
    CHECK_THROWS_AS(distortion_lower_bound(two_triangles(), 1.0), degenerate_error);
}

TEST_CASE("exact distortion by injection enumeration") {
    const Graph c4 = Graph::cycle(4);
    CHECK(min_distortion_bruteforce(c4, c4) == doctest::Approx(1.0));
    CHECK(min_distortion_bruteforce(Graph::path(2), petersen()) == doctest::Approx(1.0));
    CHECK(min_distortion_bruteforce(c4, Graph::complete(4)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(min_distortion_bruteforce(Graph::complete(5), c4), parameter_error);
}

TEST_CASE("distortion lower bound is dominated by the exact distortion") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = sample_regular_graph(6, 3, 300 + seed);
        const Graph h = sample_regular_graph(6, 3, 400 + seed);
        if (!metric_summary(h).connected) continue;
        const GammaEstimate brute = gamma_bruteforce(g, all_pairs_distances(h), 1.0);
        const double lb = distortion_lower_bound(g, brute.upper); // exact gamma is a valid upper
        CHECK(lb <= min_distortion_bruteforce(g, h) + 1e-9);
    }
}

TEST_SUITE_END();
