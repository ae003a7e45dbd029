#include "doctest.h"

#include <algorithm>
#include <set>

#include "sgl/graph.hpp"
#include "sgl/graph_io.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace sgl;
using namespace sgl::testing;

TEST_SUITE_BEGIN("graph");

TEST_CASE("sampling G(4,3) always yields K4") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = sample_regular_graph(4, 3, seed);
        CHECK(g.edge_count() == 6);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v));
    }
}

TEST_CASE("sampler parameter errors") {
    CHECK_THROWS_AS(sample_regular_graph(5, 3, 1), parameter_error); // n*d odd
    CHECK_THROWS_AS(sample_regular_graph(3, 3, 1), parameter_error); // n <= d
    CHECK_THROWS_AS(sample_regular_graph(6, 2, 1), parameter_error); // d < 3
}

TEST_CASE("sampled graphs satisfy the structural invariants") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = sample_regular_graph(12, 4, seed);
        g.validate();
        CHECK(*g.degree() == 4);
    }
}

TEST_CASE("enumeration matches brute force over all edge subsets") {
    CHECK(enumerate_regular_graphs(4, 3).size() == 1);

    const std::vector<Graph> enumerated = enumerate_regular_graphs(6, 3);
    const std::vector<std::uint64_t> brute = regular_masks_bruteforce(6, 3);
    CHECK(enumerated.size() == brute.size());
    std::set<std::uint64_t> enum_masks;
    for (const Graph& g : enumerated) enum_masks.insert(edge_mask(g));
    CHECK(enum_masks.size() == enumerated.size()); // each labeled graph exactly once
    CHECK(enum_masks == std::set<std::uint64_t>(brute.begin(), brute.end()));
}

TEST_CASE("G(6,4) is the set of perfect-matching complements") {
    const std::vector<Graph> graphs = enumerate_regular_graphs(6, 4);
    CHECK(graphs.size() == 15);
    for (const Graph& g : graphs) {
        // complement must be a perfect matching: 1-regular on 6 vertices
        std::vector<int> deg(6, 0);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!g.has_edge(u, v)) {
                    ++deg[u];
                    ++deg[v];
                }
        for (int v = 0; v < 6; ++v) CHECK(deg[v] == 1);
    }
}

TEST_CASE("enumeration count is the right order of magnitude") {
    // (dn)! / ((dn/2)! 2^{dn/2} (d!)^n) bounds the labeled count from above
    auto pairing_count = [](int n, int d) {
        const int dn = n * d;
        double v = std::lgamma(dn + 1.0) - std::lgamma(dn / 2 + 1.0) - (dn / 2) * std::log(2.0) -
                   n * std::lgamma(d + 1.0);
        return std::exp(v);
    };
    const double f43 = pairing_count(4, 3);
    CHECK(1.0 <= f43);
    CHECK(1.0 >= 0.01 * f43);
    const double f63 = pairing_count(6, 3);
    CHECK(70.0 <= f63);
    CHECK(70.0 >= 0.01 * f63);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_regular_graphs(9, 2, 8), resource_error);
}

TEST_CASE("sampler frequencies are uniform over labeled G(6,3)") {
    const std::vector<Graph> all = enumerate_regular_graphs(6, 3);
    std::map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[edge_mask(all[i])] = static_cast<int>(i);

    const int samples = 10000;
    std::vector<int> counts(all.size(), 0);
    for (int s = 0; s < samples; ++s) {
        const Graph g = sample_regular_graph(6, 3, 777000 + s);
        ++counts[index.at(edge_mask(g))];
    }
    const double expected = static_cast<double>(samples) / all.size();
    double stat = 0.0;
    for (int c : counts) stat += (c - expected) * (c - expected) / expected;
    const double p_value = 1.0 - chi_square_cdf(stat, static_cast<int>(all.size()) - 1);
    CHECK(p_value >= 1e-3);
}

TEST_CASE("all-pairs distances") {
    SUBCASE("complete graph") {
        const MetricMatrix m = all_pairs_distances(Graph::complete(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) == (i == j ? 0.0 : 1.0));
    }
    SUBCASE("Petersen: diameter 2") {
        const MetricMatrix m = all_pairs_distances(petersen());
        double diam = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                if (i != j) CHECK((m.at(i, j) == 1.0 || m.at(i, j) == 2.0));
                diam = std::max(diam, m.at(i, j));
            }
        CHECK(diam == 2.0);
        m.validate();
    }
    SUBCASE("disconnected: infinity across components") {
        const MetricMatrix m = all_pairs_distances(two_triangles());
        CHECK(std::isinf(m.at(0, 3)));
        CHECK(m.at(0, 1) == 1.0);
    }
}

TEST_CASE("metric matrix invariants hold for sampled graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = sample_regular_graph(10, 3, seed);
        const MetricMatrix m = all_pairs_distances(g);
        m.validate();
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v) CHECK((m.at(u, v) == 1.0) == g.has_edge(u, v));
    }
}

TEST_CASE("metric summary") {
    const MetricSummary k4 = metric_summary(Graph::complete(4));
    CHECK(k4.connected);
    CHECK(k4.diameter == 1.0);
    CHECK(k4.average_distance == doctest::Approx(12.0 / 16.0));

    const MetricSummary pet = metric_summary(petersen());
    CHECK(pet.connected);
    CHECK(pet.diameter == 2.0);
    // each vertex sees 3 at distance 1 and 6 at distance 2
    CHECK(pet.average_distance == doctest::Approx((3.0 + 12.0) / 10.0));

    const MetricSummary tri = metric_summary(two_triangles());
    CHECK_FALSE(tri.connected);
    CHECK(std::isinf(tri.diameter));
    CHECK(std::isinf(tri.average_distance));
}

TEST_CASE("induced subgraphs") {
    const InducedSubgraph k3 = induced_subgraph(Graph::complete(4), {0, 1, 2});
    CHECK(k3.graph.vertex_count() == 3);
    CHECK(k3.graph.edge_count() == 3);

    const InducedSubgraph outer = induced_subgraph(petersen(), {0, 1, 2, 3, 4});
    CHECK(outer.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(outer.graph.neighbors(v).size() == 2); // C5

    const InducedSubgraph single = induced_subgraph(petersen(), {7});
    CHECK(single.graph.vertex_count() == 1);
    CHECK(single.graph.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(petersen(), {}), parameter_error);
}

TEST_CASE("balls") {
    CHECK(ball(q3(), {0}, 1).size() == 4);
    CHECK(ball(Graph::complete(4), {0}, 1).size() == 4);
    const std::vector<int> s = {2, 5};
    CHECK(ball(petersen(), s, 0) == s);
    CHECK_THROWS_AS(ball(petersen(), {}, 1), parameter_error);

    // monotone growth and stabilization at the connected closure
    SplitMix64 rng(42);
    const Graph g = sample_regular_graph(14, 3, 9);
    for (int trial = 0; trial < 10; ++trial) {
        const int v = static_cast<int>(rng.next_below(14));
        std::size_t prev = 0;
        for (int r = 0; r <= 14; ++r) {
            const std::size_t size = ball(g, {v}, r).size();
            CHECK(size >= prev);
            prev = size;
        }
        CHECK(prev == ball(g, {v}, 14 * 2).size());
    }
}

TEST_CASE("graph json round trip with canonical edge order") {
    const Graph g = sample_regular_graph(10, 3, 123);
    const nlohmann::json j = graph_to_json(g);
    // canonical: u < v, lexicographically sorted
    std::pair<int, int> prev{-1, -1};
    for (const auto& e : j.at("edges")) {
        const std::pair<int, int> cur{e[0].get<int>(), e[1].get<int>()};
        CHECK(cur.first < cur.second);
        CHECK(prev < cur);
        prev = cur;
    }
    const Graph back = graph_from_json(j);
    CHECK(edge_mask(back) == edge_mask(g));
}

TEST_CASE("simple-graph reader rejects duplicates and loops") {
    nlohmann::json dup = {{"n", 3}, {"edges", {{0, 1}, {1, 0}}}};
    CHECK_THROWS(graph_from_json(dup));
    nlohmann::json loop = {{"n", 3}, {"edges", {{1, 1}}}};
    CHECK_THROWS(graph_from_json(loop));
}

TEST_CASE("multigraph json permits loops and repeats") {
    Multigraph u;
    u.k = 3;
    u.edges = {{1, 1}, {0, 1}, {0, 1}, {2, 0}};
    const Multigraph back = multigraph_from_json(multigraph_to_json(u));
    CHECK(back.k == 3);
    CHECK(back.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("metric json round trip keeps infinity") {
    const MetricMatrix m = all_pairs_distances(two_triangles());
    const MetricMatrix back = metric_from_json(metric_to_json(m));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (std::isinf(m.at(i, j)))
                CHECK(std::isinf(back.at(i, j)));
            else
                CHECK(back.at(i, j) == m.at(i, j));
        }
}

TEST_SUITE_END();
