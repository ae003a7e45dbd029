#include "doctest.h"

#include <cmath>

#include "sgl/constants.hpp"
#include "sgl/properties.hpp"
#include "sgl/spectral.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace sgl;
using namespace sgl::testing;

TEST_SUITE_BEGIN("properties");

TEST_CASE("vertex expansion holds on K4 and Q3 at alpha = 1") {
    CHECK(check_property_D(Graph::complete(4), 1.0, CheckMode::exact()).verdict == Verdict::pass);
    CHECK(check_property_D(q3(), 1.0, CheckMode::exact()).verdict == Verdict::pass);
}

TEST_CASE("disconnected regular graphs fail with a re-checkable witness") {
    const Graph g = two_k4();
    const PropertyReport rep = check_property_D(g, 0.5, CheckMode::exact());
    CHECK(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    if (!rep.witness->subset.empty()) {
        CHECK_FALSE(property_d_holds_at(g, 0.5, rep.witness->subset, rep.witness->ell));
    }
}

TEST_CASE("degree below 3 is rejected") {
    CHECK_THROWS_AS(check_property_D(two_triangles(), 1.0, CheckMode::exact()), parameter_error);
    CHECK_THROWS_AS(check_property_D(Graph::path(4), 1.0, CheckMode::exact()), parameter_error);
}

TEST_CASE("exact quantifier scans are capped") {
    const Graph big = sample_regular_graph(22, 3, 1);
    CHECK_THROWS_AS(check_property_D(big, 1.0, CheckMode::exact()), resource_error);
    CHECK_THROWS_AS(max_alpha(big), resource_error);
}

TEST_CASE("sampled mode covers singletons and pairs plus random subsets") {
    const PropertyReport rep = check_property_D(petersen(), 1.0, CheckMode::sampled(1, 500));
    CHECK(rep.verdict == Verdict::pass_sampled);
    CHECK(rep.subsets_checked >= 10 + 45 + 500);
}

TEST_CASE("max_alpha agrees with the direct scan oracle") {
    CHECK(max_alpha(Graph::complete(4)) == doctest::Approx(1.0));
    CHECK(max_alpha(q3()) == doctest::Approx(brute_max_alpha(q3())));
    CHECK(max_alpha(two_k4()) == doctest::Approx(0.0));
    const Graph c18 = circulant(18, {1, 2}); // 4-regular, cycle-like growth
    CHECK(max_alpha(c18) == doctest::Approx(brute_max_alpha(c18)));
    CHECK(max_alpha(c18) < 1.0);
}

TEST_CASE("max_alpha is the exact pass/fail threshold") {
    for (const Graph& g : {circulant(18, {1, 2}), q3(), prism6()}) {
        const double a = max_alpha(g);
        if (a == 0.0) continue;
        CHECK(check_property_D(g, a, CheckMode::exact()).verdict == Verdict::pass);
        if (a < 1.0)
            CHECK(check_property_D(g, a * (1.0 + 1e-6), CheckMode::exact()).verdict == Verdict::fail);
        // monotonicity in alpha
        CHECK(check_property_D(g, a / 2.0, CheckMode::exact()).verdict == Verdict::pass);
    }
}

TEST_CASE("monotonicity in alpha across G(6,3)") {
    for (const Graph& g : enumerate_regular_graphs(6, 3)) {
        const double a = max_alpha(g);
        if (a > 0.0) {
            CHECK(check_property_D(g, a, CheckMode::exact()).passed());
            CHECK(check_property_D(g, a * 0.25, CheckMode::exact()).passed());
        }
        if (a < 1.0) {
            const double above = a == 0.0 ? 0.5 : a * (1.0 + 1e-6);
            CHECK(check_property_D(g, above, CheckMode::exact()).verdict == Verdict::fail);
        }
    }
}

TEST_CASE("host property: Petersen passes exactly at eps = 0.2, cap 6") {
    const PropertyReport rep = check_property_R(petersen(), 0.2, 6, CheckMode::exact());
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.coverage == "exact");
    CHECK(rep.margins.at("diameter") == 2.0);
    CHECK(rep.margins.at("diameter_bound") == doctest::Approx(3.0 * std::log(10.0) / std::log(2.0)));
    CHECK(rep.margins.at("worst_distortion") <= 216.0 / 0.2);
    // subsets inducing disconnected subgraphs were embedded per component
    bool flagged = false;
    for (const std::string& f : rep.flags) flagged |= f.find("multi-component") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("host property failure and range checks") {
    const PropertyReport rep = check_property_R(two_k4(), 0.2, 4, CheckMode::exact());
    CHECK(rep.verdict == Verdict::fail); // part B: disconnected
    CHECK_THROWS_AS(check_property_R(petersen(), 0.3, 6, CheckMode::exact()), parameter_error);
    CHECK_THROWS_AS(check_property_R(petersen(), -0.1, 6, CheckMode::exact()), parameter_error);
}

TEST_CASE("eps above the strict regime is flagged") {
    const PropertyReport rep = check_property_R(petersen(), 0.2, 3, CheckMode::sampled(5, 50));
    bool flagged = false;
    for (const std::string& f : rep.flags) flagged |= f.find("1e-4") != std::string::npos;
    CHECK(flagged);
    CHECK(rep.verdict == Verdict::pass_sampled);
}

TEST_CASE("edge density: Petersen outer cycle and forests pass") {
    PropertyReport rep =
        edge_density_check(petersen(), 0.2, 6, CheckMode::given({{0, 1, 2, 3, 4}}));
    CHECK(rep.passed());
    // a forest-inducing subset: spokes land below |S| edges
    rep = edge_density_check(petersen(), 0.2, 6, CheckMode::given({{0, 5, 1, 6}}));
    CHECK(rep.passed());
    // exhaustive scan on a small host
    rep = edge_density_check(petersen(), 0.2, 6, CheckMode::exact());
    CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("edge density: planted dense blocks fail with a witness") {
    const Graph host = clique_blocks(5, 101); // 100-regular, m = 505
    std::vector<int> block0(101);
    for (int i = 0; i < 101; ++i) block0[i] = i;
    const PropertyReport rep = edge_density_check(host, 0.24, 101, CheckMode::given({block0}));
    CHECK(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    // re-check the witness directly: |E| = C(101,2) over bound (1 + 7/(eps log_100 505)) * 101
    const double coeff = 1.0 + 7.0 / (0.24 * std::log(505.0) / std::log(100.0));
    CHECK(101.0 * 100.0 / 2.0 > coeff * 101.0);
}

TEST_CASE("expansion bounds hold on landmark sets") {
    const ExpansionReport face = expansion_lemma_check(q3(), 0.5, {0, 1, 2, 3});
    CHECK(face.holds);
    CHECK(face.cut_edges >= face.cut_bound);

    const ExpansionReport pet = expansion_lemma_check(petersen(), 1.0 / 8.0, {0, 1, 2, 3, 4});
    CHECK(pet.holds);
}

TEST_CASE("expansion hypotheses are named on failure") {
    CHECK_THROWS_WITH_AS(expansion_lemma_check(q3(), 0.5, {0, 1, 2, 3, 4}),
                         doctest::Contains("|A| <= (1-xi) n"), parameter_error);
    CHECK_THROWS_WITH_AS(expansion_lemma_check(two_k4(), 0.5, {0}),
                         doctest::Contains("lambda2"), parameter_error);
}

TEST_CASE("expansion bounds are a theorem over enumerated graphs") {
    // every (G, xi, A) satisfying the hypotheses: a violation means a bug
    for (const Graph& g : enumerate_regular_graphs(6, 3)) {
        const double l2 = lambda2(g);
        if (l2 > 2.1 * std::sqrt(2.0) + 1e-9) continue;
        for (double xi : {1.0 / 16.0, 0.5}) {
            for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
                std::vector<int> a;
                for (int v = 0; v < 6; ++v)
                    if ((mask >> v) & 1u) a.push_back(v);
                if (static_cast<double>(a.size()) > (1.0 - xi) * 6.0) continue;
                CHECK(expansion_lemma_check(g, xi, a).holds);
            }
        }
    }
    int step = 0;
    for (const Graph& g : enumerate_regular_graphs(8, 3)) {
        if (++step % 100 != 0) continue; // subsample the 19355 graphs
        if (lambda2(g) > 2.1 * std::sqrt(2.0) + 1e-9) continue;
        for (std::uint32_t mask = 1; mask < (1u << 8); mask += 3) {
            std::vector<int> a;
            for (int v = 0; v < 8; ++v)
                if ((mask >> v) & 1u) a.push_back(v);
            if (static_cast<double>(a.size()) > 0.5 * 8.0) continue;
            CHECK(expansion_lemma_check(g, 0.5, a).holds);
        }
    }
}

TEST_CASE("strengthened expansion in log space") {
    const StrengthenedExpansionReport k4 = strengthened_expansion_check(Graph::complete(4), 1.0, {0}, 1);
    CHECK(k4.holds);
    CHECK(k4.ln_alpha_tilde < -1000.0); // alpha~ underflows any linear representation

    const StrengthenedExpansionReport cube = strengthened_expansion_check(q3(), 1.0, {3}, 2);
    CHECK(cube.holds);

    CHECK_THROWS_AS(strengthened_expansion_check(q3(), 1.0, {}, 1), parameter_error);
    // precondition: D(alpha) must hold exactly
    CHECK_THROWS_AS(strengthened_expansion_check(two_k4(), 1.0, {0}, 1), parameter_error);
}

TEST_SUITE_END();
