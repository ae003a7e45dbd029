#include "doctest.h"

#include <cmath>

#include "sgl/cut_embed.hpp"
#include "sgl/graph.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace sgl;
using namespace sgl::testing;

TEST_SUITE_BEGIN("cut-embed");

namespace {

MetricMatrix path_metric(int k) {
    MetricMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = std::abs(i - j);
    return m;
}

MetricMatrix cycle_metric(int k) {
    MetricMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = std::min(std::abs(i - j), k - std::abs(i - j));
    return m;
}

} // namespace

TEST_CASE("line metrics embed isometrically") {
    for (int k = 2; k <= 6; ++k) {
        const DistortionResult r = min_l1_distortion(path_metric(k));
        CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(verify_embedding(path_metric(k), r.embedding, 1e-6).ok);
    }
}

TEST_CASE("cycle metrics embed isometrically, matching the arc decomposition") {
    for (int k : {4, 5, 6}) {
        const MetricMatrix m = cycle_metric(k);
        const DistortionResult r = min_l1_distortion(m);
        CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-6));

        // hand-built certificate: diameter cuts (even) or half-weight arcs (odd)
        const CutEmbedding byhand = cycle_cut_embedding(k);
        CHECK(verify_embedding(m, byhand, 1e-9).ok);
    }
}

TEST_CASE("C4 two-cut certificate reproduces all six distances") {
    const MetricMatrix m = cycle_metric(4);
    CutEmbedding emb;
    emb.k = 4;
    emb.distortion = 1.0;
    emb.cut_masks = {0b0011u, 0b1001u}; // {0,1} and {0,3} ~ complement of {1,2}
    emb.weights = {1.0, 1.0};
    CHECK(verify_embedding(m, emb, 1e-9).ok);
}

TEST_CASE("tree metrics embed isometrically with the edge-cut oracle") {
    SplitMix64 rng(7);
    for (int k = 3; k <= 8; ++k) {
        const Graph tree = random_tree(k, rng);
        const MetricMatrix m = all_pairs_distances(tree);
        const CutEmbedding byhand = tree_cut_embedding(tree);
        CHECK(verify_embedding(m, byhand, 1e-9).ok); // oracle decomposition is exact
        const DistortionResult r = min_l1_distortion(m);
        CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("distortion is scale invariant") {
    SplitMix64 rng(11);
    const MetricMatrix m = random_metric(5, rng);
    const double d1 = min_l1_distortion(m).distortion;
    const double d2 = min_l1_distortion(m.scaled(3.5)).distortion;
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-7));
}

TEST_CASE("verify_embedding failure modes") {
    const MetricMatrix m = cycle_metric(4);
    CutEmbedding zero;
    zero.k = 4;
    zero.distortion = 1.0;
    const EmbeddingCheck bad = verify_embedding(m, zero, 1e-9);
    CHECK_FALSE(bad.ok);
    CHECK(bad.lower_violated);
    CHECK(bad.i >= 0);

    // inflating D only loosens the upper chain
    CutEmbedding ok = cycle_cut_embedding(4);
    ok.distortion = 2.0;
    CHECK(verify_embedding(m, ok, 1e-9).ok);
}

TEST_CASE("certificates returned by the LP re-verify") {
    SplitMix64 rng(3);
    for (int t = 0; t < 8; ++t) {
        const int k = 3 + static_cast<int>(rng.next_below(4));
        const MetricMatrix m = random_metric(k, rng);
        const DistortionResult r = min_l1_distortion(m);
        CHECK(r.distortion >= 1.0 - 1e-9);
        CHECK(verify_embedding(m, r.embedding, 1e-6).ok);
    }
}

TEST_CASE("monotone under point deletion") {
    SplitMix64 rng(5);
    for (int t = 0; t < 5; ++t) {
        const int k = 5 + static_cast<int>(rng.next_below(3)); // 5..7
        const MetricMatrix m = random_metric(k, rng);
        const double full = min_l1_distortion(m).distortion;
        std::vector<int> subset;
        for (int i = 0; i < k - 1; ++i) subset.push_back(i);
        const double sub = min_l1_distortion(m.restrict(subset)).distortion;
        CHECK(sub <= full + 1e-6);
    }
}

TEST_CASE("K33 graph metric is genuinely non-L1") {
    const MetricMatrix m = all_pairs_distances(k33());
    const DistortionResult r = min_l1_distortion(m);
    // the 5-point negative-type obstruction forces distortion >= 4/3
    CHECK(r.distortion >= 4.0 / 3.0 - 1e-6);
    CHECK(r.distortion <= 2.0 + 1e-9);
    CHECK(verify_embedding(m, r.embedding, 1e-6).ok);
}

TEST_CASE("uniform metric embeds isometrically") {
    const MetricMatrix m = all_pairs_distances(Graph::complete(4));
    CHECK(min_l1_distortion(m).distortion == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("input validation") {
    MetricMatrix degenerate(3);
    degenerate.set(0, 1, 0.0);
    degenerate.set(0, 2, 1.0);
    degenerate.set(1, 2, 1.0);
    CHECK_THROWS_AS(min_l1_distortion(degenerate), parameter_error);

    MetricMatrix infinite(2);
    infinite.set(0, 1, metric_inf());
    CHECK_THROWS_AS(min_l1_distortion(infinite), parameter_error);

    CHECK_THROWS_AS(min_l1_distortion(path_metric(13)), resource_error);
}

TEST_SUITE_END();
