#pragma once

#include <cstdint>
#include <vector>

#include "sgl/metric.hpp"

namespace sgl {

// Nonnegative weights on cuts of {0,...,k-1} plus a distortion value D; an
// L1-embedding certificate. Cut masks always contain point 0 (delta_C equals
// delta of the complement, so this halves the enumeration).
struct CutEmbedding {
    int k = 0;
    std::vector<std::uint32_t> cut_masks;
    std::vector<double> weights;
    double distortion = 1.0;

    static bool separates(std::uint32_t mask, int i, int j) {
        return (((mask >> i) ^ (mask >> j)) & 1u) != 0;
    }

    // Sum of cut pseudometrics at (i, j).
    double combined(int i, int j) const {
        double s = 0.0;
        for (std::size_t c = 0; c < cut_masks.size(); ++c)
            if (separates(cut_masks[c], i, j)) s += weights[c];
        return s;
    }
};

struct EmbeddingCheck {
    bool ok = true;
    int i = -1, j = -1;      // violated pair when !ok
    double sigma = 0.0;      // combined cut value at the pair
    double rho = 0.0;        // metric value at the pair
    bool lower_violated = false;

    explicit operator bool() const { return ok; }
};

// Checks rho(i,j) <= sigma(i,j) <= D*rho(i,j) within tol for all pairs;
// independent of how the embedding was produced.
EmbeddingCheck verify_embedding(const MetricMatrix& m, const CutEmbedding& emb, double tol);

struct DistortionResult {
    double distortion = 1.0;
    CutEmbedding embedding;
};

// Exact minimal L1 distortion of a finite metric via the cut-cone LP:
// min D  s.t.  sum_C w_C delta_C >= rho  and  sum_C w_C delta_C <= D*rho,
// w >= 0. The certificate is re-verified at verify_tol before returning.
// Requires k <= cap (2^{k-1}-1 cut variables) and finite, positive
// off-diagonal distances.
DistortionResult min_l1_distortion(const MetricMatrix& m, int cap = 12, double pivot_tol = 1e-9,
                                   double verify_tol = 1e-6);

} // namespace sgl
