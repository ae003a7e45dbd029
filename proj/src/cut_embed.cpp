#include "sgl/cut_embed.hpp"

#include <cmath>

#include "sgl/simplex.hpp"

namespace sgl {

EmbeddingCheck verify_embedding(const MetricMatrix& m, const CutEmbedding& emb, double tol) {
    EmbeddingCheck res;
    if (m.size() != emb.k) throw parameter_error("verify_embedding: dimension mismatch");
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) {
            const double rho = m.at(i, j);
            const double sigma = emb.combined(i, j);
            if (sigma + tol < rho) {
                res = EmbeddingCheck{false, i, j, sigma, rho, true};
                return res;
            }
            if (sigma > emb.distortion * rho + tol) {
                res = EmbeddingCheck{false, i, j, sigma, rho, false};
                return res;
            }
        }
    return res;
}

DistortionResult min_l1_distortion(const MetricMatrix& m, int cap, double pivot_tol, double verify_tol) {
    const int k = m.size();
    if (k > cap) throw resource_error("min_l1_distortion: point count exceeds cut-LP cap");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!std::isfinite(m.at(i, j)))
                throw parameter_error("min_l1_distortion: infinite distance");
            if (m.at(i, j) <= 0.0)
                throw parameter_error("min_l1_distortion: zero off-diagonal distance");
        }

    DistortionResult out;
    out.embedding.k = k;
    if (k <= 1) return out;

    // Cuts containing point 0, excluding the full set: 2^{k-1}-1 variables,
    // plus D as the last variable.
    std::vector<std::uint32_t> masks;
    const std::uint32_t full = (k >= 32) ? ~0u : ((1u << k) - 1u);
    for (std::uint32_t half = 0; half < (1u << (k - 1)); ++half) {
        const std::uint32_t mask = (half << 1) | 1u;
        if (mask != full) masks.push_back(mask);
    }
    const int n_cuts = static_cast<int>(masks.size());
    const int d_col = n_cuts;

    LinearProgram lp;
    lp.objective.assign(n_cuts + 1, 0.0);
    lp.objective[d_col] = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            LinearProgram::Row lower, upper;
            lower.coeffs.assign(n_cuts + 1, 0.0);
            upper.coeffs.assign(n_cuts + 1, 0.0);
            for (int c = 0; c < n_cuts; ++c)
                if (CutEmbedding::separates(masks[c], i, j)) {
                    lower.coeffs[c] = 1.0;
                    upper.coeffs[c] = 1.0;
                }
            lower.rel = Relation::GE;
            lower.rhs = m.at(i, j);
            upper.coeffs[d_col] = -m.at(i, j);
            upper.rel = Relation::LE;
            upper.rhs = 0.0;
            lp.rows.push_back(std::move(lower));
            lp.rows.push_back(std::move(upper));
        }

    const SimplexSolution sol = simplex_solve(lp, pivot_tol);

    out.distortion = sol.x[d_col];
    out.embedding.distortion = sol.x[d_col];
    for (int c = 0; c < n_cuts; ++c)
        if (sol.x[c] > 0.0) {
            out.embedding.cut_masks.push_back(masks[c]);
            out.embedding.weights.push_back(sol.x[c]);
        }

    const EmbeddingCheck check = verify_embedding(m, out.embedding, verify_tol);
    if (!check.ok)
        throw numeric_error("min_l1_distortion: certificate failed re-verification",
                            std::abs(check.sigma - check.rho));
    return out;
}

} // namespace sgl
