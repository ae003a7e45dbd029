#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgl/graph.hpp"

namespace sgl {

enum class Verdict { pass, fail, pass_sampled };

struct PropertyWitness {
    std::vector<int> subset;
    double ell = 0; // radius of the violating ball, when applicable
    std::string detail;
};

// Structured verdict with a re-checkable witness. Fail witnesses always
// re-verify by direct recomputation of the violated inequality.
struct PropertyReport {
    Verdict verdict = Verdict::pass;
    std::optional<PropertyWitness> witness;
    std::string coverage = "exact"; // "exact" | "sampled" | "given"
    std::uint64_t subsets_checked = 0;
    std::map<std::string, double> margins;
    std::vector<std::string> flags;

    bool passed() const { return verdict != Verdict::fail; }
};

struct CheckMode {
    enum class Kind { exact, sampled, given } kind = Kind::exact;
    std::uint64_t seed = 0;
    int samples = 10000;
    std::vector<std::vector<int>> subsets; // for Kind::given

    static CheckMode exact() { return {}; }
    static CheckMode sampled(std::uint64_t seed, int samples = 10000) {
        CheckMode m;
        m.kind = Kind::sampled;
        m.seed = seed;
        m.samples = samples;
        return m;
    }
    static CheckMode given(std::vector<std::vector<int>> subsets) {
        CheckMode m;
        m.kind = Kind::given;
        m.subsets = std::move(subsets);
        return m;
    }
};

// Vertex-expansion property: for all nonempty S and all ell >= 1,
//   |B(S,ell)| >= min{3n/4, alpha (d-1)^ell |S|},
// plus lambda2(G) <= 2.1 sqrt(d-1). Exact mode scans all 2^n-1 subsets
// (n <= 20); sampled mode does singletons and pairs exactly plus uniform
// random subsets with log-uniform sizes.
PropertyReport check_property_D(const Graph& g, double alpha, const CheckMode& mode);

// Direct recomputation of one part-(A) instance; used to re-verify witnesses.
bool property_d_holds_at(const Graph& g, double alpha, const std::vector<int>& subset, double ell);

// Largest feasible alpha: min over (S, ell) with |B(S,ell)| < 3n/4 of
// |B(S,ell)| / ((d-1)^ell |S|), clamped to 1; 0 when some ball stabilizes
// below 3n/4 (the quantifier then fails for every alpha).
double max_alpha(const Graph& g, int cap = 20);

// Low-distortion-neighborhood property of the host: every induced subgraph on
// at most min(m^{1-eps}, size_cap, lp_cap) vertices embeds into L1 with
// distortion <= 216/eps (each connected component embedded separately,
// multi-component subsets flagged), plus connectivity and
// diam <= 3 log_{Delta-1} m.
PropertyReport check_property_R(const Graph& h, double eps, int size_cap, const CheckMode& mode,
                                int lp_cap = 12);

// Edge-density condition: |E_{H[S]}| <= (1 + 7/(eps log_Delta m)) |S| for
// tested subsets with |S| <= m^{1-eps}.
PropertyReport edge_density_check(const Graph& h, double eps, int size_cap, const CheckMode& mode);

struct ExpansionReport {
    double cut_edges = 0;
    double cut_bound = 0;
    double boundary_vertices = 0;
    double boundary_bound = 0;
    double lambda_2 = 0;
    bool holds = false;
};

// Edge- and vertex-expansion bounds for a set A with |A| <= (1-xi)n on a
// regular graph with lambda2 <= 2.1 sqrt(d-1):
//   cut(A) >= (xi/(1-xi)) (d/200) |A|,  |N(A)\A| >= (xi/(1-xi)) (1/200) |A|.
ExpansionReport expansion_lemma_check(const Graph& g, double xi, const std::vector<int>& a);

struct StrengthenedExpansionReport {
    double ball_size = 0;
    double ln_threshold = 0; // min(ln(15n/16), ln(alpha~) + ell ln(d-1) + ln|S|)
    double ln_alpha_tilde = 0;
    bool holds = false;
};

// |B(S,ell)| >= min{15n/16, alpha~ (d-1)^ell |S|} with alpha~ derived from
// alpha; compared in log space (alpha~ underflows linearly). Precondition:
// G passes check_property_D(G, alpha) exactly.
StrengthenedExpansionReport strengthened_expansion_check(const Graph& g, double alpha,
                                                         const std::vector<int>& subset,
                                                         std::int64_t ell);

} // namespace sgl
