#include "sgl/properties.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sgl/constants.hpp"
#include "sgl/cut_embed.hpp"
#include "sgl/rng.hpp"
#include "sgl/spectral.hpp"

namespace sgl {

namespace {

constexpr double kSlack = 1e-9;

int regular_degree(const Graph& g, const char* who) {
    if (!g.is_regular()) throw parameter_error(std::string(who) + ": graph must be regular");
    const int d = static_cast<int>(g.neighbors(0).size());
    if (d < 3) throw parameter_error(std::string(who) + ": need degree >= 3");
    return d;
}

std::vector<int> mask_to_subset(std::uint32_t mask) {
    std::vector<int> s;
    while (mask) {
        s.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

// Ball sizes |B(S,ell)| for ell = 0..ecc (stabilization), via BFS.
std::vector<std::int64_t> ball_profile(const Graph& g, const std::vector<int>& subset) {
    const std::vector<int> dist = bfs_distances(g, subset);
    int ecc = 0;
    for (int dv : dist) ecc = std::max(ecc, dv);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(ecc) + 1, 0);
    for (int dv : dist)
        if (dv >= 0) ++sizes[dv];
    for (std::size_t l = 1; l < sizes.size(); ++l) sizes[l] += sizes[l - 1];
    return sizes;
}

// Part (A) scan of one subset. Returns the violating ell, or nullopt.
// Balls stabilize at closure; beyond that the condition fails iff the closure
// is below 3n/4 (the alpha branch grows without bound for d >= 3).
std::optional<double> property_d_violation(const Graph& g, double alpha, int d,
                                           const std::vector<int>& subset) {
    const int n = g.vertex_count();
    const double three_quarters = 0.75 * n;
    const std::vector<std::int64_t> sizes = ball_profile(g, subset);
    const std::int64_t closure = sizes.back();
    const double s = static_cast<double>(subset.size());
    const int ecc = static_cast<int>(sizes.size()) - 1;
    double branch = alpha * s;
    for (int ell = 1; ell <= ecc; ++ell) {
        branch *= d - 1;
        const double threshold = std::min(three_quarters, branch);
        const double b = static_cast<double>(sizes[ell]);
        if (b < threshold - kSlack) return static_cast<double>(ell);
        if (branch >= three_quarters && static_cast<double>(closure) >= three_quarters - kSlack)
            return std::nullopt; // threshold saturated; ball can only grow
    }
    if (static_cast<double>(closure) < three_quarters - kSlack) {
        // smallest ell with alpha (d-1)^ell |S| > closure, in log space
        const double lhs = std::log(static_cast<double>(closure)) - std::log(alpha) - std::log(s);
        double ell = std::floor(lhs / std::log(static_cast<double>(d - 1))) + 1.0;
        ell = std::max(ell, static_cast<double>(ecc) + 1.0);
        return ell;
    }
    return std::nullopt;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw parameter_error("check_property_D: alpha must lie in (0, 1]");
}

std::vector<int> random_subset(SplitMix64& rng, int n, int max_size) {
    // log-uniform size in [1, max_size]
    const double u = rng.next_double();
    int size = static_cast<int>(std::floor(std::exp(u * std::log(max_size + 1.0))));
    size = std::clamp(size, 1, max_size);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> s(pool.begin(), pool.begin() + size);
    std::sort(s.begin(), s.end());
    return s;
}

void check_eps_range(double eps) {
    if (!(eps > 0.0) || eps >= 0.25)
        throw parameter_error("eps must lie in (0, 1/4)");
}

double log_base(double x, double base) { return std::log(x) / std::log(base); }

// Number of edges of H[S].
std::int64_t induced_edge_count(const Graph& h, const std::vector<int>& subset) {
    std::vector<char> in(h.vertex_count(), 0);
    for (int v : subset) in[v] = 1;
    std::int64_t e = 0;
    for (int v : subset)
        for (int u : h.neighbors(v))
            if (v < u && in[u]) ++e;
    return e;
}

} // namespace

bool property_d_holds_at(const Graph& g, double alpha, const std::vector<int>& subset, double ell) {
    const int d = regular_degree(g, "property_d_holds_at");
    const int n = g.vertex_count();
    const std::vector<std::int64_t> sizes = ball_profile(g, subset);
    const double b = static_cast<double>(
        sizes[std::min<std::size_t>(sizes.size() - 1, static_cast<std::size_t>(std::min(ell, 1e9)))]);
    const double ln_branch = std::log(alpha) + ell * std::log(static_cast<double>(d - 1)) +
                             std::log(static_cast<double>(subset.size()));
    const double ln_threshold = std::min(std::log(0.75 * n), ln_branch);
    return std::log(b) >= ln_threshold - kSlack;
}

PropertyReport check_property_D(const Graph& g, double alpha, const CheckMode& mode) {
    check_alpha(alpha);
    const int d = regular_degree(g, "check_property_D");
    const int n = g.vertex_count();

    PropertyReport rep;
    const double l2 = lambda2(g);
    const double l2_bound = 2.1 * std::sqrt(static_cast<double>(d - 1));
    rep.margins["lambda2"] = l2;
    rep.margins["lambda2_bound"] = l2_bound;
    const bool part_b = l2 <= l2_bound + kSlack;
    if (!part_b) {
        rep.verdict = Verdict::fail;
        rep.witness = PropertyWitness{{}, 0, "part B: lambda2 exceeds 2.1 sqrt(d-1)"};
    }

    auto scan_subset = [&](const std::vector<int>& s) -> bool {
        ++rep.subsets_checked;
        const std::optional<double> bad = property_d_violation(g, alpha, d, s);
        if (bad) {
            rep.verdict = Verdict::fail;
            rep.witness = PropertyWitness{s, *bad, "part A: ball below min{3n/4, alpha (d-1)^ell |S|}"};
            return false;
        }
        return true;
    };

    if (mode.kind == CheckMode::Kind::exact) {
        if (n > 20) throw resource_error("check_property_D: exact mode requires n <= 20");
        rep.coverage = "exact";
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (rep.verdict == Verdict::fail) break;
            scan_subset(mask_to_subset(mask));
        }
    } else if (mode.kind == CheckMode::Kind::sampled) {
        rep.coverage = "sampled";
        if (rep.verdict != Verdict::fail) rep.verdict = Verdict::pass_sampled;
        bool ok = part_b;
        for (int v = 0; v < n && ok; ++v) ok = scan_subset({v});
        for (int v = 0; v < n && ok; ++v)
            for (int u = v + 1; u < n && ok; ++u) ok = scan_subset({v, u});
        SplitMix64 rng(mode.seed);
        for (int t = 0; t < mode.samples && ok; ++t) ok = scan_subset(random_subset(rng, n, n));
    } else {
        rep.coverage = "given";
        if (rep.verdict != Verdict::fail) rep.verdict = Verdict::pass_sampled;
        for (const auto& s : mode.subsets) {
            if (rep.verdict == Verdict::fail) break;
            scan_subset(s);
        }
    }
    return rep;
}

double max_alpha(const Graph& g, int cap) {
    const int d = regular_degree(g, "max_alpha");
    const int n = g.vertex_count();
    if (n > cap) throw resource_error("max_alpha: n exceeds cap");
    const double three_quarters = 0.75 * n;
    double best = 1.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::vector<int> subset = mask_to_subset(mask);
        const std::vector<std::int64_t> sizes = ball_profile(g, subset);
        if (static_cast<double>(sizes.back()) < three_quarters - kSlack) return 0.0;
        const int ecc = static_cast<int>(sizes.size()) - 1;
        double denom = static_cast<double>(subset.size());
        for (int ell = 1; ell <= ecc; ++ell) {
            denom *= d - 1;
            const double b = static_cast<double>(sizes[ell]);
            if (b < three_quarters - kSlack) best = std::min(best, b / denom);
        }
    }
    return best;
}

PropertyReport check_property_R(const Graph& h, double eps, int size_cap, const CheckMode& mode,
                                int lp_cap) {
    check_eps_range(eps);
    const int delta = regular_degree(h, "check_property_R");
    const int m = h.vertex_count();

    PropertyReport rep;
    if (eps > 1e-4) rep.flags.push_back("eps above 1e-4 (exploratory range)");

    // part B: connectivity and diameter
    const MetricSummary summary = metric_summary(h);
    const double diam_bound = 3.0 * log_base(static_cast<double>(m), static_cast<double>(delta - 1));
    rep.margins["diameter"] = summary.diameter;
    rep.margins["diameter_bound"] = diam_bound;
    if (!summary.connected || summary.diameter > diam_bound + kSlack) {
        rep.verdict = Verdict::fail;
        rep.witness = PropertyWitness{{}, 0, "part B: disconnected or diameter above 3 log_{Delta-1} m"};
        return rep;
    }

    const double dist_bound = 216.0 / eps;
    rep.margins["distortion_bound"] = dist_bound;
    const double size_limit_real = std::exp((1.0 - eps) * std::log(static_cast<double>(m)));
    const int max_size =
        std::min({static_cast<int>(std::floor(size_limit_real + kSlack)), size_cap, lp_cap});
    rep.margins["max_subset_size"] = max_size;

    int multi_component = 0;
    double worst = 1.0;

    auto scan_subset = [&](const std::vector<int>& s) -> bool {
        ++rep.subsets_checked;
        if (s.size() < 2) return true; // singleton embeds isometrically
        const InducedSubgraph sub = induced_subgraph(h, s);
        // each connected component embedded separately
        std::vector<char> seen(sub.graph.vertex_count(), 0);
        int components = 0;
        for (int v = 0; v < sub.graph.vertex_count(); ++v) {
            if (seen[v]) continue;
            ++components;
            std::vector<int> comp;
            const std::vector<int> dist = bfs_distances(sub.graph, {v});
            for (int u = 0; u < sub.graph.vertex_count(); ++u)
                if (dist[u] >= 0) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            if (comp.size() < 2) continue;
            const InducedSubgraph comp_sub = induced_subgraph(sub.graph, comp);
            const MetricMatrix metric = all_pairs_distances(comp_sub.graph);
            const double dist_val = min_l1_distortion(metric, lp_cap).distortion;
            worst = std::max(worst, dist_val);
            if (dist_val > dist_bound + kSlack) {
                rep.verdict = Verdict::fail;
                rep.witness = PropertyWitness{s, 0, "part A: induced-subgraph distortion above 216/eps"};
                return false;
            }
        }
        if (components > 1) ++multi_component;
        return true;
    };

    bool exhausted = false;
    if (mode.kind == CheckMode::Kind::exact) {
        // all subsets of size 1..max_size; feasible only for small hosts
        double budget = 0.0;
        for (int s = 1; s <= max_size; ++s) {
            double binom = 1.0;
            for (int i = 0; i < s; ++i) binom = binom * (m - i) / (i + 1);
            budget += binom;
        }
        if (budget > 2e5) throw resource_error("check_property_R: exact subset scan too large");
        std::vector<int> comb;
        // lexicographic combinations per size
        for (int s = 1; s <= max_size; ++s) {
            comb.assign(s, 0);
            for (int i = 0; i < s; ++i) comb[i] = i;
            for (;;) {
                if (!scan_subset(comb)) break;
                int t = s - 1;
                while (t >= 0 && comb[t] == m - s + t) --t;
                if (t < 0) break;
                ++comb[t];
                for (int r = t + 1; r < s; ++r) comb[r] = comb[r - 1] + 1;
            }
            if (rep.verdict == Verdict::fail) break;
        }
        exhausted = true;
        rep.coverage = "exact";
    } else if (mode.kind == CheckMode::Kind::sampled) {
        rep.coverage = "sampled";
        SplitMix64 rng(mode.seed);
        for (int t = 0; t < mode.samples; ++t)
            if (!scan_subset(random_subset(rng, m, max_size))) break;
    } else {
        rep.coverage = "given";
        for (const auto& s : mode.subsets) {
            if (static_cast<int>(s.size()) > max_size)
                throw parameter_error("check_property_R: given subset exceeds size limit");
            if (!scan_subset(s)) break;
        }
    }

    rep.margins["worst_distortion"] = worst;
    if (multi_component > 0)
        rep.flags.push_back("multi-component subsets: " + std::to_string(multi_component));
    if (rep.verdict != Verdict::fail && !exhausted) rep.verdict = Verdict::pass_sampled;
    return rep;
}

PropertyReport edge_density_check(const Graph& h, double eps, int size_cap, const CheckMode& mode) {
    check_eps_range(eps);
    const int delta = regular_degree(h, "edge_density_check");
    const int m = h.vertex_count();

    PropertyReport rep;
    if (eps > 1e-4) rep.flags.push_back("eps above 1e-4 (exploratory range)");
    const double density_coeff =
        1.0 + 7.0 / (eps * log_base(static_cast<double>(m), static_cast<double>(delta)));
    rep.margins["density_coefficient"] = density_coeff;
    const double size_limit_real = std::exp((1.0 - eps) * std::log(static_cast<double>(m)));
    rep.margins["size_limit"] = size_limit_real;

    double worst_margin = metric_inf();

    auto scan_subset = [&](const std::vector<int>& s) -> bool {
        ++rep.subsets_checked;
        const double bound = density_coeff * static_cast<double>(s.size());
        const double e = static_cast<double>(induced_edge_count(h, s));
        worst_margin = std::min(worst_margin, bound - e);
        if (e > bound + kSlack) {
            rep.verdict = Verdict::fail;
            rep.witness = PropertyWitness{s, 0, "edge count above (1 + 7/(eps log_Delta m)) |S|"};
            return false;
        }
        return true;
    };

    const int max_size = std::min(static_cast<int>(std::floor(size_limit_real + kSlack)), size_cap);
    bool exhausted = false;
    if (mode.kind == CheckMode::Kind::exact) {
        if (m > 20) throw resource_error("edge_density_check: exact mode requires m <= 20");
        rep.coverage = "exact";
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            if (std::popcount(mask) > max_size) continue;
            if (!scan_subset(mask_to_subset(mask))) break;
        }
        exhausted = true;
    } else if (mode.kind == CheckMode::Kind::sampled) {
        rep.coverage = "sampled";
        SplitMix64 rng(mode.seed);
        for (int t = 0; t < mode.samples; ++t)
            if (!scan_subset(random_subset(rng, m, std::max(1, max_size)))) break;
    } else {
        rep.coverage = "given";
        for (const auto& s : mode.subsets) {
            if (static_cast<double>(s.size()) > size_limit_real + kSlack)
                throw parameter_error("edge_density_check: given subset exceeds m^{1-eps}");
            if (!scan_subset(s)) break;
        }
    }

    rep.margins["worst_margin"] = worst_margin;
    if (rep.verdict != Verdict::fail && !exhausted) rep.verdict = Verdict::pass_sampled;
    return rep;
}

ExpansionReport expansion_lemma_check(const Graph& g, double xi, const std::vector<int>& a) {
    const int d = regular_degree(g, "expansion_lemma_check");
    const int n = g.vertex_count();
    if (!(xi > 0.0) || xi >= 1.0) throw parameter_error("expansion_lemma_check: need 0 < xi < 1");
    if (a.empty()) throw parameter_error("expansion_lemma_check: empty set A");

    ExpansionReport rep;
    rep.lambda_2 = lambda2(g);
    const double l2_bound = 2.1 * std::sqrt(static_cast<double>(d - 1));
    if (rep.lambda_2 > l2_bound + kSlack)
        throw parameter_error("expansion_lemma_check: hypothesis lambda2 <= 2.1 sqrt(d-1) fails");
    if (static_cast<double>(a.size()) > (1.0 - xi) * n + kSlack)
        throw parameter_error("expansion_lemma_check: hypothesis |A| <= (1-xi) n fails");

    std::vector<char> in(n, 0);
    for (int v : a) in[v] = 1;
    std::int64_t cut = 0;
    std::vector<char> boundary(n, 0);
    for (int v : a)
        for (int u : g.neighbors(v))
            if (!in[u]) {
                ++cut;
                boundary[u] = 1;
            }
    std::int64_t bnd = 0;
    for (int v = 0; v < n; ++v) bnd += boundary[v];

    const double factor = xi / (1.0 - xi);
    rep.cut_edges = static_cast<double>(cut);
    rep.cut_bound = factor * (static_cast<double>(d) / 200.0) * static_cast<double>(a.size());
    rep.boundary_vertices = static_cast<double>(bnd);
    rep.boundary_bound = factor * (1.0 / 200.0) * static_cast<double>(a.size());
    rep.holds = rep.cut_edges >= rep.cut_bound - kSlack && rep.boundary_vertices >= rep.boundary_bound - kSlack;
    return rep;
}

StrengthenedExpansionReport strengthened_expansion_check(const Graph& g, double alpha,
                                                         const std::vector<int>& subset,
                                                         std::int64_t ell) {
    check_alpha(alpha);
    const int d = regular_degree(g, "strengthened_expansion_check");
    if (subset.empty()) throw parameter_error("strengthened_expansion_check: empty subset");
    if (ell < 1) throw parameter_error("strengthened_expansion_check: need ell >= 1");
    const PropertyReport pre = check_property_D(g, alpha, CheckMode::exact());
    if (!pre.passed())
        throw parameter_error("strengthened_expansion_check: precondition D(alpha) fails");

    const int n = g.vertex_count();
    const std::vector<std::int64_t> sizes = ball_profile(g, subset);
    const std::int64_t b =
        sizes[std::min<std::size_t>(sizes.size() - 1, static_cast<std::size_t>(ell))];

    StrengthenedExpansionReport rep;
    rep.ball_size = static_cast<double>(b);
    rep.ln_alpha_tilde = ln_alpha_tilde(alpha, d);
    const double ln_branch = rep.ln_alpha_tilde + static_cast<double>(ell) * std::log(static_cast<double>(d - 1)) +
                             std::log(static_cast<double>(subset.size()));
    rep.ln_threshold = std::min(std::log(15.0 * n / 16.0), ln_branch);
    rep.holds = std::log(rep.ball_size) >= rep.ln_threshold - kSlack;
    return rep;
}

} // namespace sgl
