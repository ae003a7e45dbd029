#include "sgl/compression.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sgl/constants.hpp"
#include "sgl/rng.hpp"

namespace sgl {

namespace {

constexpr double kSlack = 1e-9;

void check_eps(double eps) {
    if (!(eps > 0.0) || eps >= 0.25)
        throw parameter_error("compression: eps must lie in (0, 1/4)");
}

double pair_sum(const MetricMatrix& metric, const std::vector<int>& values) {
    double s = 0.0;
    const int n = static_cast<int>(values.size());
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) s += 2.0 * metric.at(values[v], values[u]);
    return s;
}

double edge_sum(const Graph& g, const MetricMatrix& metric, const std::vector<int>& values) {
    double s = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) s += metric.at(values[v], values[u]);
    return s;
}

std::int64_t image_count(const std::vector<int>& values, int m) {
    std::vector<char> seen(m, 0);
    std::int64_t c = 0;
    for (int x : values)
        if (!seen[x]) {
            seen[x] = 1;
            ++c;
        }
    return c;
}

} // namespace

DecompositionReport decompose(const VertexMap& f, int m, double eps) {
    check_eps(eps);
    f.validate();
    if (f.m != m) throw parameter_error("decompose: map range does not match m");
    const int n = f.n;

    DecompositionReport rep;
    rep.strict_regime = eps <= 1e-4;
    rep.threshold_m0 = (static_cast<double>(n) / m) * std::pow(static_cast<double>(m), 2.0 * eps);
    rep.threshold_m2 = (static_cast<double>(n) / m) * std::pow(static_cast<double>(m), 4.0 * eps);

    const std::vector<std::int64_t> fibers = f.fiber_sizes();
    for (int v = 0; v < n; ++v) {
        rep.fiber_size_of_image[f.values[v]] = fibers[v];
        const double size = static_cast<double>(fibers[v]);
        if (size <= rep.threshold_m0)
            rep.m0.push_back(v);
        else if (size <= rep.threshold_m2)
            rep.m1.push_back(v);
        else
            rep.m2.push_back(v);
    }
    return rep;
}

DyadicReport dyadic(const VertexMap& f, int m, double eps) {
    const DecompositionReport deco = decompose(f, m, eps);
    DyadicReport rep;
    rep.image_threshold = std::exp((1.0 - 2.0 * eps) * std::log(static_cast<double>(m)));
    if (deco.m0.empty()) {
        rep.m0_empty = true;
        return rep;
    }
    const std::vector<std::int64_t> fibers = f.fiber_sizes();
    for (int v : deco.m0) {
        const int r = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(fibers[v])));
        rep.classes[r].push_back(v);
    }
    rep.r_star = rep.classes.rbegin()->first;
    rep.window_low = static_cast<double>(rep.r_star) - 2.0 * std::log2(static_cast<double>(m));

    for (auto& [r, verts] : rep.classes) {
        std::vector<int> images;
        for (int v : verts) images.push_back(f.values[v]);
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        rep.class_image_sizes[r] = static_cast<std::int64_t>(images.size());
    }

    for (const auto& [r, verts] : rep.classes) {
        if (static_cast<double>(r) < rep.window_low) {
            rep.m0_double_prime.insert(rep.m0_double_prime.end(), verts.begin(), verts.end());
        } else if (static_cast<double>(rep.class_image_sizes.at(r)) >= rep.image_threshold) {
            rep.m0_prime.insert(rep.m0_prime.end(), verts.begin(), verts.end());
        }
    }
    std::sort(rep.m0_prime.begin(), rep.m0_prime.end());
    std::sort(rep.m0_double_prime.begin(), rep.m0_double_prime.end());
    return rep;
}

VertexMap hat_f(const VertexMap& f, const DyadicReport& dy) {
    VertexMap out = f;
    for (int v : dy.m0_double_prime) out.values[v] = 0;
    return out;
}

Compression compress(const VertexMap& f, const DyadicReport& dy, std::uint64_t seed) {
    Compression out;
    out.map = hat_f(f, dy);
    if (dy.m0_prime.empty()) return out;
    SplitMix64 rng(seed);
    const int pivot = dy.m0_prime[rng.next_below(dy.m0_prime.size())];
    const int target = out.map.values[pivot];
    for (int v : dy.m0_prime) out.map.values[v] = target;
    out.pivot = pivot;
    return out;
}

IdentityCheck expectation_identity_check(const Graph& g, const MetricMatrix& h_metric,
                                         const VertexMap& f, double eps) {
    if (g.vertex_count() != f.n) throw parameter_error("expectation_identity_check: size mismatch");
    if (h_metric.size() < f.m) throw parameter_error("expectation_identity_check: metric too small");
    if (!h_metric.all_finite())
        throw degenerate_error("expectation_identity_check: infinite distances in play");
    const DyadicReport dy = dyadic(f, f.m, eps);
    if (dy.m0_prime.empty())
        throw parameter_error("expectation_identity_check: M0' is empty");

    const VertexMap hat = hat_f(f, dy);
    // exact expectation by enumerating every pivot choice
    double total = 0.0;
    for (int pivot : dy.m0_prime) {
        VertexMap comp = hat;
        const int target = hat.values[pivot];
        for (int v : dy.m0_prime) comp.values[v] = target;
        total += pair_sum(h_metric, comp.values);
    }
    IdentityCheck chk;
    chk.lhs = total / static_cast<double>(dy.m0_prime.size());

    double on_prime = 0.0;
    for (std::size_t a = 0; a < dy.m0_prime.size(); ++a)
        for (std::size_t b = a + 1; b < dy.m0_prime.size(); ++b)
            on_prime += 2.0 * h_metric.at(hat.values[dy.m0_prime[a]], hat.values[dy.m0_prime[b]]);
    chk.rhs = pair_sum(h_metric, hat.values) - on_prime;
    chk.pass = std::abs(chk.lhs - chk.rhs) <= 1e-9 * std::max(1.0, std::abs(chk.rhs));
    return chk;
}

ImageBoundCheck image_bound_check(const VertexMap& f, const DyadicReport& dy, int m, double eps) {
    check_eps(eps);
    ImageBoundCheck chk;
    const double m_pow = std::exp((1.0 - 2.0 * eps) * std::log(static_cast<double>(m)));
    chk.bound = 2.0 + (2.0 * std::log2(static_cast<double>(m)) + 1.0) * m_pow + m_pow;
    chk.image_regime_met = image_regime_met(m, eps);

    const VertexMap hat = hat_f(f, dy);
    if (dy.m0_prime.empty()) {
        chk.max_image_size = image_count(hat.values, m);
    } else {
        for (int pivot : dy.m0_prime) {
            VertexMap comp = hat;
            const int target = hat.values[pivot];
            for (int v : dy.m0_prime) comp.values[v] = target;
            chk.max_image_size = std::max(chk.max_image_size, image_count(comp.values, m));
        }
    }
    chk.pass = static_cast<double>(chk.max_image_size) <= chk.bound + kSlack;
    return chk;
}

const InequalityRecord& CompressionTrace::record(const std::string& name) const {
    for (const auto& r : inequalities)
        if (r.name == name) return r;
    throw parameter_error("CompressionTrace: no such inequality record: " + name);
}

CompressionTrace compression_trace(const Graph& g, const Graph& h, const VertexMap& f, double eps,
                               double alpha, std::uint64_t seed) {
    check_eps(eps);
    if (!(alpha > 0.0) || alpha > 1.0) throw parameter_error("compression_trace: alpha must lie in (0, 1]");
    if (!g.is_regular() || !h.is_regular())
        throw parameter_error("compression_trace: G and H must be regular");
    if (g.vertex_count() != f.n || h.vertex_count() != f.m)
        throw parameter_error("compression_trace: dimension mismatch");
    const MetricMatrix dist_h = all_pairs_distances(h);
    if (!dist_h.all_finite()) throw degenerate_error("compression_trace: H must be connected");

    const int n = g.vertex_count();
    const int m = h.vertex_count();
    const int d = static_cast<int>(g.neighbors(0).size());
    const int delta = static_cast<int>(h.neighbors(0).size());
    if (d < 3 || delta < 3) throw parameter_error("compression_trace: degrees must be >= 3");

    CompressionTrace tr;
    tr.n = n;
    tr.m = m;
    tr.eps = eps;
    tr.alpha = alpha;
    tr.seed = seed;
    tr.f = f;
    tr.decomposition = decompose(f, m, eps);
    tr.dyadic_report = dyadic(f, m, eps);
    tr.f_hat = hat_f(f, tr.dyadic_report);
    const Compression comp = compress(f, tr.dyadic_report, seed);
    tr.f_compressed = comp.map;
    tr.pivot = comp.pivot;
    tr.ln_eta_value = ln_eta(d, alpha, eps);
    tr.image_regime_met = image_regime_met(m, eps);

    tr.edge_sum_f = edge_sum(g, dist_h, f.values);
    tr.edge_sum_hat = edge_sum(g, dist_h, tr.f_hat.values);
    tr.edge_sum_compressed = edge_sum(g, dist_h, tr.f_compressed.values);
    tr.pair_sum_f = pair_sum(dist_h, f.values);
    tr.pair_sum_hat = pair_sum(dist_h, tr.f_hat.values);
    tr.pair_sum_compressed = pair_sum(dist_h, tr.f_compressed.values);

    const std::vector<int>& prime = tr.dyadic_report.m0_prime;
    if (prime.empty()) {
        tr.expected_pair_sum_compressed = tr.pair_sum_hat;
        tr.expected_edge_sum_compressed = tr.edge_sum_hat;
        tr.pair_sum_hat_on_m0_prime = 0.0;
    } else {
        double pair_total = 0.0, edge_total = 0.0;
        for (int pivot : prime) {
            VertexMap cand = tr.f_hat;
            const int target = tr.f_hat.values[pivot];
            for (int v : prime) cand.values[v] = target;
            pair_total += pair_sum(dist_h, cand.values);
            edge_total += edge_sum(g, dist_h, cand.values);
        }
        tr.expected_pair_sum_compressed = pair_total / static_cast<double>(prime.size());
        tr.expected_edge_sum_compressed = edge_total / static_cast<double>(prime.size());
        double on_prime = 0.0;
        for (std::size_t a = 0; a < prime.size(); ++a)
            for (std::size_t b = a + 1; b < prime.size(); ++b)
                on_prime += 2.0 * dist_h.at(tr.f_hat.values[prime[a]], tr.f_hat.values[prime[b]]);
        tr.pair_sum_hat_on_m0_prime = on_prime;
    }

    const double log_dm1_m = std::log(static_cast<double>(m)) / std::log(static_cast<double>(delta - 1));

    // sums over edges/pairs meeting M0''
    std::vector<char> in_dp(n, 0);
    for (int v : tr.dyadic_report.m0_double_prime) in_dp[v] = 1;
    double edge_sum_meeting_dp = 0.0;
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (v < u && (in_dp[v] || in_dp[u])) edge_sum_meeting_dp += dist_h.at(f.values[v], f.values[u]);
    double pair_sum_meeting_dp = 0.0;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && (in_dp[v] || in_dp[u])) pair_sum_meeting_dp += dist_h.at(f.values[v], f.values[u]);

    auto push = [&](const std::string& name, double lhs, double rhs, bool hypothesis, bool asserted,
                    bool ge) {
        InequalityRecord rec;
        rec.name = name;
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.hypothesis_met = hypothesis;
        rec.asserted = asserted;
        rec.holds = ge ? lhs >= rhs - kSlack * std::max(1.0, std::abs(rhs))
                       : lhs <= rhs + kSlack * std::max(1.0, std::abs(rhs));
        tr.inequalities.push_back(rec);
    };

    // compressed edge sum <= (4d/eta) * edge sum of f; size threshold unreachable at desk scale
    const double ln_4d_over_eta = std::log(4.0 * d) - tr.ln_eta_value;
    const double rhs_edge =
        tr.edge_sum_f > 0.0 ? std::exp(ln_4d_over_eta + std::log(tr.edge_sum_f)) : 0.0;
    push("compressed_edge_sum_bound", tr.edge_sum_compressed, rhs_edge, false, false, false);

    // expected compressed pair sum >= (1/16) pair sum of f; report only
    push("expected_pair_sum_bound", tr.expected_pair_sum_compressed, tr.pair_sum_f / 16.0, false,
         false, true);

    // edge sum of f >= eta |M0'| log_{Delta-1} m; report only
    const double rhs_prime = std::exp(tr.ln_eta_value) * static_cast<double>(prime.size()) * log_dm1_m;
    push("edge_sum_vs_m0prime", tr.edge_sum_f, rhs_prime, false, false, true);

    // edge sum meeting M0'' <= 84*10^2 (log_{Delta-1} m / m) * edge sum; report only
    push("collapsed_edge_sum_bound", edge_sum_meeting_dp,
         8400.0 * (log_dm1_m / m) * tr.edge_sum_f, false, false, false);

    // pair sum meeting M0'' <= 48 (log_{Delta-1} m / m) * pair sum; report only
    push("collapsed_pair_sum_bound", pair_sum_meeting_dp,
         48.0 * (log_dm1_m / m) * tr.pair_sum_f, false, false, false);

    // exact expectation identity, asserted unconditionally
    push("expectation_identity", tr.expected_pair_sum_compressed,
         tr.pair_sum_hat - tr.pair_sum_hat_on_m0_prime, true, true, true);
    {
        InequalityRecord& rec = tr.inequalities.back();
        rec.holds = std::abs(rec.lhs - rec.rhs) <= 1e-9 * std::max(1.0, std::abs(rec.rhs));
    }

    // 8x bound, asserted under |M0'| <= 7 (n - |M0'|)
    const bool hyp_539 =
        static_cast<double>(prime.size()) <= 7.0 * static_cast<double>(n - static_cast<int>(prime.size()));
    push("pair_sum_eightfold_bound", tr.pair_sum_hat,
         8.0 * (tr.pair_sum_hat - tr.pair_sum_hat_on_m0_prime), hyp_539, hyp_539, false);

    // --- proof-trace diagnostics: layers from M0' ---
    if (!prime.empty()) {
        const std::vector<int> dist = bfs_distances(g, prime);
        int kmax = 0;
        for (int dv : dist) kmax = std::max(kmax, dv);
        tr.layer_sizes.assign(static_cast<std::size_t>(kmax) + 1, 0);
        for (int dv : dist)
            if (dv >= 0) ++tr.layer_sizes[dv];

        const double fifteen_16 = 15.0 * n / 16.0;
        std::int64_t cum = 0;
        for (int k = 0; k <= kmax; ++k) {
            cum += tr.layer_sizes[k];
            if (static_cast<double>(cum) >= fifteen_16 - kSlack) {
                tr.k0 = k;
                break;
            }
        }

        tr.layer_edge_counts.assign(static_cast<std::size_t>(std::max(kmax, 1)), 0);
        tr.atypical_edge_counts.assign(tr.layer_edge_counts.size(), 0);
        std::vector<std::vector<std::pair<int, int>>> typ_edges(tr.layer_edge_counts.size());
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) {
                if (v > u) continue;
                const int dv = dist[v], du = dist[u];
                if (dv < 0 || du < 0) continue;
                const int lo = std::min(dv, du), hi = std::max(dv, du);
                if (hi != lo + 1) continue; // E_k needs endpoints in T_k and T_{k+1}
                const std::size_t k = static_cast<std::size_t>(lo);
                if (k >= tr.layer_edge_counts.size()) continue;
                ++tr.layer_edge_counts[k];
                const double threshold =
                    (eps / 6.0) * std::pow(static_cast<double>(d - 1), -0.5 * static_cast<double>(lo)) *
                    log_dm1_m;
                if (dist_h.at(f.values[v], f.values[u]) >= threshold - kSlack)
                    ++tr.atypical_edge_counts[k];
                else
                    typ_edges[k].emplace_back(dv < du ? v : u, dv < du ? u : v);
            }

        // T_k^Typ: reachable from M0' along typical edges, one layer per step
        tr.typical_layer_sizes.assign(static_cast<std::size_t>(kmax) + 1, 0);
        std::vector<char> reach(n, 0);
        for (int v : prime) reach[v] = 1;
        tr.typical_layer_sizes[0] = static_cast<std::int64_t>(prime.size());
        for (int k = 1; k <= kmax; ++k) {
            std::vector<char> next(n, 0);
            for (const auto& [a, b] : typ_edges[static_cast<std::size_t>(k - 1)])
                if (reach[a]) next[b] = 1;
            std::int64_t count = 0;
            for (int v = 0; v < n; ++v)
                if (next[v]) {
                    reach[v] = 1;
                    ++count;
                }
            tr.typical_layer_sizes[k] = count;
        }
    }

    return tr;
}

} // namespace sgl
