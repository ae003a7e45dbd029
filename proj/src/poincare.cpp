#include "sgl/poincare.hpp"

#include <algorithm>
#include <cmath>

#include "sgl/parallel.hpp"
#include "sgl/spectral.hpp"

namespace sgl {

namespace {

double powp(double x, double p) {
    if (x == 0.0) return 0.0;
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}

// rho^p, entrywise.
MetricMatrix power_matrix(const MetricMatrix& m, double p) {
    MetricMatrix mp(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) mp.at(i, j) = powp(m.at(i, j), p);
    return mp;
}

struct RatioSums {
    double pair_sum = 0.0; // ordered pairs incl. diagonal
    double edge_sum = 0.0; // unordered edges
};

RatioSums ratio_sums(const Graph& g, const MetricMatrix& mp, const std::vector<int>& f) {
    RatioSums s;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) s.pair_sum += 2.0 * mp.at(f[v], f[u]);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (v < u) s.edge_sum += mp.at(f[v], f[u]);
    return s;
}

void check_ratio_inputs(const Graph& g, const MetricMatrix& m, const VertexMap& f, double p) {
    if (p < 1.0) throw parameter_error("ratio: need p >= 1");
    if (f.n != g.vertex_count()) throw parameter_error("ratio: map domain size mismatch");
    if (f.m > m.size()) throw parameter_error("ratio: map range exceeds metric size");
    if (g.edge_count() == 0) throw parameter_error("ratio: graph has no edges");
}

} // namespace

double ratio(const Graph& g, const MetricMatrix& m, const VertexMap& f, double p) {
    check_ratio_inputs(g, m, f, p);
    const MetricMatrix mp = power_matrix(m, p);
    for (int v = 0; v < f.n; ++v)
        for (int u = v + 1; u < f.n; ++u)
            if (!std::isfinite(mp.at(f.values[v], f.values[u])))
                throw parameter_error("ratio: infinite distance on an image pair");
    const RatioSums s = ratio_sums(g, mp, f.values);
    if (s.edge_sum == 0.0)
        throw degenerate_error("ratio: edge sum is zero (map constant across every edge)");
    const double n = static_cast<double>(g.vertex_count());
    return (s.pair_sum / (n * n)) / (s.edge_sum / g.edge_count());
}

BruteRange gamma_bruteforce_range(const Graph& g, const MetricMatrix& m, double p,
                                  std::uint64_t begin, std::uint64_t end) {
    const int n = g.vertex_count();
    const int mm = m.size();
    const MetricMatrix mp = power_matrix(m, p);
    const double ecount = g.edge_count();
    const double nn = static_cast<double>(n) * n;

    // decode mixed-radix digits of `begin` (vertex 0 is the least significant)
    std::vector<int> f(n, 0);
    std::uint64_t idx = begin;
    for (int v = 0; v < n && idx > 0; ++v) {
        f[v] = static_cast<int>(idx % mm);
        idx /= mm;
    }

    BruteRange out;
    for (std::uint64_t i = begin; i < end; ++i) {
        const RatioSums s = ratio_sums(g, mp, f);
        if (s.edge_sum > 0.0) {
            const double r = (s.pair_sum / nn) / (s.edge_sum / ecount);
            if (!out.any || r > out.best) {
                out.best = r;
                out.best_index = i;
                out.any = true;
            }
        }
        // odometer increment
        for (int v = 0; v < n; ++v) {
            if (++f[v] < mm) break;
            f[v] = 0;
        }
    }
    return out;
}

GammaEstimate gamma_bruteforce(const Graph& g, const MetricMatrix& m, double p, std::uint64_t cap) {
    check_ratio_inputs(g, m, VertexMap{g.vertex_count(), m.size(), std::vector<int>(g.vertex_count(), 0)},
                       p);
    if (!m.all_finite()) throw parameter_error("gamma_bruteforce: metric must be finite");
    const int n = g.vertex_count();
    const int mm = m.size();
    if (n * std::log(static_cast<double>(mm)) > std::log(static_cast<double>(cap)) + 1e-12)
        throw resource_error("gamma_bruteforce: map space exceeds enumeration cap");
    std::uint64_t total = 1;
    for (int v = 0; v < n; ++v) total *= static_cast<std::uint64_t>(mm);

    const int chunks = worker_count();
    std::vector<BruteRange> results(static_cast<std::size_t>(std::min<std::uint64_t>(chunks, total)));
    parallel_chunks(total, chunks, [&](int c, std::uint64_t b, std::uint64_t e) {
        results[c] = gamma_bruteforce_range(g, m, p, b, e);
    });
    BruteRange best;
    for (const BruteRange& r : results) {
        if (!r.any) continue;
        if (!best.any || r.best > best.best ||
            (r.best == best.best && r.best_index < best.best_index))
            best = r;
    }
    if (!best.any)
        throw degenerate_error("gamma_bruteforce: every map is degenerate (m = 1?)");

    VertexMap witness{n, mm, std::vector<int>(n, 0)};
    std::uint64_t idx = best.best_index;
    for (int v = 0; v < n; ++v) {
        witness.values[v] = static_cast<int>(idx % mm);
        idx /= mm;
    }
    GammaEstimate est;
    est.lower = best.best;
    est.upper = best.best;
    est.lower_witness = std::move(witness);
    est.exact = true;
    est.provenance = "brute-force exact";
    return est;
}

GammaEstimate gamma_local_search(const Graph& g, const MetricMatrix& m, double p, int restarts,
                                 std::uint64_t seed) {
    if (restarts < 1) throw parameter_error("gamma_local_search: need restarts >= 1");
    if (!m.all_finite()) throw parameter_error("gamma_local_search: metric must be finite");
    const int n = g.vertex_count();
    const int mm = m.size();
    const MetricMatrix mp = power_matrix(m, p);
    const double ecount = g.edge_count();
    const double nn = static_cast<double>(n) * n;
    SplitMix64 root(seed);

    GammaEstimate best;
    best.lower = -1.0;
    best.provenance = "local search";

    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng = root.split(static_cast<std::uint64_t>(r));
        VertexMap f = VertexMap::uniform_random(n, mm, rng);

        bool changed = true;
        int sweeps = 0;
        while (changed && sweeps++ < 1000) {
            changed = false;
            RatioSums s = ratio_sums(g, mp, f.values);
            for (int v = 0; v < n; ++v) {
                // contribution of v to the sums, per candidate target
                const int old_t = f.values[v];
                double cur_all = 0.0, cur_adj = 0.0;
                for (int u = 0; u < n; ++u)
                    if (u != v) cur_all += mp.at(old_t, f.values[u]);
                for (int u : g.neighbors(v)) cur_adj += mp.at(old_t, f.values[u]);
                const double base_pair = s.pair_sum - 2.0 * cur_all;
                const double base_edge = s.edge_sum - cur_adj;

                // argmax over all targets, ascending scan: smallest index wins ties
                double best_ratio = -1.0;
                int best_t = -1;
                double best_all = 0.0, best_adj = 0.0;
                for (int t = 0; t < mm; ++t) {
                    double t_all = 0.0, t_adj = 0.0;
                    for (int u = 0; u < n; ++u)
                        if (u != v) t_all += mp.at(t, f.values[u]);
                    for (int u : g.neighbors(v)) t_adj += mp.at(t, f.values[u]);
                    const double edge = base_edge + t_adj;
                    if (edge <= 0.0) continue;
                    const double cand = ((base_pair + 2.0 * t_all) / nn) / (edge / ecount);
                    if (cand > best_ratio) {
                        best_ratio = cand;
                        best_t = t;
                        best_all = t_all;
                        best_adj = t_adj;
                    }
                }
                if (best_t >= 0 && best_t != old_t) {
                    f.values[v] = best_t;
                    s.pair_sum = base_pair + 2.0 * best_all;
                    s.edge_sum = base_edge + best_adj;
                    changed = true;
                }
            }
        }

        const RatioSums fin = ratio_sums(g, mp, f.values);
        if (fin.edge_sum <= 0.0) continue; // degenerate restart
        const double value = ratio(g, m, f, p);
        if (value > best.lower) {
            best.lower = value;
            best.lower_witness = f;
        }
    }
    if (!best.lower_witness)
        throw degenerate_error("gamma_local_search: all restarts degenerate");
    return best;
}

GammaEstimate gamma_upper_certificate(const Graph& g, const Graph& h, double tol, double eps,
                                      int lp_cap) {
    if (!g.is_regular()) throw parameter_error("gamma_upper_certificate: G must be regular");
    if (h.vertex_count() > lp_cap)
        throw resource_error("gamma_upper_certificate: host exceeds cut-LP cap");
    const MetricSummary hs = metric_summary(h);
    if (!hs.connected) throw parameter_error("gamma_upper_certificate: H must be connected");

    const double d = static_cast<double>(g.neighbors(0).size());
    const double l2 = lambda2(g, tol);
    if (l2 >= d - 1e-7)
        throw degenerate_error("gamma_upper_certificate: lambda2 = d (disconnected G)");

    const MetricMatrix dist_h = all_pairs_distances(h);
    const DistortionResult emb = min_l1_distortion(dist_h, lp_cap);

    GammaEstimate est;
    est.l1_distortion = emb.distortion;
    est.classical = d / (2.0 * (d - l2));
    est.lambda_2 = l2;
    est.upper = emb.distortion * est.classical;
    est.provenance = "l1-distortion certificate";
    est.spectral_expander = l2 <= 2.1 * std::sqrt(d - 1.0) + 1e-9;
    est.restricted_image_eps = eps;
    est.restricted_image_bound = 10746.0 / eps;
    return est;
}

ExtrapolationBound extrapolation_bound(double gamma_p, double p, double q, int d, double h) {
    if (h <= 0.0) throw parameter_error("extrapolation_bound: need h > 0");
    if (p < 1.0 || q < p) throw parameter_error("extrapolation_bound: need 1 <= p <= q");
    if (d < 3) throw parameter_error("extrapolation_bound: need d >= 3");
    if (gamma_p <= 0.0) throw parameter_error("extrapolation_bound: need gamma_p > 0");
    const double log_exp_branch = 12.0 * std::exp2(q) * (static_cast<double>(d) / h) * std::log(d);
    const double log_poly_branch =
        q * std::log(5.0) + (q / p) * std::log(2.0) + (q / p) * std::log(gamma_p);
    ExtrapolationBound out;
    out.exp_branch = log_exp_branch >= log_poly_branch;
    out.log_value = std::max(log_exp_branch, log_poly_branch);
    out.value = std::exp(out.log_value);
    return out;
}

double distortion_lower_bound(const Graph& g, double gamma_upper) {
    const MetricSummary s = metric_summary(g);
    if (!s.connected) throw degenerate_error("distortion_lower_bound: G disconnected");
    if (gamma_upper <= 0.0) throw parameter_error("distortion_lower_bound: need gamma_upper > 0");
    return s.average_distance / gamma_upper;
}

namespace {

void injections_rec(const MetricMatrix& dg, const MetricMatrix& dh, std::vector<int>& e,
                    std::vector<char>& used, int v, double& best) {
    const int n = dg.size();
    const int m = dh.size();
    if (v == n) {
        double max_ratio = 0.0;
        double min_ratio = metric_inf();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const double r = dh.at(e[a], e[b]) / dg.at(a, b);
                max_ratio = std::max(max_ratio, r);
                min_ratio = std::min(min_ratio, r);
            }
        best = std::min(best, max_ratio / min_ratio);
        return;
    }
    for (int t = 0; t < m; ++t) {
        if (used[t]) continue;
        used[t] = 1;
        e[v] = t;
        injections_rec(dg, dh, e, used, v + 1, best);
        used[t] = 0;
    }
}

} // namespace

double min_distortion_bruteforce(const Graph& g, const Graph& h, std::uint64_t cap) {
    const int n = g.vertex_count();
    const int m = h.vertex_count();
    if (n > m) throw parameter_error("min_distortion_bruteforce: no injection (n > m)");
    double log_count = 0.0;
    for (int i = 0; i < n; ++i) log_count += std::log(static_cast<double>(m - i));
    if (log_count > std::log(static_cast<double>(cap)) + 1e-12)
        throw resource_error("min_distortion_bruteforce: injection count exceeds cap");
    const MetricMatrix dg = all_pairs_distances(g);
    if (!dg.all_finite()) throw degenerate_error("min_distortion_bruteforce: G disconnected");
    if (n < 2) return 1.0;
    const MetricMatrix dh = all_pairs_distances(h);

    double best = metric_inf();
    std::vector<int> e(n, -1);
    std::vector<char> used(m, 0);
    injections_rec(dg, dh, e, used, 0, best);
    return best;
}

} // namespace sgl
