#include "sgl/approximator.hpp"

#include <algorithm>
#include <cmath>

#include "sgl/rng.hpp"

namespace sgl {

namespace {

double powp(double x, double p) {
    if (x == 0.0) return 0.0;
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}

std::vector<int> block_labels(int two_k, const Pairing& pairing) {
    std::vector<int> block(two_k, -1);
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        const auto [a, b] = pairing[i];
        if (a < 0 || a >= two_k || b < 0 || b >= two_k || a == b)
            throw parameter_error("pairing: endpoints out of range or equal");
        if (block[a] != -1 || block[b] != -1) throw parameter_error("pairing: vertex paired twice");
        block[a] = static_cast<int>(i);
        block[b] = static_cast<int>(i);
    }
    for (int v = 0; v < two_k; ++v)
        if (block[v] < 0) throw parameter_error("pairing: vertex left unpaired");
    return block;
}

struct TupleSums {
    double a = 0; // k^-2 ordered pair average
    double b = 0; // |E_U|^-1 edge average
};

TupleSums tuple_sums(const Multigraph& u, const MetricMatrix& m, double p,
                     const std::vector<int>& x) {
    TupleSums s;
    const int k = u.k;
    double pair = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pair += 2.0 * powp(m.at(x[i], x[j]), p);
    double edge = 0.0;
    for (auto [i, j] : u.edges) edge += powp(m.at(x[i], x[j]), p);
    s.a = pair / (static_cast<double>(k) * k);
    s.b = edge / static_cast<double>(u.edges.size());
    return s;
}

} // namespace

Pairing random_pairing(int two_k, std::uint64_t seed) {
    if (two_k < 2 || two_k % 2 != 0) throw parameter_error("random_pairing: need even vertex count");
    std::vector<int> perm(two_k);
    for (int i = 0; i < two_k; ++i) perm[i] = i;
    SplitMix64 rng(seed);
    for (int i = two_k - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    Pairing pairing;
    for (int i = 0; i < two_k; i += 2) pairing.emplace_back(perm[i], perm[i + 1]);
    return pairing;
}

QuotientResult build_universal_approximator(const Graph& g2k, const std::optional<Pairing>& pairing) {
    const int two_k = g2k.vertex_count();
    if (two_k % 2 != 0) throw parameter_error("build_universal_approximator: odd vertex count");
    for (int v = 0; v < two_k; ++v)
        if (g2k.neighbors(v).size() != 3)
            throw parameter_error("build_universal_approximator: source must be 3-regular");

    QuotientResult out;
    if (pairing) {
        out.pairing = *pairing;
        if (static_cast<int>(out.pairing.size()) != two_k / 2)
            throw parameter_error("build_universal_approximator: pairing size mismatch");
    } else {
        for (int i = 0; i < two_k / 2; ++i) out.pairing.emplace_back(2 * i, 2 * i + 1);
    }
    const std::vector<int> block = block_labels(two_k, out.pairing);

    out.quotient.k = two_k / 2;
    for (auto [v, u] : g2k.edges()) out.quotient.edges.emplace_back(block[v], block[u]);
    out.quotient.normalize();
    return out;
}

QuotientIdentity quotient_identity_check(const Graph& g2k, const Multigraph& u, const Pairing& pairing,
                                         const std::vector<int>& points, const MetricMatrix& m,
                                         double p) {
    if (static_cast<int>(points.size()) != u.k)
        throw parameter_error("quotient_identity_check: need one point per block");
    if (static_cast<int>(pairing.size()) != u.k)
        throw parameter_error("quotient_identity_check: pairing/quotient size mismatch");
    for (int x : points)
        if (x < 0 || x >= m.size()) throw parameter_error("quotient_identity_check: point out of range");
    const std::vector<int> block = block_labels(g2k.vertex_count(), pairing);

    QuotientIdentity res;
    for (auto [v, w] : g2k.edges()) res.lhs += powp(m.at(points[block[v]], points[block[w]]), p);
    for (auto [i, j] : u.edges) res.rhs += powp(m.at(points[i], points[j]), p);
    res.pass = std::abs(res.lhs - res.rhs) <= 1e-12 * std::max(1.0, std::abs(res.rhs));
    return res;
}

ApproximatorReport approximator_spread(const Multigraph& u, const MetricMatrix& m, double p,
                                       int trials, std::uint64_t seed,
                                       std::optional<double> d_bound, std::uint64_t exhaustive_cap) {
    if (trials < 1) throw parameter_error("approximator_spread: need trials >= 1");
    if (!m.all_finite()) throw parameter_error("approximator_spread: metric must be finite");
    if (u.edges.empty()) throw parameter_error("approximator_spread: multigraph has no edges");
    const int k = u.k;
    const int mm = m.size();

    ApproximatorReport rep;
    rep.k = k;
    rep.edge_count = static_cast<std::int64_t>(u.edges.size());
    rep.d_bound = d_bound;

    double lo = metric_inf(), hi = 0.0;
    auto consume = [&](const std::vector<int>& x) {
        ++rep.tuples_checked;
        const TupleSums s = tuple_sums(u, m, p, x);
        if (s.b == 0.0) {
            ++rep.degenerate_tuples;
            return;
        }
        const double r = s.a / s.b;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    };

    const bool exhaustive =
        k * std::log(static_cast<double>(mm)) <= std::log(static_cast<double>(exhaustive_cap));
    if (exhaustive) {
        rep.coverage = "exact";
        std::vector<int> x(k, 0);
        for (;;) {
            consume(x);
            int i = 0;
            while (i < k && ++x[i] == mm) x[i++] = 0;
            if (i == k) break;
        }
    } else {
        rep.coverage = "sampled";
        SplitMix64 rng(seed);
        std::vector<int> x(k);
        // deterministic extremal tuples: spread-out points and a max-distance two-value split
        for (int i = 0; i < k; ++i) x[i] = i % mm;
        consume(x);
        int best_a = 0, best_b = std::min(1, mm - 1);
        for (int a = 0; a < mm; ++a)
            for (int b = a + 1; b < mm; ++b)
                if (m.at(a, b) > m.at(best_a, best_b)) {
                    best_a = a;
                    best_b = b;
                }
        for (int i = 0; i < k; ++i) x[i] = 2 * i < k ? best_a : best_b;
        consume(x);
        for (int t = 0; t < trials; ++t) {
            for (int i = 0; i < k; ++i) x[i] = static_cast<int>(rng.next_below(mm));
            consume(x);
        }
    }

    if (!(lo < metric_inf()))
        throw degenerate_error("approximator_spread: every tested tuple was degenerate");
    rep.ratio_min = lo;
    rep.ratio_max = hi;
    rep.spread = hi / lo;
    rep.s_lower = hi; // A <= s B for all tuples needs s >= max A/B
    if (d_bound) {
        rep.s_upper = *d_bound * lo; // s B <= D A needs s <= D min A/B
        rep.pass = rep.spread <= *d_bound + 1e-12;
    }
    return rep;
}

TwoSidedCheck two_sided_check(const Multigraph& u, const MetricMatrix& m, double p, double d_bound,
                              double s, const std::vector<int>& points) {
    if (static_cast<int>(points.size()) != u.k)
        throw parameter_error("two_sided_check: tuple size mismatch");
    TwoSidedCheck res;
    const TupleSums sums = tuple_sums(u, m, p, points);
    res.a = sums.a;
    res.b = sums.b;
    const double slack = 1e-9 * std::max(1.0, std::abs(res.a));
    res.left_holds = res.a <= s * res.b + slack;
    res.right_holds = s * res.b <= d_bound * res.a + slack;
    res.pass = res.left_holds && res.right_holds;
    return res;
}

Multigraph complete_multigraph(int k) {
    if (k < 1) throw parameter_error("complete_multigraph: need k >= 1");
    Multigraph u;
    u.k = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) u.edges.emplace_back(i, j);
    return u;
}

} // namespace sgl
