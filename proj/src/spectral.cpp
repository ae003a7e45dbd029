#include "sgl/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sgl {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

} // namespace

Spectrum adjacency_spectrum(const Graph& g, double tol, int dense_cap) {
    const int n = g.vertex_count();
    if (n > dense_cap) throw resource_error("adjacency_spectrum: n exceeds dense solver cap");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const long max_rotations = 100L * n * n;
    long rotations = 0;
    if (n > 1) {
        while (off_diagonal_norm(a, n) >= tol) {
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = at(p, q);
                    if (apq == 0.0) continue;
                    if (++rotations > max_rotations)
                        throw numeric_error("adjacency_spectrum: Jacobi rotation cap exceeded",
                                            off_diagonal_norm(a, n));
                    const double app = at(p, p);
                    const double aqq = at(q, q);
                    const double theta = (aqq - app) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    for (int i = 0; i < n; ++i) {
                        const double aip = at(i, p);
                        const double aiq = at(i, q);
                        at(i, p) = c * aip - s * aiq;
                        at(i, q) = s * aip + c * aiq;
                    }
                    for (int i = 0; i < n; ++i) {
                        const double api = at(p, i);
                        const double aqi = at(q, i);
                        at(p, i) = c * api - s * aqi;
                        at(q, i) = s * api + c * aqi;
                    }
                }
            }
        }
    }

    Spectrum spec;
    spec.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) spec.eigenvalues[i] = at(i, i);
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<>());
    return spec;
}

double lambda2(const Graph& g, double tol) {
    if (g.vertex_count() < 2) throw parameter_error("lambda2: need at least 2 vertices");
    return adjacency_spectrum(g, tol).lambda(2);
}

double cheeger_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) throw resource_error("cheeger_exact: n exceeds subset-scan cap");
    if (n < 2) throw parameter_error("cheeger_exact: need at least 2 vertices");

    std::vector<char> in_s(n, 0);
    int size = 0;
    long cut = 0;
    double best = metric_inf();

    // Reflected Gray code: subsets of consecutive codes differ by one vertex,
    // so the cut count updates in O(deg).
    const std::uint64_t total = 1ULL << n;
    std::uint64_t prev_code = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint64_t code = i ^ (i >> 1);
        const std::uint64_t diff = code ^ prev_code;
        prev_code = code;
        const int v = std::countr_zero(diff);
        int inside = 0;
        for (int w : g.neighbors(v)) inside += in_s[w];
        if (in_s[v]) {
            in_s[v] = 0;
            --size;
            cut -= static_cast<long>(g.neighbors(v).size()) - 2L * inside;
        } else {
            in_s[v] = 1;
            ++size;
            cut += static_cast<long>(g.neighbors(v).size()) - 2L * inside;
        }
        if (size >= 1 && 2 * size <= n) best = std::min(best, static_cast<double>(cut) / size);
    }
    return best;
}

CheegerSandwich cheeger_sandwich_check(const Graph& g) {
    if (!g.is_regular()) throw parameter_error("cheeger_sandwich_check: graph must be regular");
    const double d = static_cast<double>(g.neighbors(0).size());
    const double l2 = lambda2(g);
    CheegerSandwich r;
    r.lower = (d - l2) / 2.0;
    r.h = cheeger_exact(g);
    r.upper = std::sqrt(2.0 * d * (d - l2));
    r.pass = (r.lower <= r.h + 1e-9) && (r.h <= r.upper + 1e-9);
    return r;
}

double classical_gamma(const Graph& g) {
    if (!g.is_regular()) throw parameter_error("classical_gamma: graph must be regular");
    const double d = static_cast<double>(g.neighbors(0).size());
    const double l2 = lambda2(g);
    if (l2 >= d - 1e-7) throw degenerate_error("classical_gamma: lambda2 = d (disconnected), gamma infinite");
    return d / (2.0 * (d - l2));
}

} // namespace sgl
