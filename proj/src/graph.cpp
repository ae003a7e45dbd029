#include "sgl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sgl {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw parameter_error("Graph: endpoint out of range");
        if (u == v) throw parameter_error("Graph: self-loop in simple graph");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw parameter_error("Graph: duplicate edge in simple graph");
    }
    return g;
}

Graph Graph::complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (v != u) g.adj_[u].push_back(v);
    if (k >= 2) g.degree_ = k - 1;
    return g;
}

Graph Graph::cycle(int k) {
    if (k < 3) throw parameter_error("cycle: need k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    Graph g = from_edges(k, e);
    g.degree_ = 2;
    return g;
}

Graph Graph::path(int k) {
    if (k < 1) throw parameter_error("path: need k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return from_edges(k, e);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_regular() const {
    for (const auto& nb : adj_)
        if (nb.size() != adj_[0].size()) return false;
    return true;
}

void Graph::mark_regular() {
    if (!is_regular()) throw parameter_error("mark_regular: graph is not regular");
    degree_ = static_cast<int>(adj_[0].size());
}

void Graph::validate() const {
    for (int u = 0; u < n_; ++u) {
        const auto& nb = adj_[u];
        if (!std::is_sorted(nb.begin(), nb.end())) throw parameter_error("Graph: adjacency not sorted");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw parameter_error("Graph: duplicate neighbor");
        for (int v : nb) {
            if (v < 0 || v >= n_) throw parameter_error("Graph: neighbor out of range");
            if (v == u) throw parameter_error("Graph: self-loop");
            if (!has_edge(v, u)) throw parameter_error("Graph: asymmetric adjacency");
        }
        if (degree_ && static_cast<int>(nb.size()) != *degree_)
            throw parameter_error("Graph: degree field inconsistent with adjacency");
    }
    if (degree_ && (static_cast<std::int64_t>(n_) * *degree_) % 2 != 0)
        throw parameter_error("Graph: n*d odd");
}

void Multigraph::normalize() {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
}

void Multigraph::validate() const {
    for (auto [u, v] : edges)
        if (u < 0 || u >= k || v < 0 || v >= k) throw parameter_error("Multigraph: endpoint out of range");
}

VertexMap VertexMap::identity(int n) {
    VertexMap f{n, n, std::vector<int>(n)};
    std::iota(f.values.begin(), f.values.end(), 0);
    return f;
}

VertexMap VertexMap::constant(int n, int m, int value) {
    if (value < 0 || value >= m) throw parameter_error("VertexMap: constant value out of range");
    return VertexMap{n, m, std::vector<int>(n, value)};
}

VertexMap VertexMap::uniform_random(int n, int m, SplitMix64& rng) {
    VertexMap f{n, m, std::vector<int>(n)};
    for (int v = 0; v < n; ++v) f.values[v] = static_cast<int>(rng.next_below(m));
    return f;
}

void VertexMap::validate() const {
    if (static_cast<int>(values.size()) != n) throw parameter_error("VertexMap: size mismatch");
    for (int x : values)
        if (x < 0 || x >= m) throw parameter_error("VertexMap: value out of range");
}

std::vector<std::int64_t> VertexMap::fiber_sizes() const {
    std::vector<std::int64_t> count(m, 0);
    for (int x : values) ++count[x];
    std::vector<std::int64_t> out(n);
    for (int v = 0; v < n; ++v) out[v] = count[values[v]];
    return out;
}

int VertexMap::image_size() const {
    std::vector<char> seen(m, 0);
    int out = 0;
    for (int x : values)
        if (!seen[x]) {
            seen[x] = 1;
            ++out;
        }
    return out;
}

Graph sample_regular_graph(int n, int d, std::uint64_t seed) {
    if (d < 3) throw parameter_error("sample_regular_graph: need d >= 3");
    if (n <= d) throw parameter_error("sample_regular_graph: need n >= d+1");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw parameter_error("sample_regular_graph: n*d must be even");

    SplitMix64 rng(seed);
    const int half_edges = n * d;
    std::vector<int> stubs(half_edges);
    // stub i belongs to vertex i/d
    for (;;) {
        std::iota(stubs.begin(), stubs.end(), 0);
        // Fisher-Yates; pairing consecutive entries of the shuffled array is a
        // uniform perfect matching of the stubs.
        for (int i = half_edges - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<std::pair<int, int>> edges;
        edges.reserve(half_edges / 2);
        bool simple = true;
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < half_edges && simple; i += 2) {
            const int u = stubs[i] / d;
            const int v = stubs[i + 1] / d;
            if (u == v) {
                simple = false;
                break;
            }
            for (int w : adj[u])
                if (w == v) {
                    simple = false;
                    break;
                }
            if (!simple) break;
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.emplace_back(u, v);
        }
        if (!simple) continue; // full restart keeps the law uniform
        Graph g = Graph::from_edges(n, edges);
        g.mark_regular();
        return g;
    }
}

namespace {

void enumerate_rec(int n, int d, std::vector<std::vector<int>>& adj, std::vector<int>& deg,
                   std::vector<Graph>& out) {
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] < d) {
            v = i;
            break;
        }
    if (v < 0) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int w : adj[u])
                if (u < w) edges.emplace_back(u, w);
        Graph g = Graph::from_edges(n, edges);
        g.mark_regular();
        out.push_back(std::move(g));
        return;
    }
    const int need = d - deg[v];
    // candidate partners: unsaturated vertices above v not already adjacent
    std::vector<int> cand;
    for (int w = v + 1; w < n; ++w) {
        if (deg[w] >= d) continue;
        bool adjacent = false;
        for (int x : adj[v])
            if (x == w) adjacent = true;
        if (!adjacent) cand.push_back(w);
    }
    if (static_cast<int>(cand.size()) < need) return;
    // choose `need` partners from cand (lexicographic combinations)
    std::vector<int> pick(need);
    const int c = static_cast<int>(cand.size());
    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        bool ok = true;
        for (int t = 0; t < need && ok; ++t)
            if (deg[cand[idx[t]]] >= d) ok = false;
        if (ok) {
            for (int t = 0; t < need; ++t) {
                const int w = cand[idx[t]];
                adj[v].push_back(w);
                adj[w].push_back(v);
                ++deg[v];
                ++deg[w];
            }
            enumerate_rec(n, d, adj, deg, out);
            for (int t = 0; t < need; ++t) {
                const int w = cand[idx[t]];
                adj[v].pop_back();
                adj[w].pop_back();
                --deg[v];
                --deg[w];
            }
        }
        // next combination
        int t = need - 1;
        while (t >= 0 && idx[t] == c - need + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < need; ++s) idx[s] = idx[s - 1] + 1;
    }
}

} // namespace

std::vector<Graph> enumerate_regular_graphs(int n, int d, int cap) {
    if (n > cap) throw resource_error("enumerate_regular_graphs: n exceeds cap");
    if (n < 1 || d < 0 || d >= n) throw parameter_error("enumerate_regular_graphs: bad parameters");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0) return {};
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    std::vector<Graph> out;
    enumerate_rec(n, d, adj, deg, out);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
    if (sources.empty()) throw parameter_error("bfs_distances: empty source set");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int s : sources) {
        if (s < 0 || s >= g.vertex_count()) throw parameter_error("bfs_distances: source out of range");
        if (dist[s] == 0) continue;
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

MetricMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    MetricMatrix m(n);
    for (int s = 0; s < n; ++s) {
        const std::vector<int> dist = bfs_distances(g, {s});
        for (int v = 0; v < n; ++v) m.at(s, v) = dist[v] < 0 ? metric_inf() : static_cast<double>(dist[v]);
    }
    return m;
}

MetricSummary metric_summary(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<int> dist = bfs_distances(g, {0});
    MetricSummary s;
    s.connected = std::find(dist.begin(), dist.end(), -1) == dist.end();
    if (!s.connected) {
        s.diameter = metric_inf();
        s.average_distance = metric_inf();
        return s;
    }
    double total = 0.0;
    int diam = 0;
    for (int u = 0; u < n; ++u) {
        const std::vector<int> du = bfs_distances(g, {u});
        for (int v = 0; v < n; ++v) {
            total += du[v];
            diam = std::max(diam, du[v]);
        }
    }
    s.diameter = diam;
    s.average_distance = total / (static_cast<double>(n) * n);
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw parameter_error("induced_subgraph: empty subset");
    std::vector<int> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> new_label(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw parameter_error("induced_subgraph: vertex out of range");
        new_label[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && new_label[v] >= 0) edges.emplace_back(new_label[u], new_label[v]);
    return InducedSubgraph{Graph::from_edges(static_cast<int>(verts.size()), edges), verts};
}

std::vector<int> ball(const Graph& g, const std::vector<int>& subset, int radius) {
    if (subset.empty()) throw parameter_error("ball: empty subset");
    if (radius < 0) throw parameter_error("ball: negative radius");
    const std::vector<int> dist = bfs_distances(g, subset);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) out.push_back(v);
    return out;
}

} // namespace sgl
