#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgl/errors.hpp"
#include "sgl/metric.hpp"
#include "sgl/rng.hpp"

namespace sgl {

// Simple undirected graph on {0,...,n-1} with sorted adjacency lists.
// Invariants: no loops, no duplicate neighbors, adjacency symmetric; when
// `degree` is set every vertex has exactly that many neighbors.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 1) throw parameter_error("Graph: vertex count must be >= 1");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int k);
    static Graph cycle(int k);
    static Graph path(int k);

    int vertex_count() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    std::optional<int> degree() const { return degree_; }
    bool is_regular() const;
    // Caches the uniform degree; throws if the graph is not regular.
    void mark_regular();

    // Checks all structural invariants; throws parameter_error on violation.
    void validate() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::optional<int> degree_;
};

// Multigraph on {0,...,k-1}; parallel edges and self-loops allowed. Edges are
// an explicit multiset of pairs (u <= v), kept sorted.
struct Multigraph {
    int k = 0;
    std::vector<std::pair<int, int>> edges;

    void normalize();
    void validate() const;
};

// A function {0,...,n-1} -> {0,...,m-1}.
struct VertexMap {
    int n = 0;
    int m = 0;
    std::vector<int> values;

    static VertexMap identity(int n);
    static VertexMap constant(int n, int m, int value);
    static VertexMap uniform_random(int n, int m, SplitMix64& rng);

    int operator()(int v) const { return values[v]; }
    void validate() const;
    // Fiber sizes |f^{-1}(f(v))| per domain vertex.
    std::vector<std::int64_t> fiber_sizes() const;
    int image_size() const;
};

// --- graph-core operations ---

// Uniform sample from G(n,d) via the configuration (pairing) model with full
// restart on loops/multi-edges; exact uniformity over simple graphs.
// Deterministic given seed. Requires n >= d+1, n*d even, d >= 3.
Graph sample_regular_graph(int n, int d, std::uint64_t seed);

// All labeled simple d-regular graphs on {0,...,n-1}, each exactly once.
// Backtracking over partner sets of the smallest unsaturated vertex.
std::vector<Graph> enumerate_regular_graphs(int n, int d, int cap = 8);

// Exact unweighted shortest-path distances (BFS per source); infinity across
// components.
MetricMatrix all_pairs_distances(const Graph& g);

struct MetricSummary {
    bool connected = false;
    double diameter = 0.0;       // infinity when disconnected
    double average_distance = 0; // over ordered pairs incl. diagonal; infinity when disconnected
};

MetricSummary metric_summary(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_of; // new label -> original vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset);

// {v : dist_g(v, S) <= radius}; ball(S, 0) = S. Sorted output.
std::vector<int> ball(const Graph& g, const std::vector<int>& subset, int radius);

// BFS distances from a source set; -1 encodes unreachable.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

} // namespace sgl
