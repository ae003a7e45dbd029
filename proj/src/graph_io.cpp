#include "sgl/graph_io.hpp"

#include <fstream>

namespace sgl {

using nlohmann::json;

namespace {

// CLI outputs wrap their payload in a result envelope; readers accept both
// the bare schema and an envelope holding it under `key`.
const json& unwrap(const json& j, const char* key) {
    if (j.is_object() && !j.contains("n") && !j.contains("k") && j.contains(key)) return j.at(key);
    return j;
}

} // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& raw) {
    const json& j = unwrap(raw, "graph");
    if (!j.contains("n") || !j.contains("edges")) throw io_error("graph json: missing n/edges");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw io_error("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges); // rejects duplicates and loops
}

json multigraph_to_json(const Multigraph& u) {
    Multigraph c = u;
    c.normalize();
    json j;
    j["n"] = c.k;
    json edges = json::array();
    for (auto [a, b] : c.edges) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

Multigraph multigraph_from_json(const json& raw) {
    const json& j = unwrap(raw, "multigraph");
    if (!j.contains("n") || !j.contains("edges")) throw io_error("multigraph json: missing n/edges");
    Multigraph u;
    u.k = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw io_error("multigraph json: edge must be a pair");
        u.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    u.normalize();
    u.validate();
    return u;
}

json metric_to_json(const MetricMatrix& m) {
    json j;
    j["k"] = m.size();
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int l = 0; l < m.size(); ++l) {
            const double v = m.at(i, l);
            if (std::isfinite(v))
                row.push_back(v);
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    return j;
}

MetricMatrix metric_from_json(const json& raw) {
    const json& j = unwrap(raw, "metric");
    if (!j.contains("k") || !j.contains("dist")) throw io_error("metric json: missing k/dist");
    const int k = j.at("k").get<int>();
    MetricMatrix m(k);
    const auto& rows = j.at("dist");
    if (static_cast<int>(rows.size()) != k) throw io_error("metric json: row count mismatch");
    for (int i = 0; i < k; ++i) {
        const auto& row = rows[i];
        if (static_cast<int>(row.size()) != k) throw io_error("metric json: column count mismatch");
        for (int l = 0; l < k; ++l) m.at(i, l) = row[l].is_null() ? metric_inf() : row[l].get<double>();
    }
    return m;
}

json vertex_map_to_json(const VertexMap& f) {
    json j;
    j["n"] = f.n;
    j["m"] = f.m;
    j["values"] = f.values;
    return j;
}

VertexMap vertex_map_from_json(const json& raw) {
    const json& j = unwrap(raw, "map");
    if (!j.contains("n") || !j.contains("m") || !j.contains("values"))
        throw io_error("vertex map json: missing n/m/values");
    VertexMap f;
    f.n = j.at("n").get<int>();
    f.m = j.at("m").get<int>();
    f.values = j.at("values").get<std::vector<int>>();
    f.validate();
    return f;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace sgl
