#pragma once

#include <string>

#include "json.hpp"

#include "sgl/graph.hpp"
#include "sgl/metric.hpp"

namespace sgl {

// Graph file schema: {"n": int, "edges": [[u,v],...]} with 0-based vertices.
// Writers emit u < v sorted lexicographically; readers accept any order but
// reject duplicates/loops. Multigraph files use the same schema, permit u = v
// and repeated pairs, and are written in the same canonical order.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json multigraph_to_json(const Multigraph& u);
Multigraph multigraph_from_json(const nlohmann::json& j);

// Metric schema: {"k": int, "dist": [[...],...]}; infinity serialized as null.
nlohmann::json metric_to_json(const MetricMatrix& m);
MetricMatrix metric_from_json(const nlohmann::json& j);

// Vertex map schema: {"n": int, "m": int, "values": [...]}.
nlohmann::json vertex_map_to_json(const VertexMap& f);
VertexMap vertex_map_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace sgl
