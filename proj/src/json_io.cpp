#include "torlist/json_io.hpp"

#include <sstream>

#include "torlist/errors.hpp"

namespace torlist {

using nlohmann::json;

json to_json(const Multigraph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    if (!g.labels.empty()) {
        json labels = json::object();
        for (const auto& [v, tag] : g.labels) labels[std::to_string(v)] = tag;
        j["labels"] = labels;
    }
    return j;
}

json to_json(const TorusTriangulation& T) {
    json j = to_json(T.graph);
    j["params"] = {T.params.r, T.params.s, T.params.t};
    json coords = json::object();
    for (VertexId v = 0; v < T.graph.n; ++v) {
        auto [i, jj] = T.coord(v);
        coords[std::to_string(v)] = {i, jj};
    }
    j["coords"] = coords;
    return j;
}

json to_json(const ListAssignment& L) {
    json lists = json::object();
    for (int v = 0; v < L.size(); ++v) lists[std::to_string(v)] = L.lists[v];
    return json{{"lists", lists}};
}

json to_json(const Coloring& c) {
    json colors = json::object();
    for (const auto& [v, col] : c.assignment) colors[std::to_string(v)] = col;
    return json{{"colors", colors}};
}

json to_json(const Orientation& o) {
    json j = to_json(o.base);
    j["directed"] = json::array();
    for (const auto& [t, h] : o.directed) j["directed"].push_back({t, h});
    return j;
}

namespace {

VertexId parse_vertex_key(const std::string& key, int n) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        throw invalid_parameter("vertex key is not a number: " + key);
    }
    if (used != key.size() || v < 0 || v >= n)
        throw invalid_parameter("vertex key out of range: " + key);
    return v;
}

} // namespace

Multigraph multigraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw invalid_parameter("graph JSON needs fields n and edges");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw invalid_parameter("graph JSON field n must be a nonnegative integer");
    Multigraph g(j["n"].get<int>());
    if (!j["edges"].is_array()) throw invalid_parameter("edges must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw invalid_parameter("each edge must be a pair of vertex ids");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= g.n || b >= g.n)
            throw invalid_parameter("edge endpoint out of range");
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw invalid_parameter("labels must be an object");
        for (const auto& [key, value] : j["labels"].items()) {
            if (!value.is_string()) throw invalid_parameter("labels must map to strings");
            g.labels[parse_vertex_key(key, g.n)] = value.get<std::string>();
        }
    }
    return g;
}

ListAssignment lists_from_json(const json& j, int vertex_count) {
    if (!j.is_object() || !j.contains("lists") || !j["lists"].is_object())
        throw invalid_parameter("list JSON needs an object field lists");
    ListAssignment L(vertex_count);
    std::vector<bool> seen(vertex_count, false);
    for (const auto& [key, value] : j["lists"].items()) {
        VertexId v = parse_vertex_key(key, vertex_count);
        if (!value.is_array()) throw invalid_parameter("each list must be an array");
        for (const auto& c : value) {
            if (!c.is_number_integer() || c.get<long long>() < 0)
                throw invalid_parameter("colors must be nonnegative integers");
            L.lists[v].push_back(c.get<int>());
        }
        seen[v] = true;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) throw invalid_parameter("missing list for vertex " + std::to_string(v));
    L.normalize();
    return L;
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("colors") || !j["colors"].is_object())
        throw invalid_parameter("coloring JSON needs an object field colors");
    Coloring c;
    for (const auto& [key, value] : j["colors"].items()) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw invalid_parameter("vertex key is not a number: " + key);
        }
        if (used != key.size() || v < 0) throw invalid_parameter("bad vertex key: " + key);
        if (!value.is_number_integer() || value.get<long long>() < 0)
            throw invalid_parameter("colors must be nonnegative integers");
        c.assignment[v] = value.get<int>();
    }
    return c;
}

std::string to_dot(const Multigraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.n; ++v) {
        auto it = g.labels.find(v);
        if (it != g.labels.end())
            out << "  " << v << " [label=\"" << it->second << "\"];\n";
    }
    for (const auto& [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace torlist
