#pragma once

// JSON and DOT serialization. Graph JSON is
//   {"n": <int>, "edges": [[u,v],...], "labels": {"<v>": "<tag>"}}
// with 0-based ids; labels are omitted when empty. Triangulations add
// "params": [r,s,t] and "coords": {"<v>": [i,j]}. JSON round-trips
// bit-exactly through dump().

#include <string>

#include <json.hpp>

#include "torlist/alon_tarsi.hpp"
#include "torlist/list_coloring.hpp"
#include "torlist/multigraph.hpp"
#include "torlist/torus.hpp"

namespace torlist {

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const TorusTriangulation& T);
nlohmann::json to_json(const ListAssignment& L);
nlohmann::json to_json(const Coloring& c);
nlohmann::json to_json(const Orientation& o);

Multigraph multigraph_from_json(const nlohmann::json& j);
// vertex_count fixes the assignment size; every vertex needs a list.
ListAssignment lists_from_json(const nlohmann::json& j, int vertex_count);
Coloring coloring_from_json(const nlohmann::json& j);

std::string to_dot(const Multigraph& g, const std::string& name = "g");

} // namespace torlist
