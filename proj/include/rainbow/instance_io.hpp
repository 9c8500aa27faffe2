#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow/graph.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

// Instance format: {"n":int,"left":int,"right":int,"edges":[[u,v,c],...]}.
// Writers sort edges by (c,u,v); readers accept any order.

Json instance_to_json(const ColoredMultigraph& g);
ColoredMultigraph instance_from_json(const Json& j);

/// Compact single-line canonical text, no trailing newline.
std::string dump_instance(const ColoredMultigraph& g);
ColoredMultigraph parse_instance(std::string_view text);

Json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const Json& j);

/// Reads either one JSON document or JSON lines (one instance per line).
std::vector<ColoredMultigraph> read_instances(std::istream& in);

}  // namespace rainbow
