#include "rainbow/instance_io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(std::string("instance field '") + key + "' missing or not an integer");
    }
    return j.at(key).get<int>();
}

}  // namespace

Json edges_to_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v, e.c});
    return arr;
}

std::vector<Edge> edges_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("edge list must be an array");
    std::vector<Edge> edges;
    edges.reserve(j.size());
    for (const Json& item : j) {
        if (!item.is_array() || item.size() != 3 ||
            !std::all_of(item.begin(), item.end(), [](const Json& x) { return x.is_number_integer(); })) {
            throw InputError("each edge must be an array [u,v,c] of integers");
        }
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
    }
    return edges;
}

Json instance_to_json(const ColoredMultigraph& g) {
    Json j;
    j["n"] = g.n;
    j["left"] = g.left_size;
    j["right"] = g.right_size;
    j["edges"] = edges_to_json(canonicalized(g).edges);
    return j;
}

ColoredMultigraph instance_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    ColoredMultigraph g;
    g.n = int_field(j, "n");
    g.left_size = int_field(j, "left");
    g.right_size = int_field(j, "right");
    if (!j.contains("edges")) throw InputError("instance field 'edges' missing");
    g.edges = edges_from_json(j.at("edges"));
    return g;
}

std::string dump_instance(const ColoredMultigraph& g) { return instance_to_json(g).dump(); }

ColoredMultigraph parse_instance(std::string_view text) {
    Json j = Json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON instance");
    return instance_from_json(j);
}

std::vector<ColoredMultigraph> read_instances(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::vector<ColoredMultigraph> out;
    Json whole = Json::parse(text, nullptr, false);
    if (!whole.is_discarded()) {
        out.push_back(instance_from_json(whole));
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_instance(line));
    }
    if (out.empty()) throw InputError("no instance found in input");
    return out;
}

}  // namespace rainbow
