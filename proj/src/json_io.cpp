#include "dcx/json_io.hpp"

#include <nlohmann/json.hpp>

namespace dcx {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) {
    json a = json::array();
    for (Coord c : p) a.push_back(c);
    return a;
}

Point point_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("point must be an array of integers");
    Point p;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw parse_error("point coordinate must be an integer");
        p.push_back(v.get<Coord>());
    }
    return p;
}

int dim_from_json(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw parse_error("missing integer field 'dim'");
    return j["dim"].get<int>();
}

} // namespace

json to_json(const Box& b) {
    return json{{"lower", point_to_json(b.lower)}, {"upper", point_to_json(b.upper)}};
}

json to_json(const DiscreteSet& s, const std::optional<Box>& window) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(point_to_json(p));
    json j{{"dim", s.dim}, {"points", std::move(pts)}};
    if (window) j["window"] = to_json(*window);
    return j;
}

json to_json(const DiscreteFunction& f) {
    json es = json::array();
    for (const auto& [x, v] : f.entries)
        es.push_back(json{{"x", point_to_json(x)}, {"v", rat_to_string(v)}});
    json j{{"dim", f.dim}, {"entries", std::move(es)}};
    if (f.window) j["window"] = to_json(*f.window);
    return j;
}

json to_json(const HPolytope& p) {
    json fs = json::array();
    for (const auto& f : p.facets) {
        json a = json::array();
        for (const auto& c : f.normal) a.push_back(rat_to_string(c));
        fs.push_back(json{{"a", std::move(a)}, {"b", rat_to_string(f.offset)}});
    }
    return json{{"dim", p.dim}, {"facets", std::move(fs)}};
}

Box box_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
        throw parse_error("window must have 'lower' and 'upper'");
    return Box(point_from_json(j["lower"]), point_from_json(j["upper"]));
}

DiscreteSet set_from_json(const json& j) {
    int dim = dim_from_json(j);
    if (!j.contains("points") || !j["points"].is_array())
        throw parse_error("set needs a 'points' array");
    std::set<Point> pts;
    for (const auto& p : j["points"]) {
        Point q = point_from_json(p);
        if (int(q.size()) != dim) throw parse_error("point of wrong dimension in set");
        pts.insert(std::move(q));
    }
    if (pts.empty()) throw parse_error("set must be nonempty");
    return DiscreteSet(dim, std::move(pts));
}

DiscreteFunction function_from_json(const json& j) {
    int dim = dim_from_json(j);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw parse_error("function needs an 'entries' array");
    std::map<Point, Rat> entries;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("v"))
            throw parse_error("entry needs 'x' and 'v'");
        Point x = point_from_json(e["x"]);
        if (int(x.size()) != dim) throw parse_error("entry point of wrong dimension");
        if (!e["v"].is_string()) throw parse_error("entry value must be a string rational");
        entries[std::move(x)] = rat_from_string(e["v"].get<std::string>());
    }
    if (entries.empty()) throw parse_error("function domain must be nonempty");
    std::optional<Box> window;
    if (j.contains("window")) window = box_from_json(j["window"]);
    return DiscreteFunction(dim, std::move(entries), std::move(window));
}

DiscreteFunction object_from_json(const json& j, bool* was_set) {
    if (!j.is_object()) throw parse_error("object must be a JSON object");
    if (j.contains("points")) {
        if (was_set) *was_set = true;
        DiscreteSet s = set_from_json(j);
        std::optional<Box> window;
        if (j.contains("window")) window = box_from_json(j["window"]);
        return indicator(s, std::move(window));
    }
    if (j.contains("entries")) {
        if (was_set) *was_set = false;
        return function_from_json(j);
    }
    throw parse_error("object needs 'points' (set) or 'entries' (function)");
}

std::string dumps(const json& j) { return j.dump(2) + "\n"; }

} // namespace dcx
