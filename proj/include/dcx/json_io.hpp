#pragma once

#include <nlohmann/json_fwd.hpp>

#include "dcx/geometry.hpp"
#include "dcx/objects.hpp"

// Wire formats:
//   set       {"dim": n, "points": [[int,...],...]}           (+ optional "window")
//   function  {"dim": n, "window": {"lower": [...], "upper": [...]}?,
//              "entries": [{"x": [int,...], "v": "p/q"}]}
//   values are decimal strings "p/q" or "p"; +inf is never serialized (absence = +inf)
//   polytope  {"facets": [{"a": ["p/q",...], "b": "p/q"}]}

namespace dcx {

nlohmann::json to_json(const Box& b);
nlohmann::json to_json(const DiscreteSet& s, const std::optional<Box>& window = std::nullopt);
nlohmann::json to_json(const DiscreteFunction& f);
nlohmann::json to_json(const HPolytope& p);

Box box_from_json(const nlohmann::json& j);
DiscreteSet set_from_json(const nlohmann::json& j);
DiscreteFunction function_from_json(const nlohmann::json& j);

/// Accepts either a set or a function object; sets become indicator functions
/// (window kept when present).
DiscreteFunction object_from_json(const nlohmann::json& j, bool* was_set = nullptr);

std::string dumps(const nlohmann::json& j);

} // namespace dcx
