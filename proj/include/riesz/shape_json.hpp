#pragma once

#include <string>

#include <json.hpp>

#include "riesz/shapes.hpp"

namespace riesz {

// JSON shape description, the CLI's geometric input format.  Nested objects
// with a "type" tag: ball, box, halfspace, star2d, union_of_balls, union,
// intersection, difference, translate, scale, parallel_body.
Shape shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const Shape& s);

Shape shape_from_json_string(const std::string& text);

// Builtin fixture lookup: "ball", "box", "two-balls", "slit-ball",
// "two-lobe-x", "star-cos3" (optional ":<eps>" suffix on star-cos3 and
// slit-ball).  Throws validation_error for unknown names.
Shape builtin_shape(const std::string& name);

} // namespace riesz
