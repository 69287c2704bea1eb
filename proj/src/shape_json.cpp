#include "riesz/shape_json.hpp"

#include <optional>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

using nlohmann::json;

Vec vec_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() < 1)
        throw validation_error(std::string("shape json: ") + what + " must be a numeric array");
    std::vector<double> xs;
    for (const auto& v : j) {
        if (!v.is_number())
            throw validation_error(std::string("shape json: ") + what + " must be numeric");
        xs.push_back(v.get<double>());
    }
    return Vec(xs);
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
    return a;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw validation_error(std::string("shape json: missing field '") + name + "'");
    return *it;
}

} // namespace

Shape shape_from_json(const json& j) {
    if (!j.is_object()) throw validation_error("shape json: expected an object");
    std::string type = field(j, "type").get<std::string>();
    if (type == "ball")
        return Shape::ball(vec_from_json(field(j, "center"), "center"),
                           field(j, "radius").get<double>());
    if (type == "box")
        return Shape::box(vec_from_json(field(j, "min"), "min"),
                          vec_from_json(field(j, "max"), "max"));
    if (type == "halfspace")
        return Shape::half_space(vec_from_json(field(j, "normal"), "normal"),
                                 field(j, "offset").get<double>());
    if (type == "star2d") {
        std::vector<double> samples;
        for (const auto& s : field(j, "samples")) samples.push_back(s.get<double>());
        return Shape::star_body_2d(std::move(samples));
    }
    if (type == "union_of_balls") {
        std::vector<std::pair<Vec, double>> balls;
        for (const auto& b : field(j, "balls"))
            balls.emplace_back(vec_from_json(field(b, "center"), "center"),
                               field(b, "radius").get<double>());
        return Shape::union_of_balls(std::move(balls));
    }
    if (type == "union" || type == "intersection") {
        std::vector<Shape> children;
        for (const auto& c : field(j, "children")) children.push_back(shape_from_json(c));
        return type == "union" ? Shape::csg_union(std::move(children))
                               : Shape::csg_intersection(std::move(children));
    }
    if (type == "difference")
        return Shape::csg_difference(shape_from_json(field(j, "left")),
                                     shape_from_json(field(j, "right")));
    if (type == "translate")
        return Shape::translate(shape_from_json(field(j, "child")),
                                vec_from_json(field(j, "offset"), "offset"));
    if (type == "scale")
        return Shape::scale(shape_from_json(field(j, "child")),
                            field(j, "factor").get<double>());
    if (type == "parallel_body") {
        std::vector<Vec> points;
        for (const auto& p : field(j, "points")) points.push_back(vec_from_json(p, "point"));
        return Shape::parallel_body(points, field(j, "ell").get<double>());
    }
    throw validation_error("shape json: unknown type '" + type + "'");
}

json shape_to_json(const Shape& s) {
    const Shape::Node& n = s.node();
    json j;
    switch (s.kind()) {
        case Shape::Kind::Ball:
            j["type"] = "ball";
            j["center"] = vec_to_json(n.center);
            j["radius"] = n.radius;
            break;
        case Shape::Kind::Box:
            j["type"] = "box";
            j["min"] = vec_to_json(n.lo);
            j["max"] = vec_to_json(n.hi);
            break;
        case Shape::Kind::HalfSpace:
            j["type"] = "halfspace";
            j["normal"] = vec_to_json(n.normal);
            j["offset"] = n.offset;
            break;
        case Shape::Kind::StarBody2D:
            j["type"] = "star2d";
            j["samples"] = n.samples;
            break;
        case Shape::Kind::UnionOfBalls: {
            j["type"] = "union_of_balls";
            json balls = json::array();
            for (const auto& [c, r] : n.balls)
                balls.push_back(json{{"center", vec_to_json(c)}, {"radius", r}});
            j["balls"] = balls;
            break;
        }
        case Shape::Kind::Union:
        case Shape::Kind::Intersection: {
            j["type"] = s.kind() == Shape::Kind::Union ? "union" : "intersection";
            json children = json::array();
            for (const auto& c : n.children) children.push_back(shape_to_json(c));
            j["children"] = children;
            break;
        }
        case Shape::Kind::Difference:
            j["type"] = "difference";
            j["left"] = shape_to_json(n.children[0]);
            j["right"] = shape_to_json(n.children[1]);
            break;
        case Shape::Kind::Translate:
            j["type"] = "translate";
            j["child"] = shape_to_json(n.children[0]);
            j["offset"] = vec_to_json(n.shift);
            break;
        case Shape::Kind::Scale:
            j["type"] = "scale";
            j["child"] = shape_to_json(n.children[0]);
            j["factor"] = n.factor;
            break;
    }
    return j;
}

Shape shape_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("shape json: parse error: ") + e.what());
    }
    return shape_from_json(j);
}

Shape builtin_shape(const std::string& name) {
    auto split = name.find(':');
    std::string base = name.substr(0, split);
    std::optional<double> param;
    if (split != std::string::npos) {
        try {
            param = std::stod(name.substr(split + 1));
        } catch (...) {
            throw validation_error("builtin shape: bad parameter in '" + name + "'");
        }
    }
    if (base == "ball") return fixtures::unit_ball(2);
    if (base == "box") return fixtures::unit_box(2);
    if (base == "two-balls") return fixtures::two_balls();
    if (base == "slit-ball") return fixtures::slit_ball(param.value_or(0.1));
    if (base == "two-lobe-x") return fixtures::two_lobe_x(param.value_or(0.1));
    if (base == "star-cos3") return fixtures::star_cos3(param.value_or(0.05));
    throw validation_error("builtin shape: unknown name '" + base + "'");
}

} // namespace riesz
