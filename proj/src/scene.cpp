#include "isosum/scene.hpp"

#include "isosum/error.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace isosum {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ValidationError, what); }

const json& field(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) invalid(fmt::format("missing field \"{}\"", key));
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) invalid(fmt::format("{} must be a number", where));
    const double d = v.get<double>();
    if (!std::isfinite(d)) invalid(fmt::format("{} must be finite", where));
    return d;
}

template <std::size_t N>
std::array<double, N> coords(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != N) invalid(fmt::format("{} must be an array of {} numbers", where, N));
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(v[i], where);
    return out;
}

Vec3 vec3(const json& v, const std::string& where) {
    const auto c = coords<3>(v, where);
    return {c[0], c[1], c[2]};
}

json to_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Polygon load_polygon(const json& doc, std::vector<std::string>* warnings) {
    const json& vs = field(doc, "vertices");
    if (!vs.is_array()) invalid("\"vertices\" must be an array");
    if (vs.size() < 3) invalid(fmt::format("polygon needs at least 3 vertices, got {}", vs.size()));
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto c = coords<2>(vs[i], fmt::format("vertex {}", i));
        pts.push_back({c[0], c[1]});
    }
    try {
        return normalize(Polygon(std::move(pts)), warnings);
    } catch (const Error& e) {
        invalid(fmt::format("polygon invariant violated: {}", e.what()));
    }
}

Polyhedron load_polyhedron(const json& doc) {
    const json& vs = field(doc, "vertices");
    const json& fs = field(doc, "faces");
    if (!vs.is_array()) invalid("\"vertices\" must be an array");
    if (!fs.is_array()) invalid("\"faces\" must be an array");
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(vec3(vs[i], fmt::format("vertex {}", i)));
    std::vector<Face> faces;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        if (!fs[f].is_array()) invalid(fmt::format("face {} must be an array of vertex indices", f));
        Face face;
        for (const auto& idx : fs[f]) {
            if (!idx.is_number_unsigned()) invalid(fmt::format("face {} has a non-index entry", f));
            face.push_back(idx.get<std::size_t>());
        }
        faces.push_back(std::move(face));
    }
    try {
        return Polyhedron(std::move(pts), std::move(faces));
    } catch (const Error& e) {
        invalid(fmt::format("polyhedron invariant violated: {}", e.what()));
    }
}

DeclaredSymmetry3 load_symmetry(const json& s, std::size_t i) {
    const std::string where = fmt::format("symmetry {}", i);
    const json& type = field(s, "type");
    if (!type.is_string()) invalid(where + ": \"type\" must be a string");
    DeclaredSymmetry3 out;
    out.point = vec3(field(s, "point"), where + " point");
    if (type == "rotation") {
        out.kind = DeclaredSymmetry3::Kind::Rotation;
        out.direction = vec3(field(s, "direction"), where + " direction");
        const json& order = field(s, "order");
        if (!order.is_number_unsigned() || order.get<unsigned>() < 2) {
            invalid(where + ": \"order\" must be an integer >= 2");
        }
        out.angle = 2.0 * std::numbers::pi / order.get<unsigned>();
    } else if (type == "reflection") {
        out.kind = DeclaredSymmetry3::Kind::Reflection;
        out.direction = vec3(field(s, "normal"), where + " normal");
    } else {
        invalid(where + ": unknown type " + type.dump());
    }
    if (norm(out.direction) == 0.0) invalid(where + ": zero direction");
    return out;
}

}  // namespace

bool operator==(const Scene& a, const Scene& b) {
    if (a.kind != b.kind || a.polygon != b.polygon || a.polyhedron != b.polyhedron) return false;
    if (a.symmetries.size() != b.symmetries.size()) return false;
    for (std::size_t i = 0; i < a.symmetries.size(); ++i) {
        const auto& s = a.symmetries[i];
        const auto& t = b.symmetries[i];
        if (s.kind != t.kind || s.point != t.point || s.direction != t.direction || s.angle != t.angle) return false;
    }
    return true;
}

Scene parse_scene(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(ErrorKind::ParseError, fmt::format("line {}, column {}: malformed JSON", line, column));
    }
    if (!doc.is_object()) invalid("scene must be a JSON object");
    const json& kind = field(doc, "kind");
    Scene scene;
    if (kind == "polygon2") {
        scene.kind = SceneKind::Polygon2;
        scene.polygon = load_polygon(doc, &scene.warnings);
    } else if (kind == "polyhedron3") {
        scene.kind = SceneKind::Polyhedron3;
        scene.polyhedron = load_polyhedron(doc);
        if (const auto it = doc.find("symmetries"); it != doc.end()) {
            if (!it->is_array()) invalid("\"symmetries\" must be an array");
            for (std::size_t i = 0; i < it->size(); ++i) scene.symmetries.push_back(load_symmetry((*it)[i], i));
        }
    } else {
        invalid(fmt::format("unknown kind {}", kind.dump()));
    }
    return scene;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) invalid(fmt::format("cannot read {}", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string serialize_scene(const Scene& scene) {
    json doc;
    if (scene.kind == SceneKind::Polygon2) {
        doc["kind"] = "polygon2";
        json vs = json::array();
        for (const auto& v : scene.polygon->vertices()) vs.push_back(json::array({v.x, v.y}));
        doc["vertices"] = std::move(vs);
    } else {
        doc["kind"] = "polyhedron3";
        json vs = json::array();
        for (const auto& v : scene.polyhedron->vertices()) vs.push_back(to_json(v));
        doc["vertices"] = std::move(vs);
        doc["faces"] = scene.polyhedron->faces();
        if (!scene.symmetries.empty()) {
            json syms = json::array();
            for (const auto& s : scene.symmetries) {
                json j;
                j["point"] = to_json(s.point);
                if (s.kind == DeclaredSymmetry3::Kind::Rotation) {
                    j["type"] = "rotation";
                    j["direction"] = to_json(s.direction);
                    j["order"] = std::lround(2.0 * std::numbers::pi / s.angle);
                } else {
                    j["type"] = "reflection";
                    j["normal"] = to_json(s.direction);
                }
                syms.push_back(std::move(j));
            }
            doc["symmetries"] = std::move(syms);
        }
    }
    return doc.dump(2) + "\n";
}

std::string to_string(SceneKind kind) { return kind == SceneKind::Polygon2 ? "polygon2" : "polyhedron3"; }

}  // namespace isosum
