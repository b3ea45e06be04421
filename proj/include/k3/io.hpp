#ifndef K3_IO_HPP
#define K3_IO_HPP

// JSON input/output for the command-line front end.
//
// File formats (all JSON):
//   polytope: {"vertices": [[x,y,z], ...]}            integer coordinates
//   lattice:  {"gram": [[...], ...]}                  symmetric integer matrix
//   curve:    {"f2": "...", "f3": "...",              polynomial strings
//              "params": {"t1": "-1", ...},           optional, rational values
//              "points": [["0","0","1"], ...]}        optional, rational coords

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "curve.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"

namespace k3 {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not an integer: " + j.dump());
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rat(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not a rational: " + j.dump());
        }
    }
    throw InputError("expected a rational, got " + j.dump());
}

inline Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("polytope file must be an object with a \"vertices\" array");
    std::vector<LatticePoint> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 3)
            throw InputError("each vertex must be an array of 3 integers");
        pts.emplace_back(int_from_json(v[0]), int_from_json(v[1]), int_from_json(v[2]));
    }
    return Polytope::hull(pts);
}

// optional "node_order" array fixing the divisor-graph source ordering
inline std::vector<LatticePoint> node_order_from_json(const json& j) {
    std::vector<LatticePoint> order;
    if (!j.is_object() || !j.contains("node_order")) return order;
    if (!j["node_order"].is_array()) throw InputError("\"node_order\" must be an array");
    for (const auto& v : j["node_order"]) {
        if (!v.is_array() || v.size() != 3)
            throw InputError("each node_order entry must be an array of 3 integers");
        order.emplace_back(int_from_json(v[0]), int_from_json(v[1]), int_from_json(v[2]));
    }
    return order;
}

inline json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (int i = 0; i < 3; ++i) row.push_back(v.coords[i].str());
        verts.push_back(row);
    }
    return json{{"vertices", verts}};
}

inline Mat gram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
        throw InputError("lattice file must be an object with a \"gram\" array");
    Mat m;
    for (const auto& row : j["gram"]) {
        if (!row.is_array()) throw InputError("gram rows must be arrays");
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(int_from_json(x));
        m.push_back(std::move(r));
    }
    if (m.empty()) throw InputError("gram matrix is empty");
    for (const auto& r : m)
        if (r.size() != m.size()) throw InputError("gram matrix is not square");
    return m;
}

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

struct CurveInput {
    HomPoly f2, f3;
    std::vector<ProjPoint> points;  // optional seed points; may be empty
};

inline CurveInput curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("f2") || !j.contains("f3"))
        throw InputError("curve file must be an object with \"f2\" and \"f3\" strings");
    std::map<std::string, Rat> params;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw InputError("\"params\" must be an object");
        for (const auto& [k, v] : j["params"].items()) params[k] = rat_from_json(v);
    }
    CurveInput c;
    c.f2 = to_hom_poly(substitute_params(parse_poly(j["f2"].get<std::string>()), params), 2);
    c.f3 = to_hom_poly(substitute_params(parse_poly(j["f3"].get<std::string>()), params), 3);
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw InputError("\"points\" must be an array");
        for (const auto& p : j["points"]) {
            if (!p.is_array() || p.size() != 3)
                throw InputError("each point must be an array of 3 rationals");
            c.points.push_back(
                ProjPoint::make(rat_from_json(p[0]), rat_from_json(p[1]), rat_from_json(p[2])));
        }
    }
    return c;
}

inline json proj_point_to_json(const ProjPoint& p) {
    json row = json::array();
    for (int i = 0; i < 3; ++i) row.push_back(rat_str(p.coords[i]));
    return row;
}

}  // namespace k3

#endif
