#include "plflow/mesh_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "number_format.hpp"
#include "plflow/errors.hpp"

namespace plflow {

using detail::fmt17;

std::string mesh_to_json(const MeshData& mesh) {
    std::ostringstream out;
    out << "{\n";
    if (!mesh.name.empty()) out << "  \"name\": " << nlohmann::json(mesh.name).dump() << ",\n";
    out << "  \"num_vertices\": " << mesh.tri.num_vertices << ",\n";
    out << "  \"K\": " << fmt17(mesh.K) << ",\n";

    out << "  \"tetrahedra\": [\n";
    for (int t = 0; t < mesh.tri.num_tets(); ++t) {
        const auto& tet = mesh.tri.tetrahedra[t];
        out << "    [" << tet[0] << ", " << tet[1] << ", " << tet[2] << ", " << tet[3] << "]"
            << (t + 1 < mesh.tri.num_tets() ? ",\n" : "\n");
    }
    out << "  ],\n";

    out << "  \"edges\": [\n";
    for (int e = 0; e < mesh.tri.num_edges(); ++e) {
        const auto& p = mesh.tri.edges[e];
        out << "    [" << p[0] << ", " << p[1] << "]"
            << (e + 1 < mesh.tri.num_edges() ? ",\n" : "\n");
    }
    out << "  ],\n";

    out << "  \"lengths\": [\n";
    for (int e = 0; e < mesh.tri.num_edges(); ++e)
        out << "    " << fmt17(mesh.lengths[e]) << (e + 1 < mesh.tri.num_edges() ? ",\n" : "\n");
    out << "  ]\n}\n";
    return out.str();
}

MeshData mesh_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MeshFormatError(std::string("mesh JSON parse failure: ") + e.what());
    }
    if (!doc.is_object()) throw MeshFormatError("mesh file: top level must be an object");

    auto require = [&](const char* key) -> const nlohmann::json& {
        auto it = doc.find(key);
        if (it == doc.end())
            throw MeshFormatError(std::string("mesh file: missing key '") + key + "'");
        return *it;
    };

    MeshData mesh;
    const auto& nv = require("num_vertices");
    if (!nv.is_number_integer())
        throw MeshFormatError("mesh file: num_vertices must be an integer");

    const auto& jtets = require("tetrahedra");
    if (!jtets.is_array()) throw MeshFormatError("mesh file: tetrahedra must be an array");
    std::vector<std::array<int, 4>> tets;
    for (const auto& jt : jtets) {
        if (!jt.is_array() || jt.size() != 4)
            throw MeshFormatError("mesh file: each tetrahedron must be a 4-array");
        std::array<int, 4> tet;
        for (int i = 0; i < 4; ++i) {
            if (!jt[i].is_number_integer())
                throw MeshFormatError("mesh file: vertex indices must be integers");
            tet[i] = jt[i].get<int>();
        }
        tets.push_back(tet);
    }
    try {
        mesh.tri = build_triangulation(nv.get<int>(), tets);
    } catch (const Error& e) {
        throw MeshFormatError(std::string("mesh file: invalid complex: ") + e.what());
    }

    const auto& jedges = require("edges");
    if (!jedges.is_array() ||
        jedges.size() != static_cast<std::size_t>(mesh.tri.num_edges()))
        throw MeshFormatError("mesh file: edges array does not match the derived edge set");
    for (int e = 0; e < mesh.tri.num_edges(); ++e) {
        const auto& jp = jedges[e];
        if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number_integer() ||
            !jp[1].is_number_integer() || jp[0].get<int>() != mesh.tri.edges[e][0] ||
            jp[1].get<int>() != mesh.tri.edges[e][1])
            throw MeshFormatError("mesh file: edge " + std::to_string(e) +
                                  " disagrees with the canonical edge order");
    }

    const auto& jlens = require("lengths");
    if (!jlens.is_array() ||
        jlens.size() != static_cast<std::size_t>(mesh.tri.num_edges()))
        throw MeshFormatError("mesh file: lengths array must parallel the edges array");
    mesh.lengths.resize(mesh.tri.num_edges());
    for (int e = 0; e < mesh.tri.num_edges(); ++e) {
        if (!jlens[e].is_number())
            throw MeshFormatError("mesh file: lengths must be numbers");
        const double v = jlens[e].get<double>();
        if (!std::isfinite(v) || !(v > 0.0))
            throw MeshFormatError("mesh file: length " + std::to_string(e) +
                                  " must be a positive finite number");
        mesh.lengths[e] = v;
    }

    if (auto it = doc.find("K"); it != doc.end()) {
        if (!it->is_number() || !std::isfinite(it->get<double>()))
            throw MeshFormatError("mesh file: K must be a finite number");
        mesh.K = it->get<double>();
    }
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw MeshFormatError("mesh file: name must be a string");
        mesh.name = it->get<std::string>();
    }
    return mesh;
}

MeshData load_mesh(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open mesh file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return mesh_from_json(buf.str());
}

void save_mesh(const MeshData& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write mesh file '" + path + "'");
    out << mesh_to_json(mesh);
    if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace plflow
