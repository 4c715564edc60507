#pragma once

#include <string>

#include <Eigen/Dense>

#include "plflow/metric.hpp"
#include "plflow/triangulation.hpp"

namespace plflow {

// On-disk mesh document: combinatorics plus the metric and background K.
// The JSON layout is fixed: num_vertices (int), tetrahedra (4-arrays of
// 0-based vertex indices), edges (sorted pairs in canonical order), lengths
// (positive numbers parallel to edges), optional K (default 0) and name.
// The loader re-derives the canonical edge list and rejects files whose
// edges array disagrees with it.
struct MeshData {
    std::string name;  // may be empty
    Triangulation tri;
    Eigen::VectorXd lengths;
    double K = 0.0;

    PLMetric metric() const { return PLMetric(lengths); }
};

// Deterministic writer: fixed key order, numbers with 17 significant
// digits, so write -> read -> write is byte-identical.
std::string mesh_to_json(const MeshData& mesh);
MeshData mesh_from_json(const std::string& text);

MeshData load_mesh(const std::string& path);              // MeshFormatError / IoError
void save_mesh(const MeshData& mesh, const std::string& path);

}  // namespace plflow
