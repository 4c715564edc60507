#pragma once

#include <stdexcept>
#include <string>

namespace plflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex construction
struct DuplicateVertexInTet : Error { using Error::Error; };
struct VertexIndexOutOfRange : Error { using Error::Error; };
struct EmptyComplex : Error { using Error::Error; };
struct UnknownBuiltin : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Per-tetrahedron geometry
struct InvalidTriangle : Error { using Error::Error; };
struct DegenerateTet : Error { using Error::Error; };
struct OutOfModelRange : Error { using Error::Error; };

// Metric-level
struct InvalidMetric : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

struct DegenerateMetric : Error {
    int tet_index;
    DegenerateMetric(int tet, const std::string& msg)
        : Error(msg), tet_index(tet) {}
};

struct StepTooLarge : Error { using Error::Error; };
struct NotEinstein : Error { using Error::Error; };

// Flow traces
struct TraceTooShort : Error { using Error::Error; };
struct MissingSnapshots : Error { using Error::Error; };

// File I/O
struct MeshFormatError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace plflow
