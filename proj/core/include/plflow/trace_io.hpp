#pragma once

#include <array>
#include <string>
#include <vector>

#include "plflow/flow.hpp"

namespace plflow {

inline constexpr const char* kTraceCsvHeader =
    "t,S,C,lambda,einstein_residual,flat_residual,norm_l_sq,min_degeneracy_margin,dt,SK_rel";

// One CSV row per accepted step, 17-significant-digit numbers.
std::string trace_to_csv(const FlowTrace& trace);
void write_trace_csv(const FlowTrace& trace, const std::string& path);

struct TraceRows {
    std::vector<std::array<double, 10>> rows;  // column order as in the header
};

TraceRows read_trace_csv(const std::string& path);
TraceRows parse_trace_csv(const std::string& text);

}  // namespace plflow
