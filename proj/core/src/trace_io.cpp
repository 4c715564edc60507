#include "plflow/trace_io.hpp"

#include <fstream>
#include <sstream>

#include "number_format.hpp"
#include "plflow/errors.hpp"

namespace plflow {

using detail::fmt17;

std::string trace_to_csv(const FlowTrace& trace) {
    std::ostringstream out;
    out << kTraceCsvHeader << "\n";
    for (const auto& r : trace.records) {
        out << fmt17(r.t) << ',' << fmt17(r.S) << ',' << fmt17(r.C) << ',' << fmt17(r.lam)
            << ',' << fmt17(r.einstein_residual) << ',' << fmt17(r.flat_residual) << ','
            << fmt17(r.norm_l_sq) << ',' << fmt17(r.min_margin) << ',' << fmt17(r.dt) << ','
            << fmt17(r.sk_rel) << "\n";
    }
    return out.str();
}

void write_trace_csv(const FlowTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write trace file '" + path + "'");
    out << trace_to_csv(trace);
    if (!out) throw IoError("write failure on '" + path + "'");
}

TraceRows parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTraceCsvHeader)
        throw IoError("trace CSV: unexpected header");
    TraceRows rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 10> row;
        std::istringstream ls(line);
        std::string cell;
        for (int c = 0; c < 10; ++c) {
            if (!std::getline(ls, cell, ','))
                throw IoError("trace CSV: short row");
            row[c] = std::stod(cell);
        }
        if (std::getline(ls, cell, ',')) throw IoError("trace CSV: extra column");
        rows.rows.push_back(row);
    }
    return rows;
}

TraceRows read_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trace file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace_csv(buf.str());
}

}  // namespace plflow
