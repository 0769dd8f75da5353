#pragma once

#include "fracture/io/json.hpp"

namespace fracture::io {

// The three models of a demo group with corner labels, flags and verdicts.
Json demo_report(const std::string& name, const Support& S, std::uint64_t seed = 0);
// The part compared against golden files: schema, demo, tables.
Json golden_view(const Json& report);

Json tables_json(const CospanDiagram& d);

} // namespace fracture::io
