#pragma once

#include "fracture/fracture/diagram.hpp"
#include "fracture/fracture/reconstruct.hpp"

#include <json.hpp>

#include <string>

namespace fracture::io {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "fracture/1";

// Canonical text: sorted keys, no insignificant whitespace, raw UTF-8.
std::string canonical(const Json& j);
Json parse(const std::string& text); // Input error on malformed text

Json to_json(const Ring& r);
Json to_json(const QMatrix& m);
Json to_json(const ChainComplex& c);
Json to_json(const ChainMap& f);
Json to_json(const Placewise& x);
Json to_json(const CospanDiagram& d);
Json to_json(const LocalGroup& g);
Json to_json(const GradedGroup& g);
Json to_json(const DiagramFlags& f);
Json to_json(const PullbackReport& r);

Ring ring_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
ChainComplex complex_from_json(const Json& j);
Placewise placewise_from_json(const Json& j);
CospanDiagram diagram_from_json(const Json& j);

// Wraps a payload as {"schema": ..., "type": type, type: payload}.
Json document(const std::string& type, const Json& payload);

} // namespace fracture::io
