#pragma once

#include <json.hpp>

#include "mspec/classical.hpp"
#include "mspec/matform.hpp"
#include "mspec/sail.hpp"
#include "mspec/seq.hpp"
#include "mspec/surd.hpp"
#include "mspec/triplegraph.hpp"

namespace mspec {

// All numbers are serialized as decimal strings so values of any size
// survive every JSON consumer; key order is fixed.
using Json = nlohmann::ordered_json;

Json json_of(const Mat2& m);
Json json_of(const QuadForm& f);
Json json_of(const RadicalRatio& r, unsigned digits);
Json json_of(const Surd& s, unsigned digits);
Json json_of(const FareyCode& c);
Json json_of(const Point& p);

std::string rat_str(const Rat& r);

// SVG with the two cone boundary lines and the sail polyline.
std::string sail_svg(const SailPolyline& p, const Cone& c);

}  // namespace mspec
