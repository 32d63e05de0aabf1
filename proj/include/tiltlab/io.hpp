#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tiltlab/algebra.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);  // InputError on failure

// Errors name the offending location, e.g. "relations[1][0].path[2]".
BoundQuiverAlgebra parse_algebra(const std::string& text);
BoundQuiverAlgebra load_algebra(const std::string& path);
Json algebra_to_json(const BoundQuiverAlgebra& a);

Representation parse_representation(const BoundQuiverAlgebra& a, const std::string& text);
Representation load_representation(const BoundQuiverAlgebra& a, const std::string& path);
Json representation_to_json(const BoundQuiverAlgebra& a, const Representation& x);

std::string format_path(const Quiver& q, const Path& p);  // "b*d", or "e_3" when trivial
std::string format_element(const Quiver& q, const AlgebraElement& x);
DimensionVector parse_vector(const std::string& text, std::size_t length);  // "1,0,2"
std::string format_vector(const DimensionVector& x);

}  // namespace tiltlab
