#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "kirwan/cohomology.hpp"
#include "kirwan/moment_data.hpp"

namespace kirwan {

using Json = nlohmann::json;

/// Parses a manifold document and checks its structure (field set, shapes,
/// nonzero weights, unique names). Alpha tables are not validated.
ManifoldData load_manifold_unchecked(std::string_view document);

/// load_manifold_unchecked followed by validate_alpha_basis; the first
/// violation is raised as a ValidationError.
ManifoldData load_manifold(std::string_view document);

/// Canonical document: points in (moment, name) order, object keys sorted,
/// zero restriction entries omitted, two-space indentation, trailing newline.
Json manifold_to_json(const ManifoldData& m);
std::string dump_manifold(const ManifoldData& m);

Json class_to_json(const ManifoldData& m, const EquivariantClass& eta);
EquivariantClass class_from_json(const ManifoldData& m, const Json& j);

Rational rational_from_json(const Json& j, const std::string& where);

}  // namespace kirwan
