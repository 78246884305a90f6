#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "category.hpp"
#include "error.hpp"
#include "groupoid.hpp"
#include "gspace.hpp"
#include "hypergroupoid.hpp"
#include "representations.hpp"

namespace hgc::io {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Files.  All writers emit canonical form: object keys sorted, two-space
// indent, trailing newline; loaders are strict (unknown keys rejected).
// ---------------------------------------------------------------------------

std::string canonical_dump(const Json& j);
Json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// ---------------------------------------------------------------------------
// Value forms: rationals as reduced "p/q" (or "n"), scalars as ["re", "im"].
// ---------------------------------------------------------------------------

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const char* what);
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const char* what);

// ---------------------------------------------------------------------------
// Object schemas
// ---------------------------------------------------------------------------

GroupoidData groupoid_from_json(const Json& j);
Json groupoid_to_json(const GroupoidData& d);
GroupoidPtr load_groupoid(const std::filesystem::path& path);

GSpaceData space_from_json(const Json& j);
Json space_to_json(const GSpaceData& d);
MeasuredPtr load_space(const std::filesystem::path& path, GroupoidPtr g);

// Function files carry their context: groupoid and both measured spaces,
// inline or as file-reference strings resolved against the file's directory.
struct ArrowBundle {
  GroupoidPtr groupoid;
  MeasuredPtr dst, src;
  Arrow arrow;
};
ArrowBundle arrow_from_json(const Json& j, const std::filesystem::path& base_dir);
ArrowBundle load_arrow(const std::filesystem::path& path);
Json arrow_to_json(const Arrow& f);

// ---------------------------------------------------------------------------
// Result serializers
// ---------------------------------------------------------------------------

Json report_to_json(const ValidationReport& report);
Json orbits_to_json(const OrbitSpace& os);
Json table_to_json(const HypergroupoidTable& t);
Json matrix_to_json(const WeightedMatrix& m);

}  // namespace hgc::io
