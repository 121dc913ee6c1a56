#pragma once

#include "bipoly/polytope.hpp"

#include "json.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bipoly {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FileFormat { kOff, kJson };

/// "off" or "json" (case-insensitive); throws std::invalid_argument otherwise.
FileFormat parse_format(const std::string& name);
/// Format from a file extension, defaulting to JSON.
FileFormat format_for_path(const std::filesystem::path& path);

/// ASCII OFF. Polygons are written with z = 0 and a single face and are read
/// back as 2-dimensional. Higher dimensions are rejected (use JSON).
void write_off(std::ostream& os, const Polytope& p);
Polytope read_off(std::istream& is);

/// {dim, vertices, edges, faces, provenance}; doubles round-trip exactly.
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

void save_polytope(const std::filesystem::path& path, const Polytope& p, FileFormat format);
Polytope load_polytope(const std::filesystem::path& path);

}  // namespace bipoly
