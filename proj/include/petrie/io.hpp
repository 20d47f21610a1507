#pragma once

#include "petrie/types.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace petrie {

/// Aligned grid, one row per line.
std::string format_matrix(const IntMatrix& a);
/// Rational rows are scaled by the common denominator for display:
/// "1/6 *" followed by the integer grid. Plain grid when already integral.
std::string format_matrix(const RatMatrix& a);

nlohmann::json matrix_json(const IntMatrix& a);

std::string read_text_file(const std::filesystem::path& file);
/// Writes through a temporary file and renames it into place.
void write_text_file(const std::filesystem::path& file, const std::string& text);

}  // namespace petrie
