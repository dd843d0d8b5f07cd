#pragma once

// JSON schema for a curvature tensor:
//   {"components": [[[[R_1111, R_1112, ...], ...], ...], ...]}
// a 4x4x4x4 nested array; components[i-1][j-1][k-1][l-1] = R_ijkl with the
// 1-based index convention of the literature. Extra top-level keys are
// ignored on read, so report files that embed "components" can be re-read.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "curvpinch/curvature.hpp"

namespace curvpinch {

nlohmann::json tensor_to_json(const RiemannTensor& r);

/// Throws ParseError on a schema mismatch.
RiemannTensor tensor_from_json(const nlohmann::json& j);

/// Parses text; malformed JSON is reported with its line and column.
RiemannTensor parse_tensor_text(std::string_view text);

RiemannTensor read_tensor_file(const std::filesystem::path& path);

}  // namespace curvpinch
