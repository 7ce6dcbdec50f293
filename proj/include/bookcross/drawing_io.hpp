#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bookcross/drawing.hpp"

namespace bookcross {

/// Canonical on-disk form:
///   {"m": .., "n": .., "k": .., "order": ["b0", "w3", ...],
///    "edges": [[i, j, page], ...]}
/// Edges are written row-major (black index, then white index).
nlohmann::json drawing_to_json(const BookDrawing& drawing);

/// Rejects missing fields, duplicate or missing edges and out-of-range
/// pages with InputError. Unknown fields are ignored.
BookDrawing drawing_from_json(const nlohmann::json& doc);

std::string dump_drawing(const BookDrawing& drawing);
BookDrawing parse_drawing(std::string_view text);

}  // namespace bookcross
