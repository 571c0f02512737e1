#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "prymtopo/flat.hpp"

namespace prymtopo::flat {

// {"family", "k", "edges": [[x, y], ...], "pairings": [[i, j, m], ...],
//  "cone_spec": [{"label", "multiple"}, ...]}
nlohmann::ordered_json to_json(const KPolygon& p);

std::string render_svg(const KPolygon& p);
std::string render_svg(const TranslationSurface& s);

// Throws IoError if the file cannot be written.
void emit_svg(const KPolygon& p, const std::filesystem::path& path);
void emit_svg(const TranslationSurface& s, const std::filesystem::path& path);

} // namespace prymtopo::flat
