#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fanplanar/planarization.hpp"

namespace fanplanar {

// Drawing file format:
//   {"vertices": [id, ...],
//    "edges": [{"id": e, "source": v, "target": w}, ...],
//    "crossings": {e: [{"edge": f, "sign": +1|-1}, ...], ...},
//    "rotations": {v: [e, ...], ...},
//    "outer": {"edge": e, "segment": k, "reverse": bool},
//    "component_outer": [{"edge": e, "segment": k, "reverse": bool}, ...]}
// component_outer is optional and names the outer face of further components.
// Ids are strings; integers are accepted and read as their decimal text.
// Missing crossing lists are empty. A missing rotation is only accepted for
// vertices of degree <= 2. Unknown keys are an error.
DrawingSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const DrawingSpec& spec);

DrawingSpec parse_drawing(std::string_view text);
// Pretty-printed with sorted keys and a trailing newline.
std::string dump_drawing(const DrawingSpec& spec);

DrawingSpec load_drawing(const std::filesystem::path& path);
void save_drawing(const std::filesystem::path& path, const DrawingSpec& spec);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// Stable text rendering used for all JSON output of the library and CLI.
std::string dump_json(const nlohmann::json& doc);

// Planarization exports. Dummies carry crossing=true; each map edge is one
// segment and records the original edge it belongs to.
std::string to_graphml(const Planarization& p);
std::string to_dot(const Planarization& p);

nlohmann::json report_to_json(const ValidationReport& report);

}  // namespace fanplanar
