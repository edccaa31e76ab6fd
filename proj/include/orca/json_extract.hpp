#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

namespace orca {

using json = nlohmann::json;

// Pulls the first balanced top-level JSON object (or array) out of raw model
// output: strips code fences and surrounding prose, removes trailing commas,
// then parses. Anything needing deeper repair is an error.
// Throws NoJsonFound / MalformedJson.
json extract_json(std::string_view text);

} // namespace orca
