#pragma once

#include <string>

#include "json.hpp"

#include "csurg/cobordism/homology.hpp"

namespace csurg::cobordism {

nlohmann::json to_json(const Handle& h);
nlohmann::json to_json(const CobordismSpec& c);
nlohmann::json to_json(const HomologyProfile& p);
nlohmann::json to_json(const SteinCheck& r);
nlohmann::json to_json(const SteinObstructionReport& r);

CobordismSpec cobordism_from_json(const nlohmann::json& j);
HomologyProfile profile_from_json(const nlohmann::json& j);

// Sorted keys, two-space indent, trailing newline.
std::string serialize(const nlohmann::json& j);

}  // namespace csurg::cobordism
