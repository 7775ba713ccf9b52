#pragma once

#include <string>

#include "json.hpp"

#include "csurg/surgery/descriptor.hpp"

namespace csurg::surgery {

nlohmann::json to_json(const PageSpec& page);
nlohmann::json to_json(const FillabilityFlags& flags);
nlohmann::json to_json(const ManifoldDescriptor& m);

PageSpec page_from_json(const nlohmann::json& j);
FillabilityFlags flags_from_json(const nlohmann::json& j);
ManifoldDescriptor descriptor_from_json(const nlohmann::json& j);

// Deterministic text: JSON with sorted keys, two-space indent, trailing newline.
std::string serialize(const ManifoldDescriptor& m);
// Throws malformed_text.
ManifoldDescriptor parse_descriptor(const std::string& text);

}  // namespace csurg::surgery
