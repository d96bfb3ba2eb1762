#pragma once

#include <string>

#include <json.hpp>

#include "cnp/endspace.hpp"

namespace cnp {

using nlohmann::json;

EndSpace space_from_json(const json& j);
json space_to_json(const EndSpace& space);
EndSpace load_space(const std::string& path);

ClopenProfile profile_from_json(const json& j, const EndSpace& space);
json profile_to_json(const ClopenProfile& p);
ClopenProfile load_profile(const std::string& path, const EndSpace& space);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace cnp
