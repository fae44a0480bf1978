#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace braidinv {

// Names of the built-in documents (addressable as @name on the CLI).
const std::vector<std::string>& dataset_names();

// The built-in document with that name. Throws Error for unknown names.
nlohmann::json dataset(const std::string& name);

} // namespace braidinv
