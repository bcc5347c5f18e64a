#pragma once

#include <json.hpp>

#include "coxwalls/core.hpp"
#include "coxwalls/paths.hpp"

namespace coxwalls::detail {

using Json = nlohmann::ordered_json;

Json system_to_json(const CoxeterSystem& sys);
Json path_to_json(const CoxeterSystem& sys, const EdgePath& p);
/// Parses a word given as a string of names or an array of names.
Word word_from_json(const Json& value, const CoxeterSystem& sys, const std::string& field);

}  // namespace coxwalls::detail
