#pragma once

#include <nlohmann/json.hpp>

namespace skillkit {

// Insertion-ordered variant used for every serialized artifact so that
// round-trips are byte-stable.
using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

} // namespace skillkit
