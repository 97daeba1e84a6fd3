#pragma once

#include <string>

#include "jsonx.hpp"

namespace skillkit {

/// POSTs a JSON body to endpoint+path with an optional bearer token and
/// returns the parsed JSON response. Throws ClientError on transport or
/// non-2xx failures.
njson http_post_json(const std::string& endpoint, const std::string& path,
                     const std::string& api_key, const njson& body);

} // namespace skillkit
