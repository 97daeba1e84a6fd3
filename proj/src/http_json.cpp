#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "http_json.hpp"

#include "errors.hpp"

namespace skillkit {

njson http_post_json(const std::string& endpoint, const std::string& path,
                     const std::string& api_key, const njson& body) {
    httplib::Client client(endpoint);
    client.set_connection_timeout(15);
    client.set_read_timeout(120);
    httplib::Headers headers;
    if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

    auto result = client.Post(path, headers, body.dump(), "application/json");
    if (!result)
        throw ClientError("HTTP request to " + endpoint + path +
                          " failed: " + httplib::to_string(result.error()));
    if (result->status < 200 || result->status >= 300)
        throw ClientError("HTTP " + std::to_string(result->status) + " from " + endpoint + path +
                          ": " + result->body.substr(0, 200));
    njson parsed = njson::parse(result->body, nullptr, false);
    if (parsed.is_discarded())
        throw ClientError("non-JSON response from " + endpoint + path);
    return parsed;
}

} // namespace skillkit
