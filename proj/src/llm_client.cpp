#include "llm_client.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "digest.hpp"
#include "errors.hpp"
#include "http_json.hpp"
#include "jsonx.hpp"

namespace skillkit {

namespace fs = std::filesystem;

std::string ReplayClient::complete(const std::string& prompt) {
    fs::path path = fs::path(dir_) / (sha256_hex(prompt) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ClientError("no replay fixture for prompt digest " + sha256_hex(prompt) + " in " +
                          dir_);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string HttpLlmClient::complete(const std::string& prompt) {
    if (settings_.endpoint.empty())
        throw ClientError("LLM endpoint not configured (set SKILLKIT_LLM_ENDPOINT)");
    njson body;
    body["model"] = settings_.model;
    body["messages"] = njson::array({njson{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = settings_.temperature;
    njson response =
        http_post_json(settings_.endpoint, "/v1/chat/completions", settings_.api_key, body);
    try {
        return response.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const njson::exception& e) {
        throw ClientError(std::string("malformed chat completion response: ") + e.what());
    }
}

std::string RecordingClient::complete(const std::string& prompt) {
    std::string response = inner_->complete(prompt);
    fs::create_directories(dir_);
    fs::path path = fs::path(dir_) / (sha256_hex(prompt) + ".txt");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write replay fixture: " + path.string());
    out << response;
    return response;
}

} // namespace skillkit
