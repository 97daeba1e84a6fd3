#pragma once

#include <memory>
#include <string>

namespace skillkit {

/// Text-completion client used by the extraction pipeline.
class LlmClient {
public:
    virtual ~LlmClient() = default;
    virtual std::string complete(const std::string& prompt) = 0;
};

/// Fully deterministic client: responses are read from
/// <dir>/<sha256(prompt)>.txt. Throws ClientError when no fixture exists.
class ReplayClient : public LlmClient {
public:
    explicit ReplayClient(std::string dir) : dir_(std::move(dir)) {}
    std::string complete(const std::string& prompt) override;

private:
    std::string dir_;
};

struct HttpClientSettings {
    std::string endpoint; // e.g. "http://localhost:8000"
    std::string api_key;
    std::string model;
    double temperature = 0.0;
};

/// Chat-completions client for an OpenAI-compatible endpoint.
class HttpLlmClient : public LlmClient {
public:
    explicit HttpLlmClient(HttpClientSettings settings) : settings_(std::move(settings)) {}
    std::string complete(const std::string& prompt) override;

private:
    HttpClientSettings settings_;
};

/// Wraps another client and records each response under
/// <dir>/<sha256(prompt)>.txt for later replay.
class RecordingClient : public LlmClient {
public:
    RecordingClient(std::unique_ptr<LlmClient> inner, std::string dir)
        : inner_(std::move(inner)), dir_(std::move(dir)) {}
    std::string complete(const std::string& prompt) override;

private:
    std::unique_ptr<LlmClient> inner_;
    std::string dir_;
};

} // namespace skillkit
