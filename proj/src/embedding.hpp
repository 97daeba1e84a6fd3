#pragma once

#include <string>
#include <vector>

namespace skillkit {

/// Fixed-dimension text embedding. Identical text must yield an identical
/// vector.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::vector<double> embed(const std::string& text) = 0;
    virtual std::string id() const = 0;
    virtual int dim() const = 0;
};

/// Deterministic local fallback: character trigrams feature-hashed into
/// d=256 buckets, L2-normalized. Keeps CI independent of hosted models.
class LocalTrigramEmbedding : public EmbeddingProvider {
public:
    static constexpr int kDim = 256;
    std::vector<double> embed(const std::string& text) override;
    std::string id() const override { return "local-trigram-256"; }
    int dim() const override { return kDim; }
};

struct HttpEmbeddingSettings {
    std::string endpoint;
    std::string api_key;
    std::string model;
    int dim = 1536;
};

/// Embeddings from an OpenAI-compatible /v1/embeddings endpoint.
class HttpEmbeddingProvider : public EmbeddingProvider {
public:
    explicit HttpEmbeddingProvider(HttpEmbeddingSettings settings)
        : settings_(std::move(settings)) {}
    std::vector<double> embed(const std::string& text) override;
    std::string id() const override { return "http:" + settings_.model; }
    int dim() const override { return settings_.dim; }

private:
    HttpEmbeddingSettings settings_;
};

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

} // namespace skillkit
