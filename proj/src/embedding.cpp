#include "embedding.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "errors.hpp"
#include "http_json.hpp"

namespace skillkit {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

void l2_normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (double& x : v) x /= norm;
}

} // namespace

std::vector<double> LocalTrigramEmbedding::embed(const std::string& text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    std::vector<double> v(kDim, 0.0);
    if (lowered.size() < 3) {
        if (!lowered.empty()) v[fnv1a64(lowered) % kDim] += 1.0;
    } else {
        for (std::size_t i = 0; i + 3 <= lowered.size(); ++i)
            v[fnv1a64(std::string_view(lowered).substr(i, 3)) % kDim] += 1.0;
    }
    l2_normalize(v);
    return v;
}

std::vector<double> HttpEmbeddingProvider::embed(const std::string& text) {
    if (settings_.endpoint.empty())
        throw ClientError("embedding endpoint not configured (set SKILLKIT_EMBED_ENDPOINT)");
    njson body;
    body["model"] = settings_.model;
    body["input"] = text;
    njson response = http_post_json(settings_.endpoint, "/v1/embeddings", settings_.api_key, body);
    try {
        auto vec = response.at("data").at(0).at("embedding").get<std::vector<double>>();
        l2_normalize(vec);
        return vec;
    } catch (const njson::exception& e) {
        throw ClientError(std::string("malformed embeddings response: ") + e.what());
    }
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty() || a.size() != b.size()) return 0.0;
    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        norm_a += a[i] * a[i];
        norm_b += b[i] * b[i];
    }
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

} // namespace skillkit
