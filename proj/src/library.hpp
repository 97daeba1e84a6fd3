#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decision.hpp"
#include "embedding.hpp"
#include "skill.hpp"

namespace skillkit {

struct ValidationStatus {
    bool pass = false;
    int step_index = -1;    // failing step when !pass
    std::string kind;       // error kind when !pass ("no-match", "no-fixture", ...)
    std::string fixture_url;
};

struct LibraryEntry {
    std::string id; // "skill_<n>"; never reused after deletion
    Skill skill;
    std::optional<ValidationStatus> validation;
};

/// Insertion-ordered skill store with stable ids, a name index, and an
/// embedding cache. Single-writer; reads may proceed concurrently between
/// writes.
class SkillLibrary {
public:
    /// Loads the library file plus its sidecar (ids, validation statuses,
    /// next id). A missing library file yields an empty library.
    static SkillLibrary load(const std::string& library_path);
    static SkillLibrary from_skills(std::vector<Skill> skills);

    void save(const std::string& library_path) const;
    static std::string sidecar_path(const std::string& library_path);

    const std::vector<LibraryEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const LibraryEntry* find_by_name(std::string_view name) const;
    const LibraryEntry* find_by_id(std::string_view id) const;

    std::string insert_skill(Skill skill); // returns the fresh id
    bool replace_skill(const std::string& id, Skill skill);
    bool erase(const std::string& id);
    void set_validation(const std::string& id, ValidationStatus status);

    std::vector<Skill> skills() const;

    /// Cached embedding of an entry's text, computed on demand.
    const std::vector<double>& embedding_for(const LibraryEntry& entry,
                                             EmbeddingProvider& provider);
    long long next_id() const { return next_id_; }

private:
    void reindex();

    std::vector<LibraryEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> by_name_;
    std::map<std::string, std::size_t, std::less<>> by_id_;
    std::map<std::string, std::vector<double>> embedding_cache_; // id -> vector
    long long next_id_ = 1;
};

/// Text embedded for similarity: name + description + parameter names.
std::string skill_embedding_text(const Skill& skill);

/// Level-1 dedup: exact name match.
bool exact_name_duplicate(const SkillLibrary& library, const Skill& candidate);

/// Level-2 dedup: multiset Jaccard over the two skills' action-type bags.
double action_type_jaccard(const Skill& a, const Skill& b);

struct Neighbor {
    std::string id;
    const Skill* skill = nullptr;
    double similarity = 0.0;
};

/// Level-3 dedup context: top-k most similar library skills by cosine over
/// embeddings, descending; ties resolve to the older id.
std::vector<Neighbor> top_k_neighbors_text(SkillLibrary& library, const std::string& query_text,
                                           std::size_t k, EmbeddingProvider& provider);
std::vector<Neighbor> top_k_neighbors(SkillLibrary& library, const Skill& candidate,
                                      std::size_t k, EmbeddingProvider& provider);

struct CurationConfig {
    double jaccard_threshold = 0.8;
    bool pregates = true; // name + Jaccard auto-skip before insertion
};

struct ApplyOutcome {
    enum class Kind {
        Inserted,
        Updated,
        SkippedByDecision,
        SkippedDuplicateName,
        SkippedJaccard,
        Rejected
    };
    Kind kind = Kind::Rejected;
    std::string id;         // affected entry (when any)
    std::string diagnostic; // reason for skips/rejections

    bool changed_library() const { return kind == Kind::Inserted || kind == Kind::Updated; }
};

/// Applies one decision. "new" runs the pre-gates first (exact-name and
/// Jaccard near-duplicates convert to skips); "update" replaces in place and
/// keeps the id; unknown ids are rejected.
ApplyOutcome apply_decision(SkillLibrary& library, const ExtractionDecision& decision,
                            const CurationConfig& config = {});

} // namespace skillkit
