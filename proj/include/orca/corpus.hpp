#pragma once

#include "orca/traits.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orca {

// One social post; media captions are pre-computed image descriptions.
struct Post {
    std::string id;
    std::string text;
    std::vector<std::string> media_captions;
    bool is_reply = false;
    std::optional<std::string> reply_context;
    std::optional<std::string> potential_knowledge;
    std::optional<bool> profile_related;
    std::optional<bool> personality_related;
    std::optional<std::string> psych_activities;

    bool operator==(const Post&) const = default;
};

struct UserRecord {
    std::string user_id;
    std::string display_name;
    std::vector<Post> posts;
    std::optional<std::string> profile;
    std::optional<TraitScores> trait_scores;
    std::optional<std::string> trait_report;

    bool operator==(const UserRecord&) const = default;
};

struct CorpusStats {
    size_t users = 0;
    size_t posts = 0;
    size_t images = 0;
    size_t is_reply_count = 0;
    size_t profile_related_count = 0;
    size_t personality_related_count = 0;
    double avg_upstream_length = 0.0;
    double avg_label_length = 0.0;

    bool operator==(const CorpusStats&) const = default;
};

nlohmann::json trait_scores_to_json(const TraitScores& scores);
TraitScores trait_scores_from_json(const nlohmann::json& j);

nlohmann::json user_to_json(const UserRecord& user);
UserRecord user_from_json(const nlohmann::json& j);

struct LoadOptions {
    bool strict = false; // abort on first malformed line
};

struct LoadReport {
    size_t lines = 0;
    std::vector<std::pair<size_t, std::string>> errors; // (line number, reason)
};

// Line-delimited corpus, one user per line. Lenient mode skips malformed
// lines and reports them; strict mode throws SchemaViolation on the first.
std::vector<UserRecord> load_corpus(const std::filesystem::path& path,
                                    const LoadOptions& opts = {},
                                    LoadReport* report = nullptr);

void save_corpus(const std::vector<UserRecord>& users, const std::filesystem::path& path);

// Splits posts into ceil(n/chunk_size) chunks preserving order; only the
// final chunk may be short. Throws EmptyPostList.
std::vector<std::vector<Post>> chunk_posts(const std::vector<Post>& posts,
                                           size_t chunk_size = 10);

// Tallies post-level counts over users and token-length averages over the
// (rendered upstream, serialized label) pairs emitted by the dataset builder.
CorpusStats corpus_stats(const std::vector<UserRecord>& users,
                         const std::vector<std::pair<std::string, std::string>>& rendered_pairs);

// Aligned two-column text table, one row per statistic.
std::string render_stats_table(const CorpusStats& stats);

nlohmann::json stats_to_json(const CorpusStats& stats);

} // namespace orca
