#include "orca/corpus.hpp"
#include "orca/errors.hpp"
#include "orca/util.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

namespace orca {

using nlohmann::json;

json trait_scores_to_json(const TraitScores& scores) {
    json subs = json::object();
    const auto& sub_names = sub_dimension_names();
    for (size_t i = 0; i < kSubDimensionCount; ++i) subs[sub_names[i]] = scores.sub_means[i];
    json aggs = json::object();
    const auto& t_names = trait_names();
    for (size_t t = 0; t < kTraitCount; ++t) aggs[t_names[t]] = scores.aggregates[t];
    return json{{"sub_means", subs}, {"aggregates", aggs}, {"chunk_count", scores.chunk_count}};
}

TraitScores trait_scores_from_json(const json& j) {
    TraitScores scores;
    const auto& subs = j.at("sub_means");
    const auto& sub_names = sub_dimension_names();
    for (size_t i = 0; i < kSubDimensionCount; ++i) {
        scores.sub_means[i] = subs.at(sub_names[i]).get<double>();
    }
    const auto& aggs = j.at("aggregates");
    const auto& t_names = trait_names();
    for (size_t t = 0; t < kTraitCount; ++t) {
        scores.aggregates[t] = aggs.at(t_names[t]).get<double>();
    }
    scores.chunk_count = j.value("chunk_count", size_t{0});
    return scores;
}

namespace {

json post_to_json(const Post& post) {
    json j{{"id", post.id}, {"text", post.text}};
    if (!post.media_captions.empty()) j["media_captions"] = post.media_captions;
    if (post.is_reply) j["is_reply"] = true;
    if (post.reply_context) j["reply_context"] = *post.reply_context;
    if (post.potential_knowledge) j["potential_knowledge"] = *post.potential_knowledge;
    if (post.profile_related) j["profile_related"] = *post.profile_related;
    if (post.personality_related) j["personality_related"] = *post.personality_related;
    if (post.psych_activities) j["psych_activities"] = *post.psych_activities;
    return j;
}

Post post_from_json(const json& j) {
    if (!j.is_object()) throw Error("post is not an object");
    Post post;
    post.id = j.value("id", "");
    if (!j.contains("text") || !j["text"].is_string()) {
        throw Error("post missing required string field 'text'");
    }
    post.text = j["text"].get<std::string>();
    if (trim(post.text).empty()) throw Error("post text is empty");
    if (j.contains("media_captions")) {
        for (const auto& c : j["media_captions"]) {
            std::string caption = c.get<std::string>();
            if (trim(caption).empty()) throw Error("empty media caption");
            post.media_captions.push_back(std::move(caption));
        }
    }
    post.is_reply = j.value("is_reply", false);
    if (j.contains("reply_context") && !j["reply_context"].is_null()) {
        post.reply_context = j["reply_context"].get<std::string>();
    }
    if (j.contains("potential_knowledge") && !j["potential_knowledge"].is_null()) {
        post.potential_knowledge = j["potential_knowledge"].get<std::string>();
    }
    if (j.contains("profile_related") && !j["profile_related"].is_null()) {
        post.profile_related = j["profile_related"].get<bool>();
    }
    if (j.contains("personality_related") && !j["personality_related"].is_null()) {
        post.personality_related = j["personality_related"].get<bool>();
    }
    if (j.contains("psych_activities") && !j["psych_activities"].is_null()) {
        post.psych_activities = j["psych_activities"].get<std::string>();
    }
    return post;
}

} // namespace

json user_to_json(const UserRecord& user) {
    json j{{"schema_version", 1}, {"user_id", user.user_id}, {"display_name", user.display_name}};
    json posts = json::array();
    for (const auto& p : user.posts) posts.push_back(post_to_json(p));
    j["posts"] = std::move(posts);
    if (user.profile) j["profile"] = *user.profile;
    if (user.trait_scores) j["trait_scores"] = trait_scores_to_json(*user.trait_scores);
    if (user.trait_report) j["trait_report"] = *user.trait_report;
    return j;
}

UserRecord user_from_json(const json& j) {
    if (!j.is_object()) throw Error("user record is not an object");
    UserRecord user;
    if (!j.contains("user_id") || !j["user_id"].is_string()) {
        throw Error("user record missing string field 'user_id'");
    }
    user.user_id = j["user_id"].get<std::string>();
    if (user.user_id.empty()) throw Error("user_id is empty");
    user.display_name = j.value("display_name", user.user_id);
    if (j.contains("posts")) {
        size_t idx = 0;
        for (const auto& p : j["posts"]) {
            try {
                user.posts.push_back(post_from_json(p));
            } catch (const std::exception& e) {
                throw Error("post " + std::to_string(idx) + ": " + e.what());
            }
            ++idx;
        }
    }
    if (j.contains("profile") && !j["profile"].is_null()) {
        user.profile = j["profile"].get<std::string>();
    }
    if (j.contains("trait_scores") && !j["trait_scores"].is_null()) {
        user.trait_scores = trait_scores_from_json(j["trait_scores"]);
    }
    if (j.contains("trait_report") && !j["trait_report"].is_null()) {
        user.trait_report = j["trait_report"].get<std::string>();
    }
    return user;
}

std::vector<UserRecord> load_corpus(const std::filesystem::path& path, const LoadOptions& opts,
                                    LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw FileNotFound(path.string());

    std::vector<UserRecord> users;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    size_t line_no = 0;
    LoadReport local;
    LoadReport& rep = report ? *report : local;

    while (std::getline(in, line)) {
        ++line_no;
        ++rep.lines;
        if (trim(line).empty()) continue;
        try {
            json j = json::parse(line);
            UserRecord user = user_from_json(j);
            if (!seen_ids.insert(user.user_id).second) {
                throw Error("duplicate user_id '" + user.user_id + "'");
            }
            users.push_back(std::move(user));
        } catch (const std::exception& e) {
            if (opts.strict) throw SchemaViolation(line_no, e.what());
            rep.errors.emplace_back(line_no, e.what());
            log_warn("skipping line " + std::to_string(line_no) + " of " + path.string() + ": " +
                     e.what());
        }
    }
    if (users.empty() && rep.errors.empty()) {
        log_warn("corpus file " + path.string() + " contains no records");
    }
    return users;
}

void save_corpus(const std::vector<UserRecord>& users, const std::filesystem::path& path) {
    std::ostringstream out;
    for (const auto& user : users) out << user_to_json(user).dump() << "\n";
    atomic_write_file(path, out.str());
}

std::vector<std::vector<Post>> chunk_posts(const std::vector<Post>& posts, size_t chunk_size) {
    if (posts.empty()) throw EmptyPostList();
    if (chunk_size == 0) throw Error("chunk_size must be >= 1");
    std::vector<std::vector<Post>> chunks;
    chunks.reserve((posts.size() + chunk_size - 1) / chunk_size);
    for (size_t i = 0; i < posts.size(); i += chunk_size) {
        size_t end = std::min(i + chunk_size, posts.size());
        chunks.emplace_back(posts.begin() + static_cast<std::ptrdiff_t>(i),
                            posts.begin() + static_cast<std::ptrdiff_t>(end));
    }
    return chunks;
}

CorpusStats corpus_stats(const std::vector<UserRecord>& users,
                         const std::vector<std::pair<std::string, std::string>>& rendered_pairs) {
    CorpusStats stats;
    stats.users = users.size();
    for (const auto& user : users) {
        stats.posts += user.posts.size();
        for (const auto& post : user.posts) {
            stats.images += post.media_captions.size();
            if (post.is_reply) ++stats.is_reply_count;
            if (post.profile_related.value_or(false)) ++stats.profile_related_count;
            if (post.personality_related.value_or(false)) ++stats.personality_related_count;
        }
    }
    if (!rendered_pairs.empty()) {
        double up = 0.0, label = 0.0;
        for (const auto& [upstream, out_label] : rendered_pairs) {
            up += static_cast<double>(whitespace_token_count(upstream));
            label += static_cast<double>(whitespace_token_count(out_label));
        }
        stats.avg_upstream_length = up / static_cast<double>(rendered_pairs.size());
        stats.avg_label_length = label / static_cast<double>(rendered_pairs.size());
    }
    return stats;
}

std::string render_stats_table(const CorpusStats& stats) {
    std::ostringstream out;
    auto row = [&out](const std::string& name, const std::string& value) {
        out << std::left << std::setw(26) << name << std::right << std::setw(12) << value << "\n";
    };
    auto real = [](double x) {
        std::ostringstream v;
        v << std::fixed << std::setprecision(2) << x;
        return v.str();
    };
    row("Metric", "Value");
    row("Users", std::to_string(stats.users));
    row("Posts", std::to_string(stats.posts));
    row("Images", std::to_string(stats.images));
    row("Is Reply", std::to_string(stats.is_reply_count));
    row("Profile Related", std::to_string(stats.profile_related_count));
    row("Personality Related", std::to_string(stats.personality_related_count));
    row("Average Upstream Length", real(stats.avg_upstream_length));
    row("Average Label Length", real(stats.avg_label_length));
    return out.str();
}

json stats_to_json(const CorpusStats& stats) {
    return json{{"users", stats.users},
                {"posts", stats.posts},
                {"images", stats.images},
                {"is_reply", stats.is_reply_count},
                {"profile_related", stats.profile_related_count},
                {"personality_related", stats.personality_related_count},
                {"average_upstream_length", stats.avg_upstream_length},
                {"average_label_length", stats.avg_label_length}};
}

} // namespace orca
