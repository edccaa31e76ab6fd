#include "orca/traits.hpp"
#include "orca/errors.hpp"
#include "orca/util.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

namespace orca {

const std::array<std::string, kTraitCount>& trait_names() {
    static const std::array<std::string, kTraitCount> names = {
        "Openness", "Conscientiousness", "Extraversion", "Agreeableness", "Neuroticism"};
    return names;
}

const std::array<std::string, kSubDimensionCount>& sub_dimension_names() {
    static const std::array<std::string, kSubDimensionCount> names = {
        // Openness
        "Imaginative", "Artistic", "Emotionally-aware", "Actions", "Intellectual", "Liberal",
        // Conscientiousness
        "Self-assured", "Organized", "Dutiful", "Ambitious", "Disciplined", "Cautious",
        // Extraversion
        "Friendly", "Sociable", "Assertive", "Energetic", "Adventurous", "Cheerful",
        // Agreeableness
        "Trusting", "Genuine", "Generous", "Compliance", "Humble", "Empathetic",
        // Neuroticism
        "Anxiety-prone", "Aggressive", "Melancholy", "Self-conscious", "Impulsive", "Stress-prone"};
    return names;
}

TraitDimension trait_of_sub(size_t sub_index) {
    return static_cast<TraitDimension>(sub_index / kSubsPerTrait);
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string key = to_lower(trim(name));
    if (key == "humblel") key = "humble"; // misspelling seen in the wild
    return key;
}

const std::unordered_map<std::string, size_t>& sub_index_map() {
    static const std::unordered_map<std::string, size_t> map = [] {
        std::unordered_map<std::string, size_t> m;
        const auto& names = sub_dimension_names();
        for (size_t i = 0; i < names.size(); ++i) m[normalize_name(names[i])] = i;
        return m;
    }();
    return map;
}

} // namespace

std::optional<size_t> sub_dimension_index(std::string_view name) {
    const auto& m = sub_index_map();
    auto it = m.find(normalize_name(name));
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::optional<size_t> trait_index(std::string_view name) {
    std::string key = to_lower(trim(name));
    const auto& names = trait_names();
    for (size_t i = 0; i < names.size(); ++i) {
        if (to_lower(names[i]) == key) return i;
    }
    return std::nullopt;
}

TraitScores aggregate_chunks(const std::vector<ChunkScore>& chunks) {
    if (chunks.empty()) throw EmptyChunkList();
    TraitScores out;
    out.chunk_count = chunks.size();
    for (size_t s = 0; s < kSubDimensionCount; ++s) {
        double sum = 0.0;
        for (const auto& chunk : chunks) sum += chunk.scores[s];
        out.sub_means[s] = sum / static_cast<double>(chunks.size());
    }
    for (size_t t = 0; t < kTraitCount; ++t) {
        double agg = 0.0;
        for (size_t j = 0; j < kSubsPerTrait; ++j) agg += out.sub_means[t * kSubsPerTrait + j];
        out.aggregates[t] = agg;
    }
    return out;
}

TraitVector to_vector(const TraitScores& scores) {
    TraitVector v{};
    for (size_t s = 0; s < kSubDimensionCount; ++s) v[s] = scores.sub_means[s];
    for (size_t t = 0; t < kTraitCount; ++t) v[kSubDimensionCount + t] = scores.aggregates[t];
    return v;
}

TraitScores from_vector(const TraitVector& v, size_t chunk_count) {
    TraitScores s;
    for (size_t i = 0; i < kSubDimensionCount; ++i) s.sub_means[i] = v[i];
    for (size_t t = 0; t < kTraitCount; ++t) s.aggregates[t] = v[kSubDimensionCount + t];
    s.chunk_count = chunk_count;
    return s;
}

double pss(const TraitVector& a, const TraitVector& b, const PssOptions& opts) {
    size_t dims = opts.subs_only ? kSubDimensionCount : kVectorDims;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < dims; ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw ZeroVector();
    return 100.0 * dot / (std::sqrt(na) * std::sqrt(nb));
}

std::string format_score_block(const TraitScores& scores) {
    std::ostringstream out;
    const auto& traits = trait_names();
    const auto& subs = sub_dimension_names();
    for (size_t t = 0; t < kTraitCount; ++t) {
        out << "{ " << traits[t] << ": " << format_score(scores.aggregates[t]);
        for (size_t j = 0; j < kSubsPerTrait; ++j) {
            size_t s = t * kSubsPerTrait + j;
            out << ", " << subs[s] << ": " << format_score(scores.sub_means[s]);
        }
        out << " }";
        if (t + 1 < kTraitCount) out << "\n";
    }
    return out.str();
}

std::optional<TraitScores> parse_score_block(const std::string& text) {
    TraitScores scores;
    std::array<bool, kSubDimensionCount> seen_sub{};
    std::array<bool, kTraitCount> seen_trait{};

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '{') body.erase(body.begin());
        if (!body.empty() && body.back() == '}') body.pop_back();
        std::istringstream fields(body);
        std::string field;
        while (std::getline(fields, field, ',')) {
            size_t colon = field.find(':');
            if (colon == std::string::npos) continue;
            std::string name = trim(field.substr(0, colon));
            std::string value = trim(field.substr(colon + 1));
            if (name.empty() || value.empty()) continue;
            double x = 0.0;
            try {
                x = std::stod(value);
            } catch (...) {
                return std::nullopt;
            }
            if (auto sub = sub_dimension_index(name)) {
                scores.sub_means[*sub] = x;
                seen_sub[*sub] = true;
            } else if (auto t = trait_index(name)) {
                scores.aggregates[*t] = x;
                seen_trait[*t] = true;
            }
        }
    }
    for (bool b : seen_sub)
        if (!b) return std::nullopt;
    for (size_t t = 0; t < kTraitCount; ++t) {
        if (!seen_trait[t]) {
            double agg = 0.0;
            for (size_t j = 0; j < kSubsPerTrait; ++j)
                agg += scores.sub_means[t * kSubsPerTrait + j];
            scores.aggregates[t] = agg;
        }
    }
    return scores;
}

} // namespace orca
