#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orca {

// The five trait dimensions in canonical order.
enum class TraitDimension { Openness, Conscientiousness, Extraversion, Agreeableness, Neuroticism };

inline constexpr size_t kTraitCount = 5;
inline constexpr size_t kSubsPerTrait = 6;
inline constexpr size_t kSubDimensionCount = kTraitCount * kSubsPerTrait; // 30
inline constexpr size_t kVectorDims = kSubDimensionCount + kTraitCount;  // 35

const std::array<std::string, kTraitCount>& trait_names();

// Canonical sub-dimension names, trait-major: index t*6+j is sub j of trait t.
const std::array<std::string, kSubDimensionCount>& sub_dimension_names();

TraitDimension trait_of_sub(size_t sub_index);

// Name lookup; accepts the "Humblel" spelling as an alias of "Humble".
std::optional<size_t> sub_dimension_index(std::string_view name);
std::optional<size_t> trait_index(std::string_view name);

// One chunk's binary verdicts, all 30 sub-dimensions, plus the critic's explanation.
struct ChunkScore {
    std::array<int, kSubDimensionCount> scores{}; // each 0 or 1
    std::string explanation;

    bool operator==(const ChunkScore&) const = default;
};

// Averaged scores for one user: sub means in [0,1], trait aggregates in [0,6].
struct TraitScores {
    std::array<double, kSubDimensionCount> sub_means{};
    std::array<double, kTraitCount> aggregates{};
    size_t chunk_count = 0;

    bool operator==(const TraitScores&) const = default;
};

// 30 sub means followed by 5 aggregates, canonical order.
using TraitVector = std::array<double, kVectorDims>;

// Arithmetic mean of the binary chunk scores; aggregates are sums of the
// six sub means per trait. Throws EmptyChunkList.
TraitScores aggregate_chunks(const std::vector<ChunkScore>& chunks);

TraitVector to_vector(const TraitScores& scores);
TraitScores from_vector(const TraitVector& v, size_t chunk_count = 0);

struct PssOptions {
    // When true, cosine runs over the 30 sub means only.
    bool subs_only = false;
};

// 100 x cosine similarity. Throws ZeroVector when either vector is all zero.
double pss(const TraitVector& a, const TraitVector& b, const PssOptions& opts = {});

// Renders the scores in the report block layout, one line per trait:
//   { Openness: 1.53, Imaginative: 0.29, ..., Liberal: 0.12 }
std::string format_score_block(const TraitScores& scores);

// Parses a score block back; returns nullopt when a line/field is unreadable.
std::optional<TraitScores> parse_score_block(const std::string& text);

} // namespace orca
