#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orca::metrics {

using TokenSequence = std::vector<std::string>;

// Lowercases and splits on whitespace and punctuation boundaries; each
// punctuation character becomes its own token. Deterministic for fixed input.
TokenSequence tokenize(std::string_view text);

// The corpus scorers run the per-pair kernel either serially or under an
// OpenMP parallel-for. Both modes produce identical results: per-pair stats
// are computed independently and reduced in pair order.
enum class ExecMode { Serial, Parallel };

struct BleuOptions {
    ExecMode mode = ExecMode::Parallel;
};

struct RougeOptions {
    double beta = 1.0; // F_beta weight; 1.0 = plain harmonic mean
    ExecMode mode = ExecMode::Parallel;
};

// Corpus-level BLEU on the 0-100 scale. Orders 1-4, geometric mean over
// orders with a nonzero n-gram total, add-one smoothing on zero match
// counts for n >= 2, brevity penalty exp(1 - ref_len/cand_len) when the
// candidate corpus is shorter. Throws LengthMismatch / EmptyCorpus.
double bleu(const std::vector<TokenSequence>& candidates,
            const std::vector<TokenSequence>& references,
            const BleuOptions& opts = {});

// Single-pair ROUGE-L F score on the 0-100 scale. Throws EmptySequence.
double rouge_l(const TokenSequence& candidate, const TokenSequence& reference,
               const RougeOptions& opts = {});

// Mean single-pair ROUGE-L over aligned pairs. Empty candidates (failed
// generations) score 0 for their pair. Throws LengthMismatch / EmptyCorpus.
double rouge_l_corpus(const std::vector<TokenSequence>& candidates,
                      const std::vector<TokenSequence>& references,
                      const RougeOptions& opts = {});

// Longest-common-subsequence length (dynamic program).
size_t lcs_length(const TokenSequence& a, const TokenSequence& b);

// Per-pair BLEU statistics, exposed for the corpus stats cross-checks.
struct BleuPairStats {
    std::array<long long, 4> matches{}; // clipped n-gram matches, order 1-4
    std::array<long long, 4> totals{};  // candidate n-gram counts, order 1-4
    long long cand_len = 0;
    long long ref_len = 0;
};

BleuPairStats bleu_pair_stats(const TokenSequence& candidate, const TokenSequence& reference);

} // namespace orca::metrics
