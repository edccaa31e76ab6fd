#include "orca/metrics.hpp"
#include "orca/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <unordered_map>

namespace orca::metrics {

TokenSequence tokenize(std::string_view text) {
    TokenSequence tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    for (unsigned char c : text) {
        if (c >= 0x80 || std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (std::isspace(c)) {
            flush();
        } else {
            flush();
            tokens.emplace_back(1, static_cast<char>(c));
        }
    }
    flush();
    return tokens;
}

namespace {

// n-grams are hashed as joined strings with a separator that cannot appear
// inside a token (tokenize never emits '\x1f').
std::string join_ngram(const TokenSequence& seq, size_t start, size_t n) {
    std::string key;
    for (size_t k = 0; k < n; ++k) {
        if (k) key.push_back('\x1f');
        key += seq[start + k];
    }
    return key;
}

} // namespace

BleuPairStats bleu_pair_stats(const TokenSequence& candidate, const TokenSequence& reference) {
    BleuPairStats stats;
    stats.cand_len = static_cast<long long>(candidate.size());
    stats.ref_len = static_cast<long long>(reference.size());
    for (size_t n = 1; n <= 4; ++n) {
        if (candidate.size() < n) break;
        std::unordered_map<std::string, long long> ref_counts;
        if (reference.size() >= n) {
            for (size_t i = 0; i + n <= reference.size(); ++i) {
                ++ref_counts[join_ngram(reference, i, n)];
            }
        }
        std::unordered_map<std::string, long long> cand_counts;
        for (size_t i = 0; i + n <= candidate.size(); ++i) {
            ++cand_counts[join_ngram(candidate, i, n)];
        }
        long long total = 0, matched = 0;
        for (const auto& [ngram, count] : cand_counts) {
            total += count;
            auto it = ref_counts.find(ngram);
            if (it != ref_counts.end()) matched += std::min(count, it->second);
        }
        stats.totals[n - 1] = total;
        stats.matches[n - 1] = matched;
    }
    return stats;
}

namespace {

double bleu_from_stats(const std::vector<BleuPairStats>& stats) {
    std::array<long long, 4> matches{}, totals{};
    long long cand_len = 0, ref_len = 0;
    for (const auto& s : stats) {
        for (size_t n = 0; n < 4; ++n) {
            matches[n] += s.matches[n];
            totals[n] += s.totals[n];
        }
        cand_len += s.cand_len;
        ref_len += s.ref_len;
    }
    if (totals[0] == 0) return 0.0;

    double log_sum = 0.0;
    int used_orders = 0;
    for (size_t n = 0; n < 4; ++n) {
        if (totals[n] == 0) continue;
        double num = static_cast<double>(matches[n]);
        double den = static_cast<double>(totals[n]);
        if (n >= 1 && matches[n] == 0) {
            num += 1.0;
            den += 1.0;
        }
        if (num == 0.0) return 0.0; // unigram precision zero
        log_sum += std::log(num / den);
        ++used_orders;
    }
    double brevity = 1.0;
    if (cand_len < ref_len) {
        brevity = std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(cand_len));
    }
    return 100.0 * brevity * std::exp(log_sum / used_orders);
}

double rouge_f(size_t lcs, size_t cand_len, size_t ref_len, double beta) {
    if (lcs == 0) return 0.0;
    double p = static_cast<double>(lcs) / static_cast<double>(cand_len);
    double r = static_cast<double>(lcs) / static_cast<double>(ref_len);
    double b2 = beta * beta;
    return 100.0 * (1.0 + b2) * p * r / (r + b2 * p);
}

} // namespace

size_t lcs_length(const TokenSequence& a, const TokenSequence& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

double bleu(const std::vector<TokenSequence>& candidates,
            const std::vector<TokenSequence>& references, const BleuOptions& opts) {
    if (candidates.size() != references.size()) {
        throw LengthMismatch(candidates.size(), references.size());
    }
    if (candidates.empty()) throw EmptyCorpus();

    const long long n = static_cast<long long>(candidates.size());
    std::vector<BleuPairStats> stats(candidates.size());
    if (opts.mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < n; ++i) {
            stats[i] = bleu_pair_stats(candidates[i], references[i]);
        }
    } else {
        for (long long i = 0; i < n; ++i) {
            stats[i] = bleu_pair_stats(candidates[i], references[i]);
        }
    }
    return bleu_from_stats(stats);
}

double rouge_l(const TokenSequence& candidate, const TokenSequence& reference,
               const RougeOptions& opts) {
    if (candidate.empty() || reference.empty()) throw EmptySequence();
    return rouge_f(lcs_length(candidate, reference), candidate.size(), reference.size(),
                   opts.beta);
}

double rouge_l_corpus(const std::vector<TokenSequence>& candidates,
                      const std::vector<TokenSequence>& references, const RougeOptions& opts) {
    if (candidates.size() != references.size()) {
        throw LengthMismatch(candidates.size(), references.size());
    }
    if (candidates.empty()) throw EmptyCorpus();

    const long long n = static_cast<long long>(candidates.size());
    std::vector<double> per_pair(candidates.size(), 0.0);
    auto score_pair = [&](long long i) {
        if (candidates[i].empty() || references[i].empty()) {
            per_pair[i] = 0.0;
            return;
        }
        per_pair[i] = rouge_f(lcs_length(candidates[i], references[i]), candidates[i].size(),
                              references[i].size(), opts.beta);
    };
    if (opts.mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < n; ++i) score_pair(i);
    } else {
        for (long long i = 0; i < n; ++i) score_pair(i);
    }
    // Reduction stays in pair order so both modes agree bit for bit.
    double sum = 0.0;
    for (double f : per_pair) sum += f;
    return sum / static_cast<double>(candidates.size());
}

} // namespace orca::metrics
