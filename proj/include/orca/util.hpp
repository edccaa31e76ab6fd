#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orca {

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(std::string_view data);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Whitespace-token count; used for the corpus length statistics.
size_t whitespace_token_count(std::string_view text);

// Two-decimal rounding used whenever scores are rendered.
double round2(double x);

// Renders a score the way the trait report prints it: two decimals,
// trailing zero dropped ("1.00" -> "1.0", "0.50" -> "0.5", "0.29" -> "0.29").
std::string format_score(double x);

std::string read_file(const std::filesystem::path& path);
std::optional<std::string> try_read_file(const std::filesystem::path& path);

// Writes via temp file + rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

void log_info(const std::string& msg);
void log_warn(const std::string& msg);

// Runs fn(i) for i in [0, n) on up to `workers` threads. fn must capture
// its own output slots; exceptions escape to the caller.
void parallel_for_index(size_t n, size_t workers, const std::function<void(size_t)>& fn);

} // namespace orca
