#include "orca/json_extract.hpp"
#include "orca/errors.hpp"

#include <cctype>
#include <cstddef>
#include <string>

namespace orca {

namespace {

// Drops ```...``` fences (with an optional language tag) keeping the inner text.
std::string strip_code_fences(std::string_view text) {
    std::string s(text);
    size_t open = s.find("```");
    if (open == std::string::npos) return s;
    size_t body = s.find('\n', open);
    if (body == std::string::npos) return s;
    size_t close = s.find("```", body);
    if (close == std::string::npos) return s;
    return s.substr(body + 1, close - body - 1);
}

// Finds [start, end) of the first balanced {...} or [...] outside strings.
bool find_balanced(const std::string& s, size_t& start, size_t& end) {
    size_t open = s.find_first_of("{[");
    if (open == std::string::npos) return false;
    char open_c = s[open];
    char close_c = (open_c == '{') ? '}' : ']';
    int depth = 0;
    bool in_string = false, escaped = false;
    for (size_t i = open; i < s.size(); ++i) {
        char c = s[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == open_c) {
            ++depth;
        } else if (c == close_c) {
            --depth;
            if (depth == 0) {
                start = open;
                end = i + 1;
                return true;
            }
        }
    }
    return false;
}

// Removes ",}" / ",]" patterns outside strings.
std::string strip_trailing_commas(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_string = false, escaped = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (in_string) {
            out.push_back(c);
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
            out.push_back(c);
            continue;
        }
        if (c == ',') {
            size_t j = i + 1;
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && (s[j] == '}' || s[j] == ']')) continue; // drop the comma
        }
        out.push_back(c);
    }
    return out;
}

} // namespace

json extract_json(std::string_view text) {
    std::string body = strip_code_fences(text);
    size_t start = 0, end = 0;
    if (!find_balanced(body, start, end)) {
        // A fence may have cut the payload off; retry on the raw text.
        body = std::string(text);
        if (!find_balanced(body, start, end)) throw NoJsonFound();
    }
    std::string candidate = strip_trailing_commas(body.substr(start, end - start));
    try {
        return json::parse(candidate);
    } catch (const json::parse_error& e) {
        throw MalformedJson(static_cast<size_t>(e.byte), e.what());
    }
}

} // namespace orca
