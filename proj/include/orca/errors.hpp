#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orca {

// Base class for all pipeline errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- trait model ----
class EmptyChunkList : public Error {
public:
    EmptyChunkList() : Error("aggregate_chunks: chunk list is empty") {}
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("pss: cosine similarity undefined for a zero vector") {}
};

// ---- corpus ----
class FileNotFound : public Error {
public:
    explicit FileNotFound(const std::string& path) : Error("file not found: " + path), path(path) {}
    std::string path;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(size_t line, const std::string& reason)
        : Error("schema violation at line " + std::to_string(line) + ": " + reason),
          line(line), reason(reason) {}
    size_t line;
    std::string reason;
};

class EmptyPostList : public Error {
public:
    EmptyPostList() : Error("chunk_posts: post list is empty") {}
};

// ---- gateway ----
class LlmError : public Error {
public:
    explicit LlmError(const std::string& msg) : Error(msg) {}
};

class EndpointUnreachable : public LlmError {
public:
    explicit EndpointUnreachable(const std::string& detail)
        : LlmError("endpoint unreachable: " + detail) {}
};

class AuthFailure : public LlmError {
public:
    explicit AuthFailure(const std::string& detail) : LlmError("authentication failed: " + detail) {}
};

class RateLimited : public LlmError {
public:
    explicit RateLimited(const std::string& detail)
        : LlmError("rate limited after retries: " + detail) {}
};

class EmptyResponse : public LlmError {
public:
    EmptyResponse() : LlmError("model returned an empty response") {}
};

// ---- json extraction ----
class NoJsonFound : public Error {
public:
    NoJsonFound() : Error("no JSON value found in model output") {}
};

class MalformedJson : public Error {
public:
    MalformedJson(size_t position, const std::string& detail)
        : Error("malformed JSON at offset " + std::to_string(position) + ": " + detail),
          position(position) {}
    size_t position;
};

// ---- prompts ----
class UnknownTemplate : public Error {
public:
    explicit UnknownTemplate(const std::string& id) : Error("unknown template: " + id), id(id) {}
    std::string id;
};

class MissingBinding : public Error {
public:
    explicit MissingBinding(const std::string& name)
        : Error("missing template binding: " + name), name(name) {}
    std::string name;
};

// ---- inference ----
class ScoreParseError : public Error {
public:
    explicit ScoreParseError(const std::string& detail)
        : Error("cannot parse chunk score: " + detail) {}
};

class TooManyChunkFailures : public Error {
public:
    TooManyChunkFailures(size_t parsed, size_t total)
        : Error("too many chunk failures: " + std::to_string(parsed) + "/" +
                std::to_string(total) + " chunks parsed"),
          parsed(parsed), total(total) {}
    size_t parsed;
    size_t total;
};

// ---- augment ----
class JudgementParseError : public Error {
public:
    explicit JudgementParseError(const std::string& detail)
        : Error("cannot parse judgement: " + detail) {}
};

// ---- dataset builder ----
class MissingPrerequisite : public Error {
public:
    explicit MissingPrerequisite(const std::string& field)
        : Error("missing prerequisite: " + field), field(field) {}
    std::string field;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& detail) : Error("I/O error: " + detail) {}
};

// ---- metrics ----
class LengthMismatch : public Error {
public:
    LengthMismatch(size_t candidates, size_t references)
        : Error("candidate/reference count mismatch: " + std::to_string(candidates) + " vs " +
                std::to_string(references)) {}
};

class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("metric over an empty corpus") {}
};

class EmptySequence : public Error {
public:
    EmptySequence() : Error("metric over an empty token sequence") {}
};

// ---- cli ----
class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& field, const std::string& detail = "")
        : Error("invalid config field '" + field + "'" + (detail.empty() ? "" : ": " + detail)),
          field(field) {}
    std::string field;
};

class StageInputMissing : public Error {
public:
    explicit StageInputMissing(const std::string& what)
        : Error("stage input missing: " + what) {}
};

} // namespace orca
