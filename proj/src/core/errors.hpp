// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ami {

/// Invariant or schema violation in caller-supplied data.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntactically malformed input (YAML, JSON, CSV); message carries position
/// info when the underlying parser provides it.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Provider/backend transport failure after retries.
struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Provider quota exhausted; retryable.
struct RateLimitError : TransportError {
    using TransportError::TransportError;
};

/// Query absent from a snapshot in replay mode; never falls back to live.
struct SnapshotMissError : std::runtime_error {
    explicit SnapshotMissError(const std::string& query)
        : std::runtime_error("snapshot miss: query not recorded: \"" + query + "\""),
          query(query) {}
    std::string query;
};

}  // namespace ami
