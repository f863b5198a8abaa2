#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kaz/random.hpp"

namespace kaz::cli {

using Json = nlohmann::json;

struct RunOptions {
  std::uint64_t seed = Rng::default_seed;
  std::optional<std::int64_t> k_max;
};

/// Names accepted by run().
const std::vector<std::string>& commands();

/// Executes one command on a parsed input document. Throws UserError for
/// malformed input and InvariantViolation when a checked identity fails.
Json run(const std::string& command, const Json& input, const RunOptions& options = {});

/// Error document {"error": {"kind": ..., "message": ...}}.
Json error_document(const std::string& kind, const std::string& message);

/// Stable text form: two-space indent, sorted keys, trailing newline.
std::string serialize(const Json& doc);

}  // namespace kaz::cli
