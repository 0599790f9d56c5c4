#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace primring::cli {

using json = nlohmann::json;

/// Flags that override the job's "options" object.
struct Overrides {
    std::optional<int> jet_order;
    std::optional<std::string> order;
    std::optional<int> degree_bound;
    bool verify = false;
};

/// Runs one job document. Never throws: failures come back as
/// {"ok": false, "error": {"code", "message", "location"}}.
json run(const json& job, const Overrides& ov = {});

/// Parses text first; parse failures are reported the same way.
json run_text(const std::string& text, const Overrides& ov = {});

/// 0 when the job completed, 2 for malformed input, 3 for computation errors.
int exit_code(const json& result);

const std::vector<std::string>& commands();

}  // namespace primring::cli
