#pragma once

// Reports over check results: JSON and plain text.

#include "qgrass/checks.hpp"

#include "json.hpp"

namespace qgrass {

struct Report {
    std::string engine_version = kEngineVersion;
    std::string q_mode; // "symbolic" or "numeric(<q0>)"
    std::vector<CheckResult> results;

    /// Every non-skipped result passes.
    bool pass() const;
};

Report make_report(std::string_view suite, const Options& options);

/// Flat schema: engine_version, q_mode, overall, results[] with check_id,
/// status, residual_summary, elapsed_ms and note.
nlohmann::json to_json(const Report& report);

/// One line per check with its description, then the residual terms of
/// failing checks and a closing overall line.
std::string render_text(const Report& report);

} // namespace qgrass
