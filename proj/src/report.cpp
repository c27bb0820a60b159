#include "qgrass/report.hpp"

#include <sstream>

namespace qgrass {

bool Report::pass() const
{
    for (const auto& r : results)
        if (r.status == Status::Fail)
            return false;
    return true;
}

Report make_report(std::string_view suite, const Options& options)
{
    Report report;
    report.q_mode = options.q0 ? "numeric(" + to_string(*options.q0) + ")" : "symbolic";
    report.results = run_suite(suite, options);
    return report;
}

nlohmann::json to_json(const Report& report)
{
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) {
        results.push_back({{"check_id", r.check_id},
                           {"status", std::string(to_string(r.status))},
                           {"residual_summary", r.residual_summary},
                           {"elapsed_ms", r.elapsed_ms},
                           {"note", r.note}});
    }
    return {{"engine_version", report.engine_version},
            {"q_mode", report.q_mode},
            {"overall", report.pass() ? "pass" : "fail"},
            {"results", results}};
}

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << "qgrass " << report.engine_version << ", q " << report.q_mode << "\n";
    std::size_t passed = 0;
    for (const auto& r : report.results) {
        const CheckDef* def = find_check(r.check_id);
        out << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "SKIP ") << r.check_id
            << "  (" << r.elapsed_ms << " ms)";
        if (def)
            out << "  " << def->description;
        out << "\n";
        if (!r.note.empty())
            out << "      note: " << r.note << "\n";
        for (const auto& line : r.residual_summary)
            out << "      " << line << "\n";
        passed += r.status == Status::Pass;
    }
    out << "overall: " << (report.pass() ? "pass" : "fail") << " (" << passed << "/" << report.results.size()
        << " checks passed)\n";
    return out.str();
}

} // namespace qgrass
