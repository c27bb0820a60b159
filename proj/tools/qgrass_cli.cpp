#include "qgrass/presentations.hpp"
#include "qgrass/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int verify(const std::string& suite, const std::string& q_text, std::size_t fuel, const std::string& report_path,
           bool json)
{
    qgrass::Options options;
    options.max_fuel = fuel;
    if (!q_text.empty())
        options.q0 = qgrass::parse_rational(q_text);
    const qgrass::Report report = qgrass::make_report(suite, options);
    const nlohmann::json j = qgrass::to_json(report);
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << qgrass::render_text(report);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw std::runtime_error("cannot write " + report_path);
        out << j.dump(2) << "\n";
    }
    return report.pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the GL_q(1|1) / Gr_q(1|1) identities"};
    app.require_subcommand(1);

    std::string suite, q_text, report_path, id;
    std::size_t fuel = qgrass::kDefaultFuel;
    bool json = false;

    auto* v = app.add_subcommand("verify", "run a check suite");
    v->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(qgrass::suite_names()));
    v->add_option("--q", q_text, "rational q0 for the numeric cross-check (q0 != 0, q0^2 != 1)");
    v->add_option("--max-fuel", fuel, "rewrite-step budget per normalization")->check(CLI::PositiveNumber);
    v->add_option("--report", report_path, "write the JSON report to this file");
    v->add_flag("--json", json, "print JSON instead of text");

    auto* d = app.add_subcommand("dump-presentation", "print the rewrite rules of a presentation");
    d->add_option("id", id, "presentation id")->required()->check(CLI::IsMember(qgrass::presentation_ids()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (v->parsed())
            return verify(suite, q_text, fuel, report_path, json);
        std::cout << qgrass::dump(qgrass::presentation_by_id(id));
        return kExitPass;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const qgrass::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "engine error: " << e.what() << "\n";
    }
    return kExitUsage;
}
