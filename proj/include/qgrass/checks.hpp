#pragma once

// Named verification checks grouped into suites.

#include "qgrass/hopf.hpp"
#include "qgrass/rmatrix.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgrass {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status s);

struct CheckResult {
    std::string check_id;
    Status status = Status::Pass;
    std::vector<std::string> residual_summary; // empty iff pass
    std::int64_t elapsed_ms = 0;
    std::string note; // informational, e.g. which relations a negative control breaks
};

struct Options {
    std::optional<Rational> q0; // numeric cross-check point; symbolic when empty
    std::size_t max_fuel = kDefaultFuel;
};

/// Rejects q0 in {0, 1, -1}: the algebras need q^2 != 1.
void validate_q0(const Rational& q0);

/// Presentations and structure maps shared by the checks of one run, built
/// on first use and specialized at q0 in numeric mode.
class Context {
public:
    explicit Context(Options options);

    const Options& options() const { return options_; }
    const Presentation& presentation(const std::string& id);
    /// Same generators as `id`, no rules.
    const Presentation& free(const std::string& id);
    /// Over gl-loc or mixed-loc.
    const StructureMaps& maps(const std::string& id);
    ScalarMatrix4 r_matrix(RMatrixId id) const;
    LaurentPoly scalar(const LaurentPoly& c) const;

private:
    Options options_;
    std::map<std::string, std::unique_ptr<Presentation>> presentations_;
    std::map<std::string, std::unique_ptr<Presentation>> free_;
    std::map<std::string, std::unique_ptr<StructureMaps>> maps_;
};

/// What a check found: nonzero residual terms (empty on pass) plus a note.
struct Outcome {
    std::vector<std::string> residual;
    std::string note;
};

struct CheckDef {
    std::string id;
    std::string suite;
    std::string description;
    std::function<Outcome(Context&)> run;
};

/// All checks, sorted by id.
const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(std::string_view id);

/// confluence, rtt, span, ybe, central, inverse, hopf, quasi-hopf, product,
/// coaction, all.
const std::vector<std::string>& suite_names();

/// Runs every check of `suite` in id order. Throws std::invalid_argument
/// for an unknown suite and DomainError for an illegal q0; engine errors
/// (FuelExhausted, PresentationError) propagate.
std::vector<CheckResult> run_suite(std::string_view suite, const Options& options);

} // namespace qgrass
