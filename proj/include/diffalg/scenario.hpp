#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffalg/ax.hpp"
#include "diffalg/d_variety.hpp"
#include "diffalg/diff_field.hpp"

namespace diffalg {

// Error in a scenario file, carrying the 1-based source line.
struct ScenarioError : Error {
    ScenarioError(const std::string& what, std::size_t line)
        : Error(what + " (scenario line " + std::to_string(line) + ")"),
          line(line), message(what) {}
    std::size_t line;
    std::string message;
};

// Validated, canonicalized scenario document.  All expressions are parsed at
// load time; section line numbers are kept for build-time error reports.
struct ScenarioDoc {
    std::vector<std::string> generators;
    std::vector<RatFunc> derivation;  // one per generator, over the generators
    std::size_t field_line = 0;

    struct DVarietySec {
        std::vector<std::string> ambient;
        std::vector<RatFunc> ideal;    // over generators + ambient
        std::vector<RatFunc> section;  // one per ambient variable, same vars
        std::optional<std::vector<RatFunc>> sharp;  // candidate point, over generators
        std::size_t line = 0;
    };
    std::optional<DVarietySec> dvariety;

    struct AxSec {
        std::vector<RatFunc> a;  // over generators
        std::vector<RatFunc> b;
        std::size_t line = 0;
    };
    std::optional<AxSec> ax;

    struct ResidueSec {
        std::string var;            // the single variable of the section
        std::vector<RatFunc> b;     // univariate over var
        std::vector<Rat> c;
        RatFunc nu;                 // univariate over var
        std::size_t line = 0;
    };
    std::optional<ResidueSec> residue;
};

ScenarioDoc load_scenario(const std::string& text);

// Canonical text form; load(render(doc)) == doc.
std::string render_scenario(const ScenarioDoc& doc);

struct BuiltObjects {
    DiffField field;
    std::optional<AffineDVariety> dvariety;
    std::optional<std::vector<RatFunc>> sharp_candidate;
    std::optional<AxScenario> ax;
    std::optional<ScenarioDoc::ResidueSec> residue;
};

// Constructs the kernel objects; construction-time checks (section
// compatibility, nonunit ideal) run here and fail with the section's
// scenario location.
BuiltObjects build_objects(const ScenarioDoc& doc);

}  // namespace diffalg
