#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffalg/kaehler.hpp"
#include "diffalg/scenario.hpp"

namespace diffalg {

// One check result.  `anchor` names the mathematical statement being
// verified; `informative` marks hypothesis failures that the default mode
// narrates instead of failing on.
struct CheckEntry {
    enum class Status { Pass, Fail, Error, Info };

    std::string key;     // stable machine key
    Status status = Status::Info;
    std::string detail;  // witness data, canonical text
    std::string anchor;  // human-mode description
    bool informative = false;
};

struct Report {
    std::string scenario_id;
    std::vector<CheckEntry> entries;

    void add(std::string key, CheckEntry::Status st, std::string detail = "",
             std::string anchor = "", bool informative = false) {
        entries.push_back({std::move(key), st, std::move(detail), std::move(anchor),
                           informative});
    }

    bool hard_failure() const;
    bool informative_failure() const;
};

// 0 all pass, 1 check failure (strict promotes informative failures), else 0.
int report_exit_code(const Report& r, bool strict);

// Line-delimited key<TAB>value records, byte-stable across runs.
std::string render_machine(const Report& r, bool strict);

// Human narrative; `stamp` prepends a timestamp line (human mode only).
std::string render_human(const Report& r, bool strict, bool stamp);

// Differential-form expressions for the lie command: linear combinations of
// d(...) atoms with scalar coefficients.
DiffForm parse_form(const DiffField& F, const std::string& text);

// The check pipeline for every section present in the document.
Report run_check(const ScenarioDoc& doc, const std::string& scenario_id,
                 std::uint64_t sample_seed = 0x5eedULL);

Report run_lie(const ScenarioDoc& doc, const std::string& scenario_id,
               const std::string& form_text);

Report run_residue(const ScenarioDoc& doc, const std::string& scenario_id);

Report run_trdeg(const ScenarioDoc& doc, const std::string& scenario_id,
                 const std::vector<std::string>& elem_texts);

Report run_prolong(const ScenarioDoc& doc, const std::string& scenario_id,
                   const std::vector<std::string>& elem_texts, unsigned order);

}  // namespace diffalg
