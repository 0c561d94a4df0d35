#ifndef ARGAGG_TABLE1_HPP
#define ARGAGG_TABLE1_HPP

#include "argagg/corpus.hpp"
#include "argagg/search.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace argagg {

/// Row order of the expected matrix.
inline constexpr std::array<SemanticsKind, 5> table1_rows{SemanticsKind::grounded, SemanticsKind::stable,
                                                          SemanticsKind::semi_stable, SemanticsKind::preferred,
                                                          SemanticsKind::complete};

/// Whether plurality over `row`-profiles is expected to satisfy `clause`.
inline bool table1_expected(SemanticsKind row, Postulate clause) {
    switch (row) {
        case SemanticsKind::grounded: return true;
        case SemanticsKind::stable: return clause != Postulate::out_cr;
        default: return clause == Postulate::in_cr1;
    }
}

enum class CellStatus { clean, counterexample, budget_exceeded };

inline std::string_view to_string(CellStatus s) {
    switch (s) {
        case CellStatus::clean: return "clean";
        case CellStatus::counterexample: return "counterexample";
        case CellStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct Table1Cell {
    SemanticsKind semantics = SemanticsKind::complete;
    Postulate clause = Postulate::in_cr1;
    bool expected_satisfied = true;
    CellStatus status = CellStatus::clean;
    std::optional<Counterexample> counterexample;
    /// Corpus entry and agent count of the counterexample.
    std::string source;
    std::size_t agents = 0;
    std::size_t frameworks_examined = 0;
    std::size_t profiles_examined = 0;

    /// Clean cells agree with an expected Yes, counterexample cells with a No.
    bool agrees() const {
        if (status == CellStatus::budget_exceeded) return false;
        return (status == CellStatus::clean) == expected_satisfied;
    }
};

struct Table1Options {
    std::vector<std::size_t> agent_counts{3, 7};
    /// Tie-free profiles aggregated per cell.
    std::size_t budget_per_cell = 50'000'000;
    EnumerationLimits limits{};
};

struct Table1Report {
    std::vector<Table1Cell> cells;  // row-major, table1_rows x cr_subconditions
    Table1Options options;

    bool agrees() const {
        for (const auto& c : cells)
            if (!c.agrees()) return false;
        return true;
    }
    const Table1Cell& at(SemanticsKind row, Postulate clause) const {
        for (const auto& c : cells)
            if (c.semantics == row && c.clause == clause) return c;
        throw Error("no such cell");
    }
};

/// Each cell scans every corpus framework at every agent count, aggregating
/// all tie-free profiles, and stops at the first clause violation.
inline Table1Report table1_matrix(const std::vector<CorpusEntry>& corpus, const Table1Options& opt = {}) {
    Table1Report rep;
    rep.options = opt;
    for (auto row : table1_rows) {
        for (auto clause : cr_subconditions) {
            Table1Cell cell;
            cell.semantics = row;
            cell.clause = clause;
            cell.expected_satisfied = table1_expected(row, clause);
            SearchOptions so;
            so.semantics = row;
            so.target = clause;
            so.limits = opt.limits;
            for (std::size_t n : opt.agent_counts) {
                so.agents = n;
                for (const auto& e : corpus) {
                    std::size_t left = opt.budget_per_cell - cell.profiles_examined;
                    auto scan = scan_framework(e.framework, so, left);
                    ++cell.frameworks_examined;
                    if (scan.profiles > left) {
                        cell.profiles_examined = opt.budget_per_cell;
                        cell.status = CellStatus::budget_exceeded;
                        goto done;
                    }
                    cell.profiles_examined += scan.profiles;
                    if (scan.counterexample) {
                        cell.status = CellStatus::counterexample;
                        cell.counterexample = std::move(scan.counterexample);
                        cell.source = e.name;
                        cell.agents = n;
                        goto done;
                    }
                }
            }
        done:
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

}  // namespace argagg

#endif
