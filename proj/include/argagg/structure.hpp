#ifndef ARGAGG_STRUCTURE_HPP
#define ARGAGG_STRUCTURE_HPP

#include "argagg/framework.hpp"
#include "argagg/labelling.hpp"
#include "argagg/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <vector>

namespace argagg {

/// {L(a) | L complete}. Never empty and never exactly {in, out}.
using JustificationStatus = LabelSet;

inline JustificationStatus justification_status(const std::vector<Labelling>& complete, ArgumentId a) {
    JustificationStatus js;
    for (const auto& l : complete) js.insert(l[a]);
    return js;
}

inline JustificationStatus justification_status(const Framework& af, ArgumentId a,
                                                const EnumerationLimits& limits = {}) {
    af.name(a);
    return justification_status(enumerate_complete(af, limits), a);
}

enum class SyncMode { not_in_sync, sync_equal, sync_swapped };

inline std::string_view to_string(SyncMode m) {
    switch (m) {
        case SyncMode::not_in_sync: return "not-in-sync";
        case SyncMode::sync_equal: return "sync-equal";
        case SyncMode::sync_swapped: return "sync-swapped";
    }
    return "?";
}

/// Equal labels everywhere wins over the in/out swap when both hold.
inline SyncMode in_sync(const std::vector<Labelling>& complete, ArgumentId a, ArgumentId b) {
    bool equal = true;
    bool swapped = true;
    for (const auto& l : complete) {
        Label la = l[a];
        Label lb = l[b];
        equal &= la == lb;
        swapped &= ((la == Label::in) == (lb == Label::out)) && ((la == Label::out) == (lb == Label::in));
    }
    if (equal) return SyncMode::sync_equal;
    if (swapped) return SyncMode::sync_swapped;
    return SyncMode::not_in_sync;
}

inline SyncMode in_sync(const Framework& af, ArgumentId a, ArgumentId b, const EnumerationLimits& limits = {}) {
    af.name(a);
    af.name(b);
    return in_sync(enumerate_complete(af, limits), a, b);
}

struct IssuePartition {
    /// Blocks ordered by smallest member; members sorted.
    std::vector<std::vector<ArgumentId>> blocks;
    /// block_of[i] is the block holding argument i.
    std::vector<std::size_t> block_of;
    /// Mode of each member relative to the first member of its block.
    std::vector<SyncMode> mode_to_representative;
};

inline IssuePartition issues(const Framework& af, const std::vector<Labelling>& complete) {
    IssuePartition p;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    p.block_of.assign(af.size(), none);
    p.mode_to_representative.assign(af.size(), SyncMode::sync_equal);
    for (auto a : af.arguments()) {
        if (p.block_of[a.index] != none) continue;
        std::size_t id = p.blocks.size();
        p.blocks.push_back({a});
        p.block_of[a.index] = id;
        for (std::uint32_t j = a.index + 1; j < af.size(); ++j) {
            if (p.block_of[j] != none) continue;
            auto mode = in_sync(complete, a, ArgumentId{j});
            if (mode == SyncMode::not_in_sync) continue;
            p.blocks[id].push_back(ArgumentId{j});
            p.block_of[j] = id;
            p.mode_to_representative[j] = mode;
        }
    }
    return p;
}

inline IssuePartition issues(const Framework& af, const EnumerationLimits& limits = {}) {
    return issues(af, enumerate_complete(af, limits));
}

/// Weakly connected components (edge direction ignored), ordered by smallest member.
inline std::vector<std::vector<ArgumentId>> weak_components(const Framework& af) {
    std::vector<std::size_t> parent(af.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : af.attacks()) {
        auto r1 = find(e.attacker.index);
        auto r2 = find(e.target.index);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
    std::vector<std::vector<ArgumentId>> out;
    std::vector<std::size_t> slot(af.size(), static_cast<std::size_t>(-1));
    for (auto a : af.arguments()) {
        auto r = find(a.index);
        if (slot[r] == static_cast<std::size_t>(-1)) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(a);
    }
    return out;
}

struct DisconnectedIssuesResult {
    bool holds = false;
    std::vector<std::vector<ArgumentId>> components;
    /// component_to_block[c] is the issue block of component c's first member.
    std::vector<std::size_t> component_to_block;
};

/// True iff every weakly connected component is exactly one issue.
inline DisconnectedIssuesResult check_disconnected_issues(const Framework& af,
                                                          const std::vector<Labelling>& complete) {
    DisconnectedIssuesResult r;
    auto part = issues(af, complete);
    r.components = weak_components(af);
    r.holds = r.components.size() == part.blocks.size();
    for (const auto& comp : r.components) {
        std::size_t block = part.block_of[comp.front().index];
        r.component_to_block.push_back(block);
        if (part.blocks[block] != comp) r.holds = false;
    }
    return r;
}

inline DisconnectedIssuesResult check_disconnected_issues(const Framework& af, const EnumerationLimits& limits = {}) {
    return check_disconnected_issues(af, enumerate_complete(af, limits));
}

struct LimitedDefeatersResult {
    bool holds = false;
    /// For each argument, its attackers that can be labelled undec; only
    /// entries with two or more members break the condition.
    std::vector<std::vector<ArgumentId>> undec_capable_attackers;
};

/// True iff every argument has at most one attacker whose justification
/// status contains undec.
inline LimitedDefeatersResult check_limited_defeaters(const Framework& af, const std::vector<Labelling>& complete) {
    LimitedDefeatersResult r;
    r.holds = true;
    std::vector<JustificationStatus> js;
    js.reserve(af.size());
    for (auto a : af.arguments()) js.push_back(justification_status(complete, a));
    for (auto a : af.arguments()) {
        auto& capable = r.undec_capable_attackers.emplace_back();
        for (auto b : af.attackers(a))
            if (js[b.index].contains(Label::undec)) capable.push_back(b);
        if (capable.size() > 1) r.holds = false;
    }
    return r;
}

inline LimitedDefeatersResult check_limited_defeaters(const Framework& af, const EnumerationLimits& limits = {}) {
    return check_limited_defeaters(af, enumerate_complete(af, limits));
}

/// Whether `a` has one attacker `b` with every other attacker fixed out in
/// all complete labellings; then a and b are in sync and plurality labels a
/// legally in every outcome.
inline bool single_live_defeater(const Framework& af, const std::vector<Labelling>& complete, ArgumentId a) {
    std::size_t live = 0;
    for (auto c : af.attackers(a))
        if (justification_status(complete, c) != LabelSet{Label::out}) ++live;
    return live == 1;
}

enum class CrGuarantee { guaranteed_by_issues, guaranteed_by_limited_defeaters, guaranteed_by_both, no_guarantee };

inline std::string_view to_string(CrGuarantee g) {
    switch (g) {
        case CrGuarantee::guaranteed_by_issues: return "guaranteed-by-issues";
        case CrGuarantee::guaranteed_by_limited_defeaters: return "guaranteed-by-limited-defeaters";
        case CrGuarantee::guaranteed_by_both: return "guaranteed-by-both";
        case CrGuarantee::no_guarantee: return "no-guarantee";
    }
    return "?";
}

/// Which sufficient condition for collectively rational plurality outcomes
/// holds. no-guarantee does not mean plurality fails on this graph.
inline CrGuarantee cr_guarantee(const Framework& af, const std::vector<Labelling>& complete) {
    bool by_issues = check_disconnected_issues(af, complete).holds;
    bool by_defeaters = check_limited_defeaters(af, complete).holds;
    if (by_issues && by_defeaters) return CrGuarantee::guaranteed_by_both;
    if (by_issues) return CrGuarantee::guaranteed_by_issues;
    if (by_defeaters) return CrGuarantee::guaranteed_by_limited_defeaters;
    return CrGuarantee::no_guarantee;
}

inline CrGuarantee cr_guarantee(const Framework& af, const EnumerationLimits& limits = {}) {
    return cr_guarantee(af, enumerate_complete(af, limits));
}

}  // namespace argagg

#endif
