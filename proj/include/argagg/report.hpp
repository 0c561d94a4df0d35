#ifndef ARGAGG_REPORT_HPP
#define ARGAGG_REPORT_HPP

#include "argagg/postulates.hpp"
#include "argagg/search.hpp"
#include "argagg/structure.hpp"
#include "argagg/table1.hpp"
#include "argagg/witness.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace argagg {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr std::string_view report_schema = "argagg-report";
inline constexpr int report_schema_version = 1;

using json = nlohmann::ordered_json;

inline json envelope(std::string_view command, json config, json result) {
    json j;
    j["schema"] = report_schema;
    j["schema_version"] = report_schema_version;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["config"] = std::move(config);
    j["result"] = std::move(result);
    return j;
}

inline json names_json(const Framework& af, const std::vector<ArgumentId>& ids) {
    json j = json::array();
    for (auto a : ids) j.push_back(af.name(a));
    return j;
}

inline json labelling_json(const Framework& af, const Labelling& l) {
    return {{"text", to_text(af, l)}, {"triple", to_triple(af, l)}};
}

inline json tally_json(const Tally& t) { return {{"in", t.n_in}, {"out", t.n_out}, {"undec", t.n_undec}}; }

inline Tally tally_from_json(const json& j) {
    Tally t;
    t.n_in = j.at("in").get<std::size_t>();
    t.n_out = j.at("out").get<std::size_t>();
    t.n_undec = j.at("undec").get<std::size_t>();
    return t;
}

inline json outcome_json(const Framework& af, const AggregateOutcome& o) {
    json j;
    j["defined"] = o.is_defined();
    if (o.is_defined()) {
        j["labelling"] = labelling_json(af, o.labelling());
    } else {
        json ties = json::array();
        for (const auto& t : o.ties()) ties.push_back({{"argument", af.name(t.argument)}, {"tally", tally_json(t.tally)}});
        j["ties"] = ties;
    }
    return j;
}

inline json domain_json(const DomainSpec& d) {
    return {{"semantics", to_string(d.semantics)},
            {"agents", d.agents},
            {"mode", to_string(d.mode)},
            {"seed", d.seed},
            {"samples", d.samples},
            {"ties", to_string(d.ties)},
            {"budget", d.budget}};
}

inline DomainSpec domain_from_json(const json& j) {
    DomainSpec d;
    d.semantics = parse_semantics(j.at("semantics").get<std::string>());
    d.agents = j.at("agents").get<std::size_t>();
    d.mode = parse_domain_mode(j.at("mode").get<std::string>());
    d.seed = j.at("seed").get<std::uint64_t>();
    d.samples = j.at("samples").get<std::size_t>();
    d.ties = parse_tie_handling(j.at("ties").get<std::string>());
    d.budget = j.at("budget").get<std::size_t>();
    return d;
}

inline json counterexample_json(const Counterexample& cx, const Operator* op = nullptr) {
    const auto& af = cx.framework;
    json j;
    j["postulate"] = to_string(cx.postulate);
    j["description"] = cx.description;
    j["framework"] = serialize_framework(af);
    json ps = json::array();
    for (const auto& p : cx.profiles) ps.push_back(serialize_profile(af, p));
    j["profiles"] = ps;
    j["focus"] = names_json(af, cx.focus);
    json ts = json::array();
    for (const auto& t : cx.tallies)
        ts.push_back({{"profile", t.profile}, {"argument", af.name(t.argument)}, {"tally", tally_json(t.tally)}});
    j["tallies"] = ts;
    j["permutation"] = cx.permutation ? json(cx.permutation->to_string()) : json(nullptr);
    j["agent"] = cx.agent ? json(*cx.agent) : json(nullptr);
    j["label"] = cx.label ? json(to_string(*cx.label)) : json(nullptr);
    if (op) {
        json outs = json::array();
        for (const auto& p : cx.profiles) outs.push_back(outcome_json(af, op->apply(p)));
        j["outcomes"] = outs;
        j["replays"] = replays(cx, *op);
    }
    return j;
}

inline Counterexample counterexample_from_json(const json& j) {
    Counterexample cx;
    cx.postulate = parse_postulate(j.at("postulate").get<std::string>());
    cx.description = j.at("description").get<std::string>();
    cx.framework = parse_framework(j.at("framework").get<std::string>());
    for (const auto& p : j.at("profiles")) cx.profiles.push_back(parse_profile(cx.framework, p.get<std::string>()));
    for (const auto& f : j.at("focus")) cx.focus.push_back(cx.framework.id(f.get<std::string>()));
    for (const auto& t : j.at("tallies"))
        cx.tallies.push_back({t.at("profile").get<std::size_t>(), cx.framework.id(t.at("argument").get<std::string>()),
                              tally_from_json(t.at("tally"))});
    if (!j.at("permutation").is_null())
        cx.permutation = LabelPermutation::parse(j.at("permutation").get<std::string>());
    if (!j.at("agent").is_null()) cx.agent = j.at("agent").get<std::size_t>();
    if (!j.at("label").is_null()) cx.label = parse_label(j.at("label").get<std::string>());
    return cx;
}

inline json check_report_json(const CheckReport& r, const Operator& op) {
    json j;
    j["postulate"] = to_string(r.postulate);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["operator"] = r.operator_name;
    j["domain"] = domain_json(r.domain);
    j["profiles_examined"] = r.profiles_examined;
    j["pairs_skipped"] = r.pairs_skipped;
    j["counterexample"] = r.counterexample ? counterexample_json(*r.counterexample, &op) : json(nullptr);
    return j;
}

inline json search_result_json(const SearchResult& r) {
    static const Operator plurality = awpr_operator();
    return {{"found", r.counterexample.has_value()},
            {"exhausted", r.exhausted},
            {"frameworks_examined", r.frameworks_examined},
            {"profiles_examined", r.profiles_examined},
            {"counterexample", r.counterexample ? counterexample_json(*r.counterexample, &plurality) : json(nullptr)}};
}

inline std::string constraint_text(const WitnessReport& w, const AllowedConstraint& c) {
    return "F(" + w.profile_names.at(c.profile) + ")(" + w.framework.name(c.argument) + ") in " + c.allowed.to_string();
}

inline std::string constraint_text(const WitnessReport& w, const RelateConstraint& c) {
    std::string lhs = "F(" + w.profile_names.at(c.p) + ")(" + w.framework.name(c.a) + ")";
    std::string rhs = "F(" + w.profile_names.at(c.q) + ")(" + w.framework.name(c.b) + ")";
    if (c.rho.is_identity()) return lhs + " = " + rhs;
    return lhs + " = rho(" + rhs + ") with rho " + c.rho.to_string();
}

inline json constraints_json(const WitnessReport& w, const ConstraintSet& cs) {
    json j = json::array();
    for (auto k : cs.complete) j.push_back("F(" + w.profile_names.at(k) + ") is complete");
    for (const auto& c : cs.allowed) j.push_back(constraint_text(w, c));
    for (const auto& c : cs.relate) j.push_back(constraint_text(w, c));
    return j;
}

inline json witness_json(const WitnessReport& w) {
    json j;
    j["theorem"] = to_string(w.theorem);
    j["agents"] = w.agents;
    j["supportiveness_for_cr"] = w.supportiveness_for_cr;
    j["framework"] = serialize_framework(w.framework);
    json ps = json::array();
    for (std::size_t i = 0; i < w.profiles.size(); ++i)
        ps.push_back({{"name", w.profile_names[i]}, {"profile", serialize_profile(w.framework, w.profiles[i])}});
    j["profiles"] = ps;
    json steps = json::array();
    for (const auto& s : w.steps) {
        json names = json::array();
        for (auto k : s.profiles) names.push_back(w.profile_names.at(k));
        steps.push_back({{"postulate", to_string(s.postulate)},
                         {"profiles", names},
                         {"arguments", names_json(w.framework, s.arguments)},
                         {"permutation", s.permutation ? json(s.permutation->to_string()) : json(nullptr)},
                         {"note", s.note},
                         {"forced", constraints_json(w, s.forced)}});
    }
    j["steps"] = steps;
    j["candidates_examined"] = w.candidates_examined;
    j["satisfiable"] = w.satisfiable;
    j["contradiction_verified"] = w.contradiction_verified();
    j["verified"] = verify_witness(w);
    j["conclusion"] = w.conclusion;
    return j;
}

inline json table1_json(const Table1Report& r) {
    static const Operator plurality = awpr_operator();
    json cells = json::array();
    for (const auto& c : r.cells) {
        cells.push_back({{"semantics", to_string(c.semantics)},
                         {"clause", to_string(c.clause)},
                         {"expected", c.expected_satisfied ? "yes" : "no"},
                         {"status", to_string(c.status)},
                         {"agrees", c.agrees()},
                         {"source", c.source},
                         {"agents", c.agents},
                         {"frameworks_examined", c.frameworks_examined},
                         {"profiles_examined", c.profiles_examined},
                         {"counterexample",
                          c.counterexample ? counterexample_json(*c.counterexample, &plurality) : json(nullptr)}});
    }
    return {{"agent_counts", r.options.agent_counts},
            {"budget_per_cell", r.options.budget_per_cell},
            {"agrees", r.agrees()},
            {"cells", cells}};
}

inline json issues_json(const Framework& af, const IssuePartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) {
        json members = json::array();
        for (auto a : b)
            members.push_back({{"argument", af.name(a)}, {"mode", to_string(p.mode_to_representative[a.index])}});
        blocks.push_back({{"arguments", names_json(af, b)}, {"members", members}});
    }
    return {{"blocks", blocks}};
}

inline json guarantee_json(const Framework& af, const std::vector<Labelling>& complete) {
    auto di = check_disconnected_issues(af, complete);
    auto ld = check_limited_defeaters(af, complete);
    json comps = json::array();
    for (std::size_t i = 0; i < di.components.size(); ++i)
        comps.push_back({{"arguments", names_json(af, di.components[i])}, {"issue_block", di.component_to_block[i]}});
    json offenders = json::array();
    for (auto a : af.arguments())
        if (ld.undec_capable_attackers[a.index].size() > 1)
            offenders.push_back({{"argument", af.name(a)},
                                 {"undec_capable_attackers", names_json(af, ld.undec_capable_attackers[a.index])}});
    return {{"guarantee", to_string(cr_guarantee(af, complete))},
            {"disconnected_issues", {{"holds", di.holds}, {"components", comps}}},
            {"limited_defeaters", {{"holds", ld.holds}, {"offending_arguments", offenders}}}};
}

}  // namespace argagg

#endif
