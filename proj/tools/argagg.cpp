#include "argagg/argagg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace argagg;

namespace {

enum Exit : int {
    ok = 0,
    usage = 1,
    input = 2,
    too_large = 3,
    undefined = 4,
    invalid_profile = 5,
    replay_mismatch = 6,
    budget = 7,
    hypothesis = 8,
    table_disagrees = 9,
};

constexpr const char* exit_codes_help = R"(Exit codes:
  0  success
  1  usage error
  2  unreadable or malformed input (framework, profile, report)
  3  framework exceeds the enumeration cap
  4  aggregate outcome undefined (tie) without --tiebreak undec
  5  profile contains labellings outside the declared semantics
  6  replayed report does not reproduce
  7  domain or search budget exceeded
  8  theorem hypothesis on the agent count not met
  9  table1 matrix disagrees with the expected table)";

struct Outcome {
    json result;
    std::string text;
    int exit = ok;
};

struct Args {
    std::string framework_path, profile_path, corpus_dir, replay_path, format = "text";
    std::string semantics = "complete", mode = "exhaustive", ties = "exclude-ties", tiebreak = "none";
    std::string op = "awpr", target = "collective-rationality", theorem, argument;
    std::vector<std::string> postulates, seed_frameworks;
    std::size_t agents = 3, samples = 1000, budget = 1'000'000, table_budget = 50'000'000, threads = 1, cap = 24;
    std::uint64_t seed = 1;
    bool no_validate = false, supportiveness = false;
    std::size_t min_args = 1, max_args = 4, exhaustive_up_to = 3, samples_per_size = 200;
    double density = 0.3, self_loops = 0.1;
    std::vector<std::size_t> agent_counts{3, 7};
};

EnumerationLimits limits_of(const json& c) { return {c.value("cap", std::size_t{24})}; }

Framework framework_of(const json& c) { return parse_framework(c.at("framework").get<std::string>()); }

DomainSpec domain_of(const json& c) {
    DomainSpec d;
    d.semantics = parse_semantics(c.at("semantics").get<std::string>());
    d.agents = c.at("agents").get<std::size_t>();
    d.mode = parse_domain_mode(c.at("mode").get<std::string>());
    d.seed = c.at("seed").get<std::uint64_t>();
    d.samples = c.at("samples").get<std::size_t>();
    d.ties = parse_tie_handling(c.at("ties").get<std::string>());
    d.budget = c.at("budget").get<std::size_t>();
    return d;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string indent(const std::string& s, const std::string& by) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line)) out += by + line + "\n";
    return out;
}

std::string counterexample_text(const json& cx) {
    std::string t = "  " + cx.at("description").get<std::string>() + "\n";
    const auto& ps = cx.at("profiles");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        t += "  profile " + std::to_string(i) + ":\n" + indent(ps[i].get<std::string>(), "    ");
        if (cx.contains("outcomes")) {
            const auto& o = cx["outcomes"][i];
            t += "    => " + (o.at("defined").get<bool>() ? o["labelling"]["text"].get<std::string>() : "undefined") + "\n";
        }
    }
    if (!cx.at("permutation").is_null()) t += "  permutation " + cx["permutation"].get<std::string>() + "\n";
    for (const auto& ta : cx.at("tallies"))
        t += "  tally profile " + std::to_string(ta["profile"].get<std::size_t>()) + " " +
             ta["argument"].get<std::string>() + ": in=" + std::to_string(ta["tally"]["in"].get<std::size_t>()) +
             " out=" + std::to_string(ta["tally"]["out"].get<std::size_t>()) +
             " undec=" + std::to_string(ta["tally"]["undec"].get<std::size_t>()) + "\n";
    if (cx.contains("replays")) t += std::string("  replays: ") + (cx["replays"].get<bool>() ? "yes" : "NO") + "\n";
    return t;
}

Outcome run_enumerate(const json& c) {
    auto af = framework_of(c);
    auto kind = parse_semantics(c.at("semantics").get<std::string>());
    auto ls = enumerate(af, kind, limits_of(c));
    Outcome o;
    o.text = std::to_string(ls.size()) + " " + std::string(to_string(kind)) + " labelling" + (ls.size() == 1 ? "" : "s") + "\n";
    json arr = json::array();
    for (const auto& l : ls) {
        arr.push_back(labelling_json(af, l));
        o.text += to_text(af, l) + "  " + to_triple(af, l) + "\n";
    }
    o.result = {{"semantics", to_string(kind)}, {"count", ls.size()}, {"labellings", arr}};
    return o;
}

Outcome run_aggregate(const json& c) {
    auto af = framework_of(c);
    auto p = parse_profile(af, c.at("profile").get<std::string>());
    Outcome o;
    if (c.at("validate").get<bool>()) {
        auto kind = parse_semantics(c.at("semantics").get<std::string>());
        auto bad = validate_profile(af, p, kind, limits_of(c));
        if (!bad.empty()) {
            json arr = json::array();
            for (const auto& v : bad) {
                arr.push_back({{"agent", v.agent}, {"violation", v.description}});
                o.text += "agent " + std::to_string(v.agent) + ": " + v.description + "\n";
            }
            o.result = {{"valid", false}, {"violations", arr}};
            o.exit = invalid_profile;
            return o;
        }
    }
    bool undec = c.at("tiebreak").get<std::string>() == "undec";
    auto out = undec ? AggregateOutcome::defined(awpr_undec_tiebreak(p)) : awpr(p);
    json tallies = json::object();
    for (auto a : af.arguments()) tallies[af.name(a)] = tally_json(tally(p, a));
    o.result = {{"valid", true}, {"outcome", outcome_json(af, out)}, {"tallies", tallies}};
    if (out.is_defined()) {
        o.text = "outcome: " + to_text(af, out.labelling()) + "  " + to_triple(af, out.labelling()) + "\n";
        o.text += std::string("complete: ") + (is_complete(af, out.labelling()) ? "yes" : "no") + "\n";
        o.result["complete"] = is_complete(af, out.labelling());
    } else {
        o.text = "undefined: tie on";
        for (const auto& t : out.ties())
            o.text += " " + af.name(t.argument) + " (in=" + std::to_string(t.tally.n_in) + " out=" + std::to_string(t.tally.n_out) +
                      " undec=" + std::to_string(t.tally.n_undec) + ")";
        o.text += "\n";
        o.exit = undefined;
    }
    return o;
}

Outcome render_checks(const std::vector<CheckReport>& rs, const Operator& op) {
    Outcome o;
    json arr = json::array();
    for (const auto& r : rs) {
        arr.push_back(check_report_json(r, op));
        o.text += pad(std::string(to_string(r.postulate)) + ":", 26) + std::string(to_string(r.verdict)) + " (" +
                  std::to_string(r.profiles_examined) + " profiles)";
        if (r.verdict == Verdict::skipped) o.text += " " + r.reason;
        o.text += "\n";
        if (r.counterexample) o.text += counterexample_text(arr.back()["counterexample"]);
    }
    o.result = {{"operator", op.name}, {"reports", arr}};
    return o;
}

Outcome run_check(const json& c) {
    auto af = framework_of(c);
    auto op = make_operator(c.at("operator").get<std::string>(), af);
    PostulateChecker checker(af, op, domain_of(c), limits_of(c));
    std::vector<CheckReport> rs;
    for (const auto& p : c.at("postulates")) rs.push_back(checker.check(parse_postulate(p.get<std::string>())));
    return render_checks(rs, op);
}

Outcome run_cr(const json& c) {
    auto af = framework_of(c);
    auto op = make_operator(c.at("operator").get<std::string>(), af);
    PostulateChecker checker(af, op, domain_of(c), limits_of(c));
    auto rs = checker.check_cr_subconditions();
    rs.insert(rs.begin(), checker.check(Postulate::collective_rationality));
    return render_checks(rs, op);
}

Outcome run_search(const json& c) {
    GeneratorSpec g;
    g.min_args = c.at("min_args").get<std::size_t>();
    g.max_args = c.at("max_args").get<std::size_t>();
    g.density = c.at("density").get<double>();
    g.self_loop_density = c.at("self_loop_density").get<double>();
    g.exhaustive_up_to_args = c.at("exhaustive_up_to_args").get<std::size_t>();
    g.samples_per_size = c.at("samples_per_size").get<std::size_t>();
    g.seed = c.at("seed").get<std::uint64_t>();
    for (const auto& f : c.at("seed_frameworks")) g.seeds.push_back(parse_framework(f.get<std::string>()));
    SearchOptions s;
    s.semantics = parse_semantics(c.at("semantics").get<std::string>());
    s.agents = c.at("agents").get<std::size_t>();
    s.target = parse_postulate(c.at("target").get<std::string>());
    s.budget = c.at("budget").get<std::size_t>();
    s.threads = c.value("threads", std::size_t{1});
    s.limits = limits_of(c);
    auto r = find_cr_violation(g, s);
    Outcome o;
    o.result = search_result_json(r);
    o.text = r.counterexample ? "counterexample found\n" + counterexample_text(o.result["counterexample"]) +
                                    indent(serialize_framework(r.counterexample->framework), "  ")
                              : std::string("no counterexample") + (r.exhausted ? " (budget exhausted)" : "") + "\n";
    o.text += std::to_string(r.frameworks_examined) + " frameworks, " + std::to_string(r.profiles_examined) +
              " tie-free profiles examined\n";
    if (r.exhausted && !r.counterexample) o.exit = budget;
    return o;
}

Outcome run_table1(const json& c) {
    std::vector<CorpusEntry> corpus;
    for (const auto& e : c.at("corpus"))
        corpus.push_back({e.at("name").get<std::string>(), parse_framework(e.at("text").get<std::string>()), ""});
    Table1Options opt;
    opt.agent_counts = c.at("agent_counts").get<std::vector<std::size_t>>();
    opt.budget_per_cell = c.at("budget").get<std::size_t>();
    opt.limits = limits_of(c);
    auto r = table1_matrix(corpus, opt);
    Outcome o;
    o.result = table1_json(r);
    o.text = pad("", 13);
    for (auto clause : cr_subconditions) o.text += pad(std::string(to_string(clause)), 12);
    o.text += "\n";
    for (auto row : table1_rows) {
        o.text += pad(std::string(to_string(row)), 13);
        for (auto clause : cr_subconditions) {
            const auto& cell = r.at(row, clause);
            std::string mark = cell.status == CellStatus::clean            ? "Yes"
                               : cell.status == CellStatus::counterexample ? "No"
                                                                           : "budget";
            if (!cell.agrees()) mark += "!!";
            o.text += pad(mark, 12);
        }
        o.text += "\n";
    }
    o.text += "\n";
    for (const auto& cell : r.cells)
        if (cell.counterexample)
            o.text += std::string(to_string(cell.semantics)) + " / " + std::string(to_string(cell.clause)) + ": " +
                      cell.source + ", " + std::to_string(cell.agents) + " agents, " +
                      cell.counterexample->description + "\n";
    if (r.agrees()) {
        o.text += "matrix agrees with the expected table\n";
    } else {
        o.text += "DISAGREEMENT with the expected table (cells marked !!)\n";
        o.exit = table_disagrees;
    }
    return o;
}

Outcome run_witness(const json& c) {
    auto t = parse_theorem(c.at("theorem").get<std::string>());
    auto w = impossibility_witness(t, c.at("agents").get<std::size_t>(), c.at("supportiveness_for_cr").get<bool>());
    Outcome o;
    o.result = witness_json(w);
    o.text = std::string(to_string(t)) + ", " + std::to_string(w.agents) + " agents\n";
    o.text += indent(serialize_framework(w.framework), "  ");
    for (std::size_t i = 0; i < w.profiles.size(); ++i)
        o.text += "profile " + w.profile_names[i] + ":\n" + indent(serialize_profile(w.framework, w.profiles[i]), "  ");
    std::size_t k = 1;
    for (const auto& s : o.result["steps"]) {
        o.text += std::to_string(k++) + ". " + s["postulate"].get<std::string>() + ": " + s["note"].get<std::string>() + "\n";
        for (const auto& f : s["forced"]) o.text += "     " + f.get<std::string>() + "\n";
    }
    o.text += std::to_string(w.candidates_examined) + " candidate outcomes examined\n";
    o.text += w.conclusion + "\n";
    o.text += std::string("verified: ") + (o.result["verified"].get<bool>() ? "yes" : "NO") + "\n";
    return o;
}

Outcome run_js(const json& c) {
    auto af = framework_of(c);
    auto comp = enumerate_complete(af, limits_of(c));
    Outcome o;
    json arr = json::array();
    std::vector<ArgumentId> which;
    auto name = c.value("argument", std::string());
    if (name.empty()) which = af.arguments();
    else which.push_back(af.id(name));
    for (auto a : which) {
        auto js = justification_status(comp, a);
        arr.push_back({{"argument", af.name(a)}, {"status", js.to_string()}});
        o.text += af.name(a) + ": " + js.to_string() + "\n";
    }
    o.result = {{"justification_status", arr}};
    return o;
}

Outcome run_issues(const json& c) {
    auto af = framework_of(c);
    auto part = issues(af, limits_of(c));
    Outcome o;
    o.result = issues_json(af, part);
    o.text = std::to_string(part.blocks.size()) + " issue" + (part.blocks.size() == 1 ? "" : "s") + "\n";
    for (const auto& b : part.blocks) {
        o.text += "{";
        for (std::size_t i = 0; i < b.size(); ++i) o.text += (i ? "," : "") + af.name(b[i]);
        o.text += "}\n";
    }
    return o;
}

Outcome run_guarantee(const json& c) {
    auto af = framework_of(c);
    auto comp = enumerate_complete(af, limits_of(c));
    Outcome o;
    o.result = guarantee_json(af, comp);
    o.text = o.result["guarantee"].get<std::string>() + "\n";
    o.text += std::string("disconnected issues: ") + (o.result["disconnected_issues"]["holds"].get<bool>() ? "holds" : "fails") + "\n";
    o.text += std::string("limited defeaters: ") + (o.result["limited_defeaters"]["holds"].get<bool>() ? "holds" : "fails") + "\n";
    for (const auto& off : o.result["limited_defeaters"]["offending_arguments"]) {
        o.text += "  " + off["argument"].get<std::string>() + " has undec-capable attackers";
        for (const auto& b : off["undec_capable_attackers"]) o.text += " " + b.get<std::string>();
        o.text += "\n";
    }
    return o;
}

Outcome execute(const std::string& command, const json& c) {
    if (command == "enumerate") return run_enumerate(c);
    if (command == "aggregate") return run_aggregate(c);
    if (command == "check") return run_check(c);
    if (command == "cr") return run_cr(c);
    if (command == "search") return run_search(c);
    if (command == "table1") return run_table1(c);
    if (command == "witness") return run_witness(c);
    if (command == "js") return run_js(c);
    if (command == "issues") return run_issues(c);
    if (command == "guarantee") return run_guarantee(c);
    throw Error("unknown command '" + command + "'");
}

void collect_counterexamples(const json& j, std::vector<const json*>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "counterexample" && it.value().is_object()) out.push_back(&it.value());
            else collect_counterexamples(it.value(), out);
        }
    } else if (j.is_array()) {
        for (const auto& e : j) collect_counterexamples(e, out);
    }
}

/// Re-executes the stored command and checks the result is identical and
/// every stored counterexample still replays.
Outcome replay(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    if (doc.value("schema", "") != report_schema) throw ParseError("not an argagg report");
    if (doc.value("schema_version", 0) != report_schema_version) throw ParseError("unsupported report schema version");
    auto command = doc.at("command").get<std::string>();
    const auto& config = doc.at("config");
    Outcome fresh = execute(command, config);
    Outcome o;
    bool same = fresh.result == doc.at("result");
    std::vector<const json*> cxs;
    collect_counterexamples(doc.at("result"), cxs);
    std::size_t good = 0;
    for (const auto* cj : cxs) {
        auto cx = counterexample_from_json(*cj);
        Operator op = command == "check" || command == "cr" ? make_operator(config.at("operator").get<std::string>(), cx.framework)
                                                            : awpr_operator();
        if (replays(cx, op)) ++good;
    }
    o.result = {{"replayed_command", command},
                {"identical", same},
                {"counterexamples", cxs.size()},
                {"counterexamples_replayed", good}};
    o.text = "replayed " + command + ": result " + (same ? "identical" : "DIFFERS") + ", " + std::to_string(good) + "/" +
             std::to_string(cxs.size()) + " counterexamples reproduce\n";
    o.exit = same && good == cxs.size() ? ok : replay_mismatch;
    if (command == "witness" && !fresh.result.value("verified", false)) o.exit = replay_mismatch;
    return o;
}

json base_config(const Args& a) {
    return {{"semantics", a.semantics}, {"cap", a.cap}, {"seed", a.seed}, {"budget", a.budget}};
}

json domain_config(const Args& a) {
    json c = base_config(a);
    c["agents"] = a.agents;
    c["mode"] = a.mode;
    c["samples"] = a.samples;
    c["ties"] = a.ties;
    c["operator"] = a.op;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labelling aggregation lab: enumerate argumentation semantics, aggregate profiles with plurality, "
                 "check aggregation postulates."};
    app.footer(exit_codes_help);
    app.require_subcommand(0, 1);
    Args a;
    app.add_option("--replay", a.replay_path, "Re-run a JSON report and compare results")->check(CLI::ExistingFile);
    app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto semantics_opt = [&](CLI::App* s) {
        s->add_option("--semantics", a.semantics, "complete|grounded|preferred|stable|semi-stable")
            ->check(CLI::IsMember({"complete", "grounded", "preferred", "stable", "semi-stable"}));
        s->add_option("--cap", a.cap, "Enumeration cap on argument count");
    };
    auto format_opt = [&](CLI::App* s) {
        s->add_option("--format", a.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    };
    auto domain_opts = [&](CLI::App* s) {
        semantics_opt(s);
        s->add_option("--agents,-n", a.agents, "Agent count");
        s->add_option("--mode", a.mode, "exhaustive|sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
        s->add_option("--seed", a.seed, "Sampling seed");
        s->add_option("--samples", a.samples, "Profiles drawn in sampled mode");
        s->add_option("--budget", a.budget, "Largest exhaustive domain");
        s->add_option("--ties", a.ties, "include-ties|exclude-ties")->check(CLI::IsMember({"include-ties", "exclude-ties"}));
        s->add_option("--operator", a.op, "awpr|awpr-undec-tiebreak|dictator(i)|constant-grounded");
        s->add_option("--threads", a.threads, "Worker threads (results do not depend on it)");
        format_opt(s);
    };

    auto* en = app.add_subcommand("enumerate", "List the labellings of a semantics");
    en->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    semantics_opt(en);
    format_opt(en);

    auto* ag = app.add_subcommand("aggregate", "Aggregate a profile with the argument-wise plurality rule");
    ag->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    ag->add_option("profile", a.profile_path, "Profile file")->required()->check(CLI::ExistingFile);
    semantics_opt(ag);
    ag->add_option("--tiebreak", a.tiebreak, "none|undec")->check(CLI::IsMember({"none", "undec"}));
    ag->add_flag("--no-validate", a.no_validate, "Skip checking votes against --semantics");
    format_opt(ag);

    auto* ch = app.add_subcommand("check", "Check postulates of an operator over a profile domain");
    ch->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    ch->add_option("--postulate,-p", a.postulates, "Postulate id (repeatable; default all)");
    domain_opts(ch);

    auto* cr = app.add_subcommand("cr", "Collective rationality and its five sub-conditions");
    cr->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    domain_opts(cr);

    auto* se = app.add_subcommand("search", "Search generated frameworks for a plurality outcome violating a clause");
    semantics_opt(se);
    format_opt(se);
    se->add_option("--agents,-n", a.agents, "Agent count");
    se->add_option("--target", a.target, "collective-rationality or in-cr1|in-cr2|out-cr|undec-cr1|undec-cr2");
    se->add_option("--min-args", a.min_args, "Smallest generated framework");
    se->add_option("--max-args", a.max_args, "Largest generated framework");
    se->add_option("--density", a.density, "Attack probability between distinct arguments");
    se->add_option("--self-loops", a.self_loops, "Self-attack probability");
    se->add_option("--exhaustive-up-to", a.exhaustive_up_to, "Enumerate every graph up to this size (max 4)");
    se->add_option("--samples-per-size", a.samples_per_size, "Random frameworks per size above the exhaustive range");
    se->add_option("--seed", a.seed, "Generator seed");
    se->add_option("--budget", a.budget, "Total tie-free profiles aggregated");
    se->add_option("--threads", a.threads, "Worker threads (results do not depend on it)");
    se->add_option("--seed-framework", a.seed_frameworks, "APX files searched first")->check(CLI::ExistingFile);

    auto* t1 = app.add_subcommand("table1", "Plurality vs the five sub-conditions, per semantics, over a corpus");
    t1->add_option("corpus", a.corpus_dir, "Directory of .apx files")->required()->check(CLI::ExistingDirectory);
    t1->add_option("--agents", a.agent_counts, "Agent counts (default 3 7)");
    t1->add_option("--budget", a.table_budget, "Tie-free profiles per cell");
    t1->add_option("--cap", a.cap, "Enumeration cap on argument count");
    format_opt(t1);

    auto* wi = app.add_subcommand("witness", "Machine-checked impossibility witness");
    wi->add_option("theorem", a.theorem, "T-UD-Anon-SSys|T-UD-Anon-SSys-CR|T-UD-WSys-Anon-CR-Unan|T-NoTie-WSys-Anon-CR-Supp (or T1..T4)")
        ->required();
    wi->add_option("--agents,-n", a.agents, "Agent count");
    wi->add_flag("--supportiveness", a.supportiveness, "Use supportiveness instead of collective rationality (T2)");
    format_opt(wi);

    auto* js = app.add_subcommand("js", "Justification status of arguments");
    js->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    js->add_option("argument", a.argument, "Argument name (default all)");
    js->add_option("--cap", a.cap, "Enumeration cap on argument count");
    format_opt(js);

    auto* is = app.add_subcommand("issues", "Issue partition (classes of the in-sync relation)");
    is->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    is->add_option("--cap", a.cap, "Enumeration cap on argument count");
    format_opt(is);

    auto* gu = app.add_subcommand("guarantee", "Graph conditions guaranteeing collectively rational plurality");
    gu->add_option("framework", a.framework_path, "APX file")->required()->check(CLI::ExistingFile);
    gu->add_option("--cap", a.cap, "Enumeration cap on argument count");
    format_opt(gu);

    auto* rp = app.add_subcommand("replay", "Re-run a JSON report and compare results");
    rp->add_option("report", a.replay_path, "Report file")->required()->check(CLI::ExistingFile);
    format_opt(rp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        Outcome o;
        std::string command;
        json config;
        if (!a.replay_path.empty()) {
            o = replay(a.replay_path);
            command = "replay";
            config = {{"report", a.replay_path}};
        } else {
            if (app.get_subcommands().empty()) {
                std::cerr << app.help();
                return usage;
            }
            command = app.get_subcommands().front()->get_name();
            if (command == "enumerate" || command == "js" || command == "issues" || command == "guarantee") {
                config = base_config(a);
                if (command == "js" && !a.argument.empty()) config["argument"] = a.argument;
            } else if (command == "aggregate") {
                config = base_config(a);
                config["tiebreak"] = a.tiebreak;
                config["validate"] = !a.no_validate;
                config["profile"] = read_text_file(a.profile_path);
            } else if (command == "check" || command == "cr") {
                config = domain_config(a);
                if (command == "check") {
                    json ps = json::array();
                    if (a.postulates.empty())
                        for (auto p : all_postulates) ps.push_back(to_string(p));
                    for (const auto& p : a.postulates) ps.push_back(to_string(parse_postulate(p)));
                    config["postulates"] = ps;
                }
            } else if (command == "search") {
                config = base_config(a);
                config["agents"] = a.agents;
                config["target"] = to_string(parse_postulate(a.target));
                config["min_args"] = a.min_args;
                config["max_args"] = a.max_args;
                config["density"] = a.density;
                config["self_loop_density"] = a.self_loops;
                config["exhaustive_up_to_args"] = a.exhaustive_up_to;
                config["samples_per_size"] = a.samples_per_size;
                json seeds = json::array();
                for (const auto& f : a.seed_frameworks) seeds.push_back(serialize_framework(parse_framework(read_text_file(f))));
                config["seed_frameworks"] = seeds;
                config["threads"] = a.threads;
            } else if (command == "table1") {
                config = {{"agent_counts", a.agent_counts}, {"budget", a.table_budget}, {"cap", a.cap}, {"seed", a.seed}};
                json corpus = json::array();
                for (const auto& e : load_corpus(a.corpus_dir))
                    corpus.push_back({{"name", e.name}, {"text", serialize_framework(e.framework)}});
                config["corpus"] = corpus;
            } else if (command == "witness") {
                config = {{"theorem", std::string(to_string(parse_theorem(a.theorem)))},
                          {"agents", a.agents},
                          {"supportiveness_for_cr", a.supportiveness}};
            } else if (command == "replay") {
                o = replay(a.replay_path);
            }
            if (!a.framework_path.empty()) {
                config["framework"] = serialize_framework(parse_framework(read_text_file(a.framework_path)));
                config["framework_path"] = a.framework_path;
            }
            if (command != "replay") o = execute(command, config);
        }
        if (a.format == "json") {
            std::cout << envelope(command, config, o.result).dump(2) << "\n";
        } else {
            std::cout << o.text;
            std::cout << "argagg " << tool_version;
            if (config.contains("seed") || config.contains("budget"))
                std::cout << " seed=" << config.value("seed", std::uint64_t{0})
                          << " budget=" << config.value("budget", std::size_t{0});
            std::cout << "\n";
        }
        return o.exit;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return too_large;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget;
    } catch (const HypothesisUnmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hypothesis;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input;
    } catch (const UnknownArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input;
    } catch (const FrameworkMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << "\n";
        return input;
    }
}
