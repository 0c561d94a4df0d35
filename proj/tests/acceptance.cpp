// One line per acceptance criterion; exit status is the number of failures.

#include "argagg/argagg.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace argagg;

namespace {

const std::string corpus_dir = ARGAGG_CORPUS_DIR;

Framework corpus_framework(const std::string& name) { return load_corpus_entry(corpus_dir + "/" + name + ".apx").framework; }
Profile corpus_profile(const Framework& af, const std::string& name) {
    return parse_profile(af, read_text_file(corpus_dir + "/" + name + ".profile"));
}

std::vector<std::string> triples(const Framework& af, const std::vector<Labelling>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(to_triple(af, l));
    return out;
}

DomainSpec dom(SemanticsKind k, std::size_t n, TieHandling t = TieHandling::exclude_ties) {
    DomainSpec d;
    d.semantics = k;
    d.agents = n;
    d.ties = t;
    return d;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome murder_enumeration() {
    auto af = corpus_framework("murder");
    auto got = triples(af, enumerate_complete(af));
    std::vector<std::string> want{"([a1,a3],[a2],[])", "([a2],[a1,a3],[])", "([],[],[a1,a2,a3])"};
    if (got != want) return fail("got " + std::to_string(got.size()) + " labellings in a different form");
    return {true, "3 labellings in canonical order"};
}

Outcome fig3_semantics() {
    auto af = corpus_framework("fig3");
    if (to_triple(af, grounded(af)) != "([a3],[],[a1,a2])") return fail("grounded " + to_triple(af, grounded(af)));
    if (triples(af, enumerate(af, SemanticsKind::grounded)) != std::vector<std::string>{"([a3],[],[a1,a2])"})
        return fail("grounded filter");
    std::vector<std::string> two{"([a1,a3],[a2],[])", "([a2,a3],[a1],[])"};
    for (auto k : {SemanticsKind::preferred, SemanticsKind::stable, SemanticsKind::semi_stable})
        if (triples(af, enumerate(af, k)) != two) return fail(std::string(to_string(k)));
    return {true, "grounded, preferred, stable, semi-stable"};
}

Outcome detectives() {
    auto af = corpus_framework("murder");
    auto p = corpus_profile(af, "detectives");
    if (!validate_profile(af, p, SemanticsKind::complete).empty()) return fail("profile not complete");
    auto o = awpr(p);
    if (!o.is_defined()) return fail("undefined");
    if (to_text(af, o.labelling()) != "a1=out,a2=in,a3=out") return fail(to_text(af, o.labelling()));
    return {true, "(out,in,out)"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(2024);
    std::size_t mismatches = 0, afs = 400;
    for (std::size_t t = 0; t < afs; ++t) {
        auto af = oracle::random_framework(rng, 0, 6);
        for (auto k : all_semantics)
            if (oracle::labels_of(enumerate(af, k)) != oracle::semantics(af, k)) ++mismatches;
    }
    if (mismatches) return fail(std::to_string(mismatches) + " mismatches");
    return {true, std::to_string(afs) + " frameworks x 5 semantics, 0 mismatches"};
}

Outcome awpr_postulates() {
    const Postulate ps[] = {Postulate::supportiveness,    Postulate::anonymity, Postulate::strong_systematicity,
                            Postulate::monotonicity,      Postulate::unanimity, Postulate::weak_systematicity,
                            Postulate::independence,      Postulate::non_dictatorship};
    std::size_t runs = 0;
    for (const auto& e : load_corpus(corpus_dir)) {
        PostulateChecker c(e.framework, awpr_operator(), dom(SemanticsKind::complete, 3));
        for (auto p : ps) {
            auto r = c.check(p);
            ++runs;
            if (r.verdict != Verdict::holds_on_domain)
                return fail(e.name + ": " + std::string(to_string(p)) + " " + std::string(to_string(r.verdict)));
        }
    }
    return {true, std::to_string(runs) + " corpus checks, all holds-on-domain"};
}

Outcome discursive_dilemma() {
    auto af = corpus_framework("fig4");
    PostulateChecker c(af, awpr_operator(), dom(SemanticsKind::complete, 3));
    auto r = c.check(Postulate::collective_rationality);
    if (r.verdict != Verdict::violated) return fail("no violation");
    const auto& cx = *r.counterexample;
    if (!replays(cx, awpr_operator())) return fail("counterexample does not replay");
    auto o = awpr(cx.profiles[0]).labelling();
    auto cid = af.id("c");
    if (o[cid] != Label::out) return fail("c is " + std::string(to_string(o[cid])));
    for (auto b : af.attackers(cid))
        if (o[b] == Label::in) return fail("an attacker of c is collectively in");
    return {true, "c out, attackers a and b out"};
}

Outcome table1() {
    auto r = table1_matrix(load_corpus(corpus_dir));
    std::size_t no = 0;
    for (const auto& c : r.cells) {
        if (!c.agrees()) return fail(std::string(to_string(c.semantics)) + "/" + std::string(to_string(c.clause)));
        if (c.counterexample) {
            ++no;
            if (!replays(*c.counterexample, awpr_operator())) return fail("cell counterexample does not replay");
        }
    }
    return {true, "25/25 cells agree, " + std::to_string(no) + " replayable counterexamples"};
}

Outcome witnesses() {
    const std::pair<Theorem, std::size_t> cases[] = {{Theorem::ud_anon_ssys, 3},
                                                     {Theorem::ud_anon_ssys_cr, 2},
                                                     {Theorem::ud_wsys_anon_cr_unan, 2},
                                                     {Theorem::notie_wsys_anon_cr_supp, 3}};
    for (auto [t, n] : cases) {
        auto w = impossibility_witness(t, n);
        if (!verify_witness(w)) return fail(std::string(to_string(t)) + " not verified");
        if (!replays(w) || !(impossibility_witness(t, n) == w)) return fail(std::string(to_string(t)) + " replay differs");
    }
    return {true, "4 witnesses verified, derivations reproduce"};
}

Outcome cr_equivalence() {
    std::mt19937_64 rng(77);
    std::size_t mismatches = 0, runs = 100, violated = 0;
    for (std::size_t t = 0; t < runs; ++t) {
        auto af = t % 4 == 0 ? corpus_framework("fig4") : oracle::random_framework(rng, 3, 6);
        Operator op = t % 2 ? awpr_undec_tiebreak_operator() : awpr_operator();
        auto kind = all_semantics[rng() % all_semantics.size()];
        auto ties = rng() % 2 ? TieHandling::include_ties : TieHandling::exclude_ties;
        PostulateChecker c(af, op, dom(kind, 2 + rng() % 3, ties));
        auto cr = c.check(Postulate::collective_rationality);
        bool conj = true;
        for (const auto& r : c.check_cr_subconditions()) conj &= r.verdict != Verdict::violated;
        if ((cr.verdict != Verdict::violated) != conj) ++mismatches;
        violated += cr.verdict == Verdict::violated;
    }
    if (mismatches) return fail(std::to_string(mismatches) + " mismatches");
    return {true, std::to_string(runs) + " runs, " + std::to_string(violated) + " violated, 0 mismatches"};
}

Outcome guarantee_soundness() {
    std::mt19937_64 rng(99);
    std::size_t guaranteed = 0, tried = 0;
    SearchOptions so;
    so.agents = 3;
    while (guaranteed < 150 && tried < 5000) {
        ++tried;
        auto af = oracle::random_framework(rng, 1, 6);
        if (cr_guarantee(af) == CrGuarantee::no_guarantee) continue;
        ++guaranteed;
        if (scan_framework(af, so).counterexample) return fail("violation on a guaranteed framework:\n" + serialize_framework(af));
    }
    if (guaranteed < 100) return fail("only " + std::to_string(guaranteed) + " guaranteed frameworks generated");
    return {true, std::to_string(guaranteed) + " guaranteed frameworks, 0 CR violations"};
}

Outcome js_invariants() {
    std::mt19937_64 rng(123);
    std::size_t afs = 600;
    for (std::size_t t = 0; t < afs; ++t) {
        auto af = oracle::random_framework(rng, 1, 7);
        auto comp = enumerate_complete(af);
        auto n = static_cast<std::uint32_t>(af.size());
        for (std::uint32_t a = 0; a < n; ++a) {
            auto js = justification_status(comp, ArgumentId{a});
            if (js.empty() || js == LabelSet{Label::in, Label::out}) return fail("JS " + js.to_string());
        }
        auto rel = [&](std::uint32_t a, std::uint32_t b) {
            return in_sync(comp, ArgumentId{a}, ArgumentId{b}) != SyncMode::not_in_sync;
        };
        for (std::uint32_t a = 0; a < n; ++a) {
            if (!rel(a, a)) return fail("not reflexive");
            for (std::uint32_t b = 0; b < n; ++b) {
                if (rel(a, b) != rel(b, a)) return fail("not symmetric");
                for (std::uint32_t c = 0; c < n; ++c)
                    if (rel(a, b) && rel(b, c) && !rel(a, c)) return fail("not transitive");
            }
        }
    }
    return {true, std::to_string(afs) + " frameworks"};
}

Outcome undec_tiebreak() {
    auto op = awpr_undec_tiebreak_operator();
    std::size_t runs = 0;
    for (const auto& e : load_corpus(corpus_dir)) {
        for (std::size_t n : {2u, 3u, 4u, 6u, 7u}) {
            auto d = dom(SemanticsKind::complete, n, TieHandling::include_ties);
            ProfileDomain probe(e.framework, d);
            if (probe.exhaustive_size() > 2e5) continue;
            PostulateChecker c(e.framework, op, d);
            for (auto p : {Postulate::universal_domain, Postulate::weak_systematicity, Postulate::anonymity}) {
                ++runs;
                if (c.check(p).verdict != Verdict::holds_on_domain)
                    return fail(e.name + " n=" + std::to_string(n) + ": " + std::string(to_string(p)));
            }
        }
    }
    auto af = corpus_framework("fig4");
    PostulateChecker c(af, op, dom(SemanticsKind::complete, 3, TieHandling::include_ties));
    auto cr = c.check(Postulate::collective_rationality);
    if (cr.verdict != Verdict::violated) return fail("fig4 collective rationality not violated");
    if (!replays(*cr.counterexample, op)) return fail("fig4 counterexample does not replay");
    return {true, std::to_string(runs) + " exhaustive checks hold; fig4 CR counterexample replays"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"murder-case enumeration", murder_enumeration},
        {"fig3 semantics", fig3_semantics},
        {"detectives aggregation", detectives},
        {"oracle equivalence", oracle_equivalence},
        {"awpr postulate suite", awpr_postulates},
        {"discursive dilemma", discursive_dilemma},
        {"table 1 matrix", table1},
        {"impossibility witnesses", witnesses},
        {"cr equivalence", cr_equivalence},
        {"guarantee soundness", guarantee_soundness},
        {"js invariants", js_invariants},
        {"undec tiebreak", undec_tiebreak},
    };
    int failures = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-26s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs);
        failures += !o.pass;
    }
    std::printf("%d/%d criteria passed\n", k - failures, k);
    return failures;
}
