#include "argagg/argagg.hpp"

#include <gtest/gtest.h>

using namespace argagg;

namespace {

Framework fig4() {
    return parse_framework("arg(a). arg(a'). arg(b). arg(b'). arg(c). "
                           "att(a,a'). att(a',a). att(b,b'). att(b',b). att(a,c). att(b,c).");
}

DomainSpec dom(std::size_t n) {
    DomainSpec d;
    d.agents = n;
    return d;
}

}  // namespace

TEST(Report, EnvelopeFields) {
    auto j = envelope("check", {{"seed", 3}}, {{"x", 1}});
    EXPECT_EQ(j["schema"], "argagg-report");
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["tool_version"], std::string(tool_version));
    EXPECT_EQ(j["command"], "check");
    EXPECT_EQ(j["config"]["seed"], 3);
}

TEST(Report, CounterexampleRoundTrip) {
    auto af = fig4();
    PostulateChecker c(af, awpr_operator(), dom(3));
    std::vector<Postulate> ps{Postulate::collective_rationality, Postulate::out_cr, Postulate::undec_cr2};
    for (auto p : ps) {
        auto r = c.check(p);
        ASSERT_TRUE(r.counterexample);
        auto j = counterexample_json(*r.counterexample, &c.op());
        EXPECT_TRUE(j["replays"].get<bool>());
        auto back = counterexample_from_json(json::parse(j.dump()));
        EXPECT_EQ(back.postulate, p);
        EXPECT_EQ(back.framework, af);
        EXPECT_EQ(back.profiles, r.counterexample->profiles);
        EXPECT_EQ(back.focus, r.counterexample->focus);
        EXPECT_EQ(back.tallies, r.counterexample->tallies);
        EXPECT_TRUE(replays(back, awpr_operator()));
    }
}

TEST(Report, PermutationAndAgentFieldsRoundTrip) {
    auto af = fig4();
    PostulateChecker c(af, awpr_undec_tiebreak_operator(), [] {
        auto d = dom(3);
        d.ties = TieHandling::include_ties;
        return d;
    }());
    auto r = c.check(Postulate::strong_systematicity);
    ASSERT_TRUE(r.counterexample && r.counterexample->permutation);
    auto back = counterexample_from_json(json::parse(counterexample_json(*r.counterexample).dump()));
    EXPECT_EQ(back.permutation, r.counterexample->permutation);
    EXPECT_TRUE(replays(back, c.op()));

    PostulateChecker d(af, dictator_operator(1), dom(3));
    auto nd = d.check(Postulate::non_dictatorship);
    ASSERT_TRUE(nd.counterexample);
    auto back2 = counterexample_from_json(json::parse(counterexample_json(*nd.counterexample).dump()));
    EXPECT_EQ(back2.agent, std::optional<std::size_t>(1));
    EXPECT_TRUE(replays(back2, dictator_operator(1)));
}

TEST(Report, DomainRoundTrip) {
    DomainSpec d;
    d.semantics = SemanticsKind::semi_stable;
    d.agents = 5;
    d.mode = DomainMode::sampled;
    d.seed = 77;
    d.samples = 12;
    d.ties = TieHandling::include_ties;
    d.budget = 999;
    EXPECT_EQ(domain_from_json(domain_json(d)), d);
}

TEST(Report, CheckReportIsStable) {
    auto af = fig4();
    auto r1 = check_postulate(Postulate::collective_rationality, af, awpr_operator(), dom(3));
    auto r2 = check_postulate(Postulate::collective_rationality, af, awpr_operator(), dom(3));
    EXPECT_EQ(check_report_json(r1, awpr_operator()).dump(), check_report_json(r2, awpr_operator()).dump());
    auto j = check_report_json(r1, awpr_operator());
    EXPECT_EQ(j["verdict"], "violated");
    EXPECT_EQ(j["domain"]["agents"], 3);
}

TEST(Report, WitnessJson) {
    auto w = impossibility_witness(Theorem::ud_wsys_anon_cr_unan, 2);
    auto j = witness_json(w);
    EXPECT_EQ(j["theorem"], "T-UD-WSys-Anon-CR-Unan");
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_FALSE(j["satisfiable"].get<bool>());
    EXPECT_EQ(j["conclusion"], "no complete labelling satisfies constraints");
    EXPECT_EQ(j["steps"].size(), w.steps.size());
}

TEST(Report, GuaranteeAndIssues) {
    auto af = fig4();
    auto comp = enumerate_complete(af);
    auto g = guarantee_json(af, comp);
    EXPECT_EQ(g["guarantee"], "no-guarantee");
    EXPECT_FALSE(g["limited_defeaters"]["holds"].get<bool>());
    EXPECT_EQ(g["limited_defeaters"]["offending_arguments"][0]["argument"], "c");
    auto is = issues_json(af, issues(af, comp));
    EXPECT_FALSE(is["blocks"].empty());
}
