#include "argagg/argagg.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace argagg;

namespace {

Framework murder() { return parse_framework("arg(a1). arg(a2). arg(a3). att(a1,a2). att(a2,a1). att(a2,a3)."); }
Framework fig3() { return parse_framework("arg(a1). arg(a2). arg(a3). att(a1,a2). att(a2,a1)."); }
Framework cycle3() { return parse_framework("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a)."); }

std::vector<std::string> triples(const Framework& af, const std::vector<Labelling>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(to_triple(af, l));
    return out;
}

constexpr Label I = Label::in, O = Label::out, U = Label::undec;

}  // namespace

TEST(ConflictFree, Examples) {
    auto af = murder();
    EXPECT_TRUE(is_conflict_free(af, make_labelling(af, {I, O, I})));
    EXPECT_FALSE(is_conflict_free(af, make_labelling(af, {I, I, I})));
    auto loop = parse_framework("arg(a). att(a,a).");
    EXPECT_FALSE(is_conflict_free(loop, make_labelling(loop, {I})));
}

TEST(Complete, Examples) {
    auto af = murder();
    EXPECT_TRUE(is_complete(af, make_labelling(af, {U, U, U})));
    EXPECT_TRUE(is_complete(af, make_labelling(af, {O, I, O})));
    EXPECT_FALSE(is_complete(af, make_labelling(af, {I, O, O})));
}

TEST(Enumerate, MurderCaseExactlyThree) {
    auto af = murder();
    auto ls = enumerate_complete(af);
    EXPECT_EQ(ls, (std::vector<Labelling>{make_labelling(af, {I, O, I}), make_labelling(af, {O, I, O}),
                                          make_labelling(af, {U, U, U})}));
}

TEST(Enumerate, SmallCases) {
    auto single = parse_framework("arg(a).");
    EXPECT_EQ(enumerate_complete(single), std::vector<Labelling>{make_labelling(single, {I})});
    auto c = cycle3();
    EXPECT_EQ(enumerate_complete(c), std::vector<Labelling>{make_labelling(c, {U, U, U})});
    EXPECT_TRUE(enumerate(c, SemanticsKind::stable).empty());
    EXPECT_EQ(enumerate(c, SemanticsKind::semi_stable), std::vector<Labelling>{make_labelling(c, {U, U, U})});
    auto empty = parse_framework("");
    EXPECT_EQ(enumerate_complete(empty).size(), 1u);
}

TEST(Grounded, Examples) {
    EXPECT_EQ(to_triple(fig3(), grounded(fig3())), "([a3],[],[a1,a2])");
    auto m = murder();
    EXPECT_EQ(grounded(m), make_labelling(m, {U, U, U}));
    auto single = parse_framework("arg(a).");
    EXPECT_EQ(grounded(single), make_labelling(single, {I}));
    EXPECT_EQ(enumerate(fig3(), SemanticsKind::grounded), std::vector<Labelling>{grounded(fig3())});
}

TEST(Semantics, Fig3PreferredStableSemiStable) {
    auto af = fig3();
    std::vector<std::string> two{"([a1,a3],[a2],[])", "([a2,a3],[a1],[])"};
    EXPECT_EQ(triples(af, enumerate(af, SemanticsKind::preferred)), two);
    EXPECT_EQ(triples(af, enumerate(af, SemanticsKind::stable)), two);
    EXPECT_EQ(triples(af, enumerate(af, SemanticsKind::semi_stable)), two);
}

TEST(Semantics, MurderStableTwo) { EXPECT_EQ(enumerate(murder(), SemanticsKind::stable).size(), 2u); }

TEST(Semantics, ParseAndPrintKinds) {
    for (auto k : all_semantics) EXPECT_EQ(parse_semantics(to_string(k)), k);
    EXPECT_THROW(parse_semantics("ideal"), ParseError);
}

TEST(Semantics, CapThrowsTooLarge) {
    auto af = Framework::from_indices(30, {});
    EXPECT_THROW(enumerate_complete(af), TooLarge);
    EXPECT_EQ(enumerate_complete(af, EnumerationLimits{30}).size(), 1u);
}

TEST(OracleEquivalence, RandomFrameworksAllSemantics) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 250; ++t) {
        auto af = oracle::random_framework(rng, 0, 6);
        for (auto k : all_semantics)
            ASSERT_EQ(oracle::labels_of(enumerate(af, k)), oracle::semantics(af, k))
                << to_string(k) << "\n" << serialize_framework(af);
    }
}

TEST(Properties, InclusionChainAndGrounded) {
    std::mt19937_64 rng(7);
    auto contains = [](const std::vector<Labelling>& big, const Labelling& l) {
        return std::find(big.begin(), big.end(), l) != big.end();
    };
    for (int t = 0; t < 200; ++t) {
        auto af = oracle::random_framework(rng, 1, 7);
        auto comp = enumerate_complete(af);
        auto pr = enumerate(af, SemanticsKind::preferred);
        auto ss = enumerate(af, SemanticsKind::semi_stable);
        auto st = enumerate(af, SemanticsKind::stable);
        for (const auto& l : st) EXPECT_TRUE(contains(ss, l));
        for (const auto& l : ss) EXPECT_TRUE(contains(pr, l));
        for (const auto& l : pr) EXPECT_TRUE(contains(comp, l));
        auto g = grounded(af);
        ASSERT_TRUE(contains(comp, g));
        for (const auto& l : comp) {
            EXPECT_TRUE(is_conflict_free(af, l));
            EXPECT_EQ(g.mask(Label::in) & ~l.mask(Label::in), 0u);
            for (auto a : af.arguments())
                if (af.attackers(a).empty()) EXPECT_EQ(l[a], Label::in);
        }
        EXPECT_TRUE(std::is_sorted(comp.begin(), comp.end()));
    }
}
