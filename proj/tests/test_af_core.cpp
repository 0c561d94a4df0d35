#include "argagg/argagg.hpp"

#include <gtest/gtest.h>

using namespace argagg;

namespace {

const char* murder_text = "arg(a1). arg(a2). arg(a3). att(a1,a2). att(a2,a1). att(a2,a3).";

std::vector<std::string> names(const Framework& af, std::span<const ArgumentId> ids) {
    std::vector<std::string> out;
    for (auto a : ids) out.push_back(af.name(a));
    return out;
}

}  // namespace

TEST(Framework, ParsesMurderCase) {
    auto af = parse_framework(murder_text);
    EXPECT_EQ(af.size(), 3u);
    EXPECT_EQ(af.attacks().size(), 3u);
    EXPECT_EQ(names(af, af.attackers(af.id("a3"))), std::vector<std::string>{"a2"});
    EXPECT_EQ(names(af, af.attackers(af.id("a1"))), std::vector<std::string>{"a2"});
    EXPECT_EQ(names(af, af.targets(af.id("a2"))), (std::vector<std::string>{"a1", "a3"}));
    EXPECT_TRUE(af.attacks(af.id("a1"), af.id("a2")));
    EXPECT_FALSE(af.attacks(af.id("a3"), af.id("a2")));
}

TEST(Framework, ArgumentsOrderedByName) {
    auto af = parse_framework("arg(z). arg(b'). arg(b). att(z,b).");
    EXPECT_EQ(af.names(), (std::vector<std::string>{"b", "b'", "z"}));
    EXPECT_EQ(af.id("z").index, 2u);
}

TEST(Framework, CommentsWhitespaceAndForwardAttacks) {
    auto af = parse_framework("% header\n att( a , b ).\n\narg(a).   % trailing\narg(b).\n");
    EXPECT_EQ(af.size(), 2u);
    EXPECT_TRUE(af.attacks(af.id("a"), af.id("b")));
}

TEST(Framework, SelfAttackKeptDuplicateAttackCollapses) {
    auto af = parse_framework("arg(a). att(a,a). att(a,a).");
    EXPECT_EQ(af.attacks().size(), 1u);
    EXPECT_TRUE(af.attacks(af.id("a"), af.id("a")));
}

TEST(Framework, EmptyTextIsEmptyFramework) { EXPECT_EQ(parse_framework("").size(), 0u); }

TEST(FrameworkErrors, SyntaxErrorCarriesLine) {
    try {
        parse_framework("arg(a).\narg(b)\natt(a,b).");
        FAIL() << "no throw";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_framework("arg(a). foo(a)."), SyntaxError);
    EXPECT_THROW(parse_framework("arg()."), SyntaxError);
    EXPECT_THROW(parse_framework("arg(a-b)."), SyntaxError);
}

TEST(FrameworkErrors, UndeclaredAndDuplicate) {
    EXPECT_THROW(parse_framework("arg(a). att(a,b)."), UndeclaredArgument);
    EXPECT_THROW(parse_framework("arg(a). arg(a)."), DuplicateArgument);
    EXPECT_THROW(Framework::from_names({"a", "a"}, {}), DuplicateArgument);
    EXPECT_THROW(Framework::from_names({"a"}, {{"a", "c"}}), UndeclaredArgument);
}

TEST(FrameworkErrors, UnknownName) {
    auto af = parse_framework(murder_text);
    EXPECT_THROW(af.id("a9"), UnknownArgument);
    EXPECT_FALSE(af.find("a9").has_value());
}

TEST(Framework, SerializeRoundTrip) {
    auto af = parse_framework("arg(c). arg(a). arg(b). att(c,a). att(a,b). att(b,b).");
    auto text = serialize_framework(af);
    EXPECT_EQ(text, "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,b).\natt(c,a).\n");
    EXPECT_EQ(parse_framework(text), af);
}

TEST(Framework, FromIndicesNames) {
    auto af = Framework::from_indices(3, {{0, 1}, {2, 2}});
    EXPECT_EQ(af.names(), (std::vector<std::string>{"a", "b", "c"}));
    auto big = Framework::from_indices(30, {});
    EXPECT_EQ(big.names().front(), "a00");
    EXPECT_EQ(big.names().back(), "a29");
    EXPECT_THROW(Framework::from_indices(2, {{0, 5}}), UnknownArgument);
}

TEST(Framework, FingerprintSeparatesFrameworks) {
    auto a = parse_framework(murder_text);
    auto b = parse_framework("arg(a1). arg(a2). arg(a3). att(a1,a2). att(a2,a1).");
    EXPECT_NE(a.fingerprint(), b.fingerprint());
    EXPECT_EQ(a.fingerprint(), parse_framework(serialize_framework(a)).fingerprint());
}

TEST(Labelling, TextAndTripleForms) {
    auto af = parse_framework(murder_text);
    auto l = make_labelling(af, {Label::in, Label::out, Label::in});
    EXPECT_EQ(to_text(af, l), "a1=in,a2=out,a3=in");
    EXPECT_EQ(to_triple(af, l), "([a1,a3],[a2],[])");
    EXPECT_EQ(parse_labelling(af, "a3=in, a2=out, a1=in"), l);
    EXPECT_THROW(parse_labelling(af, "a1=in,a2=out"), ParseError);
    EXPECT_THROW(parse_labelling(af, "a1=in,a2=out,a3=maybe"), ParseError);
}

TEST(Labelling, BoundToOneFramework) {
    auto af = parse_framework(murder_text);
    auto other = parse_framework("arg(a1). arg(a2). arg(a3).");
    auto l = Labelling::uniform(af, Label::undec);
    EXPECT_TRUE(l.bound_to(af));
    EXPECT_FALSE(l.bound_to(other));
    EXPECT_THROW(is_complete(other, l), FrameworkMismatch);
}

TEST(LabelSet, Basics) {
    LabelSet s{Label::out, Label::undec};
    EXPECT_EQ(s.to_string(), "{out,undec}");
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.first(), Label::out);
    EXPECT_TRUE(LabelSet{}.empty());
    EXPECT_EQ(LabelSet::all().size(), 3u);
}
