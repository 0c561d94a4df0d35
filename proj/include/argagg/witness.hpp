#ifndef ARGAGG_WITNESS_HPP
#define ARGAGG_WITNESS_HPP

#include "argagg/error.hpp"
#include "argagg/permutation.hpp"
#include "argagg/plurality.hpp"
#include "argagg/postulates.hpp"
#include "argagg/semantics.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argagg {

enum class Theorem { ud_anon_ssys, ud_anon_ssys_cr, ud_wsys_anon_cr_unan, notie_wsys_anon_cr_supp };

inline constexpr std::array<Theorem, 4> all_theorems{Theorem::ud_anon_ssys, Theorem::ud_anon_ssys_cr,
                                                     Theorem::ud_wsys_anon_cr_unan, Theorem::notie_wsys_anon_cr_supp};

inline std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::ud_anon_ssys: return "T-UD-Anon-SSys";
        case Theorem::ud_anon_ssys_cr: return "T-UD-Anon-SSys-CR";
        case Theorem::ud_wsys_anon_cr_unan: return "T-UD-WSys-Anon-CR-Unan";
        case Theorem::notie_wsys_anon_cr_supp: return "T-NoTie-WSys-Anon-CR-Supp";
    }
    return "?";
}

/// Accepts the full id or the short aliases T1..T4.
inline Theorem parse_theorem(std::string_view s) {
    static constexpr std::array<std::string_view, 4> aliases{"T1", "T2", "T3", "T4"};
    for (std::size_t i = 0; i < all_theorems.size(); ++i)
        if (s == to_string(all_theorems[i]) || s == aliases[i]) return all_theorems[i];
    throw ParseError("unknown theorem '" + std::string(s) + "'");
}

inline bool hypothesis_holds(Theorem t, std::size_t n) {
    if (n == 0) return false;
    switch (t) {
        case Theorem::ud_anon_ssys:
        case Theorem::notie_wsys_anon_cr_supp: return n % 3 == 0;
        case Theorem::ud_anon_ssys_cr:
        case Theorem::ud_wsys_anon_cr_unan: return n % 2 == 0;
    }
    return false;
}

inline std::string hypothesis_text(Theorem t) {
    switch (t) {
        case Theorem::ud_anon_ssys:
        case Theorem::notie_wsys_anon_cr_supp: return "agent count divisible by three";
        default: return "even agent count";
    }
}

/// F(P_profile)(argument) must lie in `allowed`.
struct AllowedConstraint {
    std::size_t profile = 0;
    ArgumentId argument;
    LabelSet allowed;
    bool operator==(const AllowedConstraint&) const = default;
};

/// F(P_p)(a) = rho(F(P_q)(b)).
struct RelateConstraint {
    std::size_t p = 0;
    ArgumentId a;
    std::size_t q = 0;
    ArgumentId b;
    LabelPermutation rho;
    bool operator==(const RelateConstraint&) const = default;
};

struct ConstraintSet {
    std::vector<AllowedConstraint> allowed;
    std::vector<RelateConstraint> relate;
    /// Profiles whose outcome must be a complete labelling.
    std::vector<std::size_t> complete;
    bool operator==(const ConstraintSet&) const = default;

    void append(const ConstraintSet& o) {
        allowed.insert(allowed.end(), o.allowed.begin(), o.allowed.end());
        relate.insert(relate.end(), o.relate.begin(), o.relate.end());
        complete.insert(complete.end(), o.complete.begin(), o.complete.end());
    }
};

/// One postulate application. `profiles`, `arguments` and `permutation` are
/// the parameters from which `forced` is re-derived.
struct DerivationStep {
    Postulate postulate = Postulate::universal_domain;
    std::vector<std::size_t> profiles;
    std::vector<ArgumentId> arguments;
    std::optional<LabelPermutation> permutation;
    ConstraintSet forced;
    std::string note;
    bool operator==(const DerivationStep&) const = default;
};

struct WitnessReport {
    Theorem theorem = Theorem::ud_anon_ssys;
    std::size_t agents = 0;
    bool supportiveness_for_cr = false;
    Framework framework;
    std::vector<std::string> profile_names;
    std::vector<Profile> profiles;
    std::vector<DerivationStep> steps;
    /// Candidate outcome tuples examined by the contradiction check.
    std::size_t candidates_examined = 0;
    bool satisfiable = true;
    std::string conclusion;

    bool contradiction_verified() const { return !satisfiable; }
    bool operator==(const WitnessReport& o) const {
        return theorem == o.theorem && agents == o.agents && supportiveness_for_cr == o.supportiveness_for_cr &&
               framework == o.framework && profile_names == o.profile_names && profiles == o.profiles &&
               steps == o.steps && candidates_examined == o.candidates_examined && satisfiable == o.satisfiable &&
               conclusion == o.conclusion;
    }
};

/// Re-derives the constraints a postulate forces on the given profiles.
/// Throws Error when the postulate's premise does not hold.
inline ConstraintSet derive_step(const Framework& af, const std::vector<Profile>& ps, const DerivationStep& s) {
    ConstraintSet c;
    auto prof = [&](std::size_t i) -> const Profile& {
        if (i >= s.profiles.size() || s.profiles[i] >= ps.size()) throw Error("step names an unknown profile");
        return ps[s.profiles[i]];
    };
    auto arg = [&](std::size_t i) {
        if (i >= s.arguments.size() || s.arguments[i].index >= af.size()) throw Error("step names an unknown argument");
        return s.arguments[i];
    };
    switch (s.postulate) {
        case Postulate::universal_domain:
        case Postulate::no_tie_universal_domain: {
            // Premise only: every vote is complete (and, without ties, no column ties).
            for (std::size_t i = 0; i < s.profiles.size(); ++i) {
                const Profile& p = prof(i);
                for (const auto& l : p.labellings())
                    if (!is_complete(af, l)) throw Error("profile outside the complete domain");
                if (s.postulate == Postulate::no_tie_universal_domain && !is_tie_free(p))
                    throw Error("profile has a tie");
            }
            return c;
        }
        case Postulate::collective_rationality: c.complete.push_back(s.profiles.at(0)); prof(0); return c;
        case Postulate::unanimity: {
            const Profile& p = prof(0);
            for (const auto& l : p.labellings())
                if (l != p[0]) throw Error("unanimity applied to a non-constant profile");
            for (auto a : af.arguments()) c.allowed.push_back({s.profiles[0], a, LabelSet{p[0][a]}});
            return c;
        }
        case Postulate::supportiveness:
        case Postulate::in_out_supportiveness: {
            const Profile& p = prof(0);
            for (auto a : af.arguments()) {
                LabelSet voted;
                for (auto l : p.column(a)) voted.insert(l);
                if (s.postulate == Postulate::in_out_supportiveness) voted.insert(Label::undec);
                c.allowed.push_back({s.profiles[0], a, voted});
            }
            return c;
        }
        case Postulate::anonymity: {
            if (!detail::is_rearrangement(prof(0), prof(1))) throw Error("anonymity applied to non-rearranged profiles");
            for (auto a : af.arguments())
                c.relate.push_back({s.profiles[0], a, s.profiles[1], a, LabelPermutation::identity()});
            return c;
        }
        case Postulate::weak_systematicity:
        case Postulate::in_out_systematicity:
        case Postulate::strong_systematicity:
        case Postulate::independence: {
            LabelPermutation rho = s.permutation.value_or(LabelPermutation::identity());
            ArgumentId a = arg(0);
            ArgumentId b = s.postulate == Postulate::independence ? a : arg(1);
            if (s.postulate == Postulate::independence ? !rho.is_identity() : !detail::permutation_allowed(s.postulate, rho))
                throw Error("permutation not admitted by " + std::string(to_string(s.postulate)));
            const Profile& p = prof(0);
            const Profile& q = prof(1);
            if (p.agents() != q.agents()) throw Error("profiles differ in agent count");
            for (std::size_t i = 0; i < p.agents(); ++i)
                if (p[i][a] != rho(q[i][b])) throw Error("columns do not match under the permutation");
            c.relate.push_back({s.profiles[0], a, s.profiles[1], b, rho});
            return c;
        }
        default: throw Error("postulate " + std::string(to_string(s.postulate)) + " is not used in witnesses");
    }
}

struct SolveResult {
    bool satisfiable = false;
    std::size_t candidates_examined = 0;
    /// A satisfying assignment (one labelling per profile) when satisfiable.
    std::vector<Labelling> assignment;
};

/// Decides whether some assignment of one collective labelling per profile
/// meets every constraint. Profiles under a completeness constraint range
/// over Comp(AF); the others over all 3^|A| labellings, restricted to the
/// arguments the constraints mention.
inline SolveResult solve_constraints(const Framework& af, std::size_t profiles, const ConstraintSet& cs) {
    SolveResult res;
    std::vector<bool> must_complete(profiles, false);
    for (auto k : cs.complete) must_complete.at(k) = true;
    // Unary domains per (profile, argument).
    std::vector<std::vector<LabelSet>> dom(profiles, std::vector<LabelSet>(af.size(), LabelSet::all()));
    for (const auto& a : cs.allowed) dom.at(a.profile).at(a.argument.index) = dom[a.profile][a.argument.index] & a.allowed;
    std::vector<std::vector<bool>> mentioned(profiles, std::vector<bool>(af.size(), false));
    for (const auto& a : cs.allowed) mentioned[a.profile][a.argument.index] = true;
    for (const auto& r : cs.relate) {
        mentioned.at(r.p).at(r.a.index) = true;
        mentioned.at(r.q).at(r.b.index) = true;
    }
    auto complete = enumerate_complete(af);

    // Candidate labellings per profile; free arguments are fixed to their
    // first admissible label since no constraint reads them.
    std::vector<std::vector<Labelling>> cand(profiles);
    for (std::size_t k = 0; k < profiles; ++k) {
        auto ok = [&](const Labelling& l) {
            for (auto a : af.arguments())
                if (!dom[k][a.index].contains(l[a])) return false;
            return true;
        };
        if (must_complete[k]) {
            for (const auto& l : complete)
                if (ok(l)) cand[k].push_back(l);
            continue;
        }
        std::vector<std::uint32_t> open;
        std::vector<Label> base(af.size(), Label::in);
        bool empty = false;
        for (auto a : af.arguments()) {
            if (dom[k][a.index].size() == 0) empty = true;
            else if (mentioned[k][a.index]) open.push_back(a.index);
            else base[a.index] = dom[k][a.index].first();
        }
        if (empty) continue;
        std::vector<std::size_t> digit(open.size(), 0);
        while (true) {
            std::vector<Label> ls = base;
            bool valid = true;
            for (std::size_t t = 0; t < open.size(); ++t) {
                Label l = all_labels[digit[t]];
                if (!dom[k][open[t]].contains(l)) valid = false;
                ls[open[t]] = l;
            }
            if (valid) cand[k].emplace_back(af, ls);
            std::size_t t = 0;
            while (t < open.size() && ++digit[t] == 3) digit[t++] = 0;
            if (t == open.size()) break;
        }
    }

    std::vector<const Labelling*> chosen(profiles, nullptr);
    auto consistent = [&](std::size_t upto) {
        for (const auto& r : cs.relate) {
            if (r.p > upto || r.q > upto) continue;
            if ((*chosen[r.p])[r.a] != r.rho((*chosen[r.q])[r.b])) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == profiles) return true;
        for (const auto& l : cand[k]) {
            chosen[k] = &l;
            ++res.candidates_examined;
            if (consistent(k) && self(self, k + 1)) return true;
        }
        chosen[k] = nullptr;
        return false;
    };
    if (profiles > 0 && search(search, 0)) {
        res.satisfiable = true;
        for (auto* l : chosen) res.assignment.push_back(*l);
    }
    return res;
}

namespace detail {

struct WitnessBuilder {
    WitnessReport r;

    std::size_t add_profile(std::string name, std::vector<Labelling> votes) {
        r.profile_names.push_back(std::move(name));
        r.profiles.emplace_back(std::move(votes));
        return r.profiles.size() - 1;
    }

    void step(Postulate p, std::vector<std::size_t> profiles, std::vector<ArgumentId> args,
              std::optional<LabelPermutation> rho, std::string note) {
        DerivationStep s;
        s.postulate = p;
        s.profiles = std::move(profiles);
        s.arguments = std::move(args);
        s.permutation = rho;
        s.note = std::move(note);
        s.forced = derive_step(r.framework, r.profiles, s);
        r.steps.push_back(std::move(s));
    }

    static std::vector<Labelling> groups(std::size_t n, std::initializer_list<const Labelling*> parts) {
        std::vector<Labelling> out;
        std::size_t size = n / parts.size();
        for (auto* l : parts)
            for (std::size_t i = 0; i < size; ++i) out.push_back(*l);
        return out;
    }

    void finish() {
        ConstraintSet all;
        for (const auto& s : r.steps) all.append(s.forced);
        auto res = solve_constraints(r.framework, r.profiles.size(), all);
        r.satisfiable = res.satisfiable;
        r.candidates_examined = res.candidates_examined;
        r.conclusion = res.satisfiable ? "constraints are satisfiable: no contradiction"
                       : all.complete.empty() ? "no collective labelling satisfies constraints"
                                              : "no complete labelling satisfies constraints";
    }
};

}  // namespace detail

/// Builds the profiles of the named impossibility result, applies each
/// postulate as a constraint-forcing step and checks by enumeration that no
/// collective outcome meets all constraints.
inline WitnessReport impossibility_witness(Theorem t, std::size_t n, bool supportiveness_for_cr = false) {
    if (!hypothesis_holds(t, n))
        throw HypothesisUnmet(std::string(to_string(t)) + " needs " + hypothesis_text(t) + ", got " +
                              std::to_string(n));
    if (supportiveness_for_cr && t != Theorem::ud_anon_ssys_cr)
        throw Error("supportiveness substitution applies only to " + std::string(to_string(Theorem::ud_anon_ssys_cr)));
    detail::WitnessBuilder b;
    b.r.theorem = t;
    b.r.agents = n;
    b.r.supportiveness_for_cr = supportiveness_for_cr;
    using L = Label;
    switch (t) {
        case Theorem::ud_anon_ssys: {
            // Murder case; a1 takes all three labels across Comp(AF).
            b.r.framework = parse_framework("arg(a1). arg(a2). arg(a3). att(a1,a2). att(a2,a1). att(a2,a3).");
            const auto& af = b.r.framework;
            auto a1 = af.id("a1");
            Labelling lin = make_labelling(af, {L::in, L::out, L::in});
            Labelling lout = make_labelling(af, {L::out, L::in, L::out});
            Labelling lund = make_labelling(af, {L::undec, L::undec, L::undec});
            auto p = b.add_profile("P", b.groups(n, {&lin, &lout, &lund}));
            auto q = b.add_profile("P'", b.groups(n, {&lout, &lund, &lin}));
            // P_i(a1) = rho(P'_i(a1)) with rho fixpoint-free.
            LabelPermutation rho(L::undec, L::in, L::out);
            b.step(Postulate::universal_domain, {p, q}, {}, std::nullopt, "all votes are complete labellings");
            b.step(Postulate::strong_systematicity, {p, q}, {a1, a1}, rho,
                   "F(P)(a1) = rho(F(P')(a1)) with rho = " + rho.to_string());
            b.step(Postulate::anonymity, {p, q}, {}, std::nullopt, "P' reorders P, so F(P) = F(P')");
            break;
        }
        case Theorem::ud_anon_ssys_cr: {
            b.r.framework = parse_framework("arg(a). arg(b). arg(c). att(a,b). att(b,a). att(a,c). att(b,c).");
            const auto& af = b.r.framework;
            auto c = af.id("c");
            Labelling lund = make_labelling(af, {L::undec, L::undec, L::undec});
            Labelling lout = make_labelling(af, {L::in, L::out, L::out});
            auto p = b.add_profile("P", b.groups(n, {&lund, &lout}));
            auto q = b.add_profile("P'", b.groups(n, {&lout, &lund}));
            LabelPermutation rho(L::in, L::undec, L::out);
            b.step(Postulate::universal_domain, {p, q}, {}, std::nullopt, "all votes are complete labellings");
            b.step(Postulate::strong_systematicity, {p, q}, {c, c}, rho,
                   "F(P)(c) = rho(F(P')(c)) with rho swapping out and undec");
            b.step(Postulate::anonymity, {p, q}, {}, std::nullopt, "P' reorders P, so F(P) = F(P')");
            if (supportiveness_for_cr)
                b.step(Postulate::supportiveness, {p}, {}, std::nullopt, "c is only voted out or undec");
            else
                b.step(Postulate::collective_rationality, {p}, {}, std::nullopt, "c is never in a complete labelling");
            break;
        }
        case Theorem::ud_wsys_anon_cr_unan: {
            b.r.framework = parse_framework("arg(a). arg(b). arg(c). att(a,b). att(b,a). att(a,c). att(b,c).");
            const auto& af = b.r.framework;
            auto a = af.id("a");
            auto bb = af.id("b");
            auto c = af.id("c");
            Labelling l1 = make_labelling(af, {L::in, L::out, L::out});
            Labelling l2 = make_labelling(af, {L::out, L::in, L::out});
            auto p = b.add_profile("P", b.groups(n, {&l1, &l2}));
            auto q = b.add_profile("P'", b.groups(n, {&l2, &l1}));
            auto u = b.add_profile("U", b.groups(n, {&l1}));
            b.step(Postulate::universal_domain, {p, q, u}, {}, std::nullopt, "all votes are complete labellings");
            b.step(Postulate::unanimity, {u}, {}, std::nullopt, "F(U) = L, so F(U)(c) = out");
            b.step(Postulate::weak_systematicity, {p, u}, {c, c}, std::nullopt,
                   "c is voted out by everyone in P and U: F(P)(c) = F(U)(c)");
            b.step(Postulate::weak_systematicity, {p, q}, {a, bb}, std::nullopt,
                   "column of a in P equals column of b in P': F(P)(a) = F(P')(b)");
            b.step(Postulate::anonymity, {p, q}, {}, std::nullopt, "P' reorders P, so F(P) = F(P')");
            b.step(Postulate::collective_rationality, {p}, {}, std::nullopt, "F(P) is complete");
            break;
        }
        case Theorem::notie_wsys_anon_cr_supp: {
            b.r.framework =
                parse_framework("arg(a). arg(b). arg(b'). arg(c). arg(c'). att(b,a). att(c,a). att(b,b'). att(b',b)."
                                " att(c,c'). att(c',c).");
            const auto& af = b.r.framework;
            auto a = af.id("a");
            auto bb = af.id("b");
            auto c = af.id("c");
            // Argument order: a, b, b', c, c'.
            Labelling l1 = make_labelling(af, {L::out, L::in, L::out, L::out, L::in});
            Labelling l2 = make_labelling(af, {L::out, L::out, L::in, L::in, L::out});
            Labelling l3 = make_labelling(af, {L::in, L::out, L::in, L::out, L::in});
            auto p = b.add_profile("P", b.groups(n, {&l1, &l2, &l3}));
            auto q = b.add_profile("P'", b.groups(n, {&l3, &l1, &l2}));
            auto r = b.add_profile("P''", b.groups(n, {&l2, &l3, &l1}));
            b.step(Postulate::no_tie_universal_domain, {p, q, r}, {}, std::nullopt,
                   "all votes are complete and no column ties");
            b.step(Postulate::weak_systematicity, {p, r}, {a, bb}, std::nullopt,
                   "column of a in P equals column of b in P'': F(P)(a) = F(P'')(b)");
            b.step(Postulate::anonymity, {p, r}, {}, std::nullopt, "P'' reorders P, so F(P) = F(P'')");
            b.step(Postulate::weak_systematicity, {p, q}, {a, c}, std::nullopt,
                   "column of a in P equals column of c in P': F(P)(a) = F(P')(c)");
            b.step(Postulate::anonymity, {p, q}, {}, std::nullopt, "P' reorders P, so F(P) = F(P')");
            b.step(Postulate::collective_rationality, {p}, {}, std::nullopt,
                   "with a = b = c only the all-undec labelling is complete");
            b.step(Postulate::supportiveness, {p}, {}, std::nullopt, "nobody votes undec on a");
            break;
        }
    }
    b.finish();
    return b.r;
}

/// Independent check of a report: every step's constraints are re-derived
/// from its stored profiles and the contradiction check is re-executed.
inline bool verify_witness(const WitnessReport& w) {
    ConstraintSet all;
    try {
        for (const auto& s : w.steps) {
            if (derive_step(w.framework, w.profiles, s) != s.forced) return false;
            all.append(s.forced);
        }
    } catch (const Error&) {
        return false;
    }
    auto res = solve_constraints(w.framework, w.profiles.size(), all);
    return res.satisfiable == w.satisfiable && res.candidates_examined == w.candidates_examined;
}

/// Rebuilds the witness from its parameters and compares it to `w`.
inline bool replays(const WitnessReport& w) {
    try {
        return impossibility_witness(w.theorem, w.agents, w.supportiveness_for_cr) == w;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace argagg

#endif
