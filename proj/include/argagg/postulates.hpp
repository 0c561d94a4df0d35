#ifndef ARGAGG_POSTULATES_HPP
#define ARGAGG_POSTULATES_HPP

#include "argagg/domain.hpp"
#include "argagg/error.hpp"
#include "argagg/operators.hpp"
#include "argagg/permutation.hpp"
#include "argagg/plurality.hpp"
#include "argagg/semantics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argagg {

enum class Postulate {
    universal_domain,
    no_tie_universal_domain,
    collective_rationality,
    independence,
    anonymity,
    non_dictatorship,
    unanimity,
    supportiveness,
    in_out_supportiveness,
    strong_systematicity,
    in_out_systematicity,
    weak_systematicity,
    monotonicity,
    in_out_monotonicity,
    in_cr1,
    in_cr2,
    out_cr,
    undec_cr1,
    undec_cr2,
};

inline constexpr std::array<Postulate, 19> all_postulates{
    Postulate::universal_domain,     Postulate::no_tie_universal_domain, Postulate::collective_rationality,
    Postulate::independence,         Postulate::anonymity,               Postulate::non_dictatorship,
    Postulate::unanimity,            Postulate::supportiveness,          Postulate::in_out_supportiveness,
    Postulate::strong_systematicity, Postulate::in_out_systematicity,    Postulate::weak_systematicity,
    Postulate::monotonicity,         Postulate::in_out_monotonicity,     Postulate::in_cr1,
    Postulate::in_cr2,               Postulate::out_cr,                  Postulate::undec_cr1,
    Postulate::undec_cr2,
};

inline constexpr std::array<Postulate, 5> cr_subconditions{Postulate::in_cr1, Postulate::in_cr2, Postulate::out_cr,
                                                           Postulate::undec_cr1, Postulate::undec_cr2};

inline std::string_view to_string(Postulate p) {
    switch (p) {
        case Postulate::universal_domain: return "universal-domain";
        case Postulate::no_tie_universal_domain: return "no-tie-universal-domain";
        case Postulate::collective_rationality: return "collective-rationality";
        case Postulate::independence: return "independence";
        case Postulate::anonymity: return "anonymity";
        case Postulate::non_dictatorship: return "non-dictatorship";
        case Postulate::unanimity: return "unanimity";
        case Postulate::supportiveness: return "supportiveness";
        case Postulate::in_out_supportiveness: return "in-out-supportiveness";
        case Postulate::strong_systematicity: return "strong-systematicity";
        case Postulate::in_out_systematicity: return "in-out-systematicity";
        case Postulate::weak_systematicity: return "weak-systematicity";
        case Postulate::monotonicity: return "monotonicity";
        case Postulate::in_out_monotonicity: return "in-out-monotonicity";
        case Postulate::in_cr1: return "in-cr1";
        case Postulate::in_cr2: return "in-cr2";
        case Postulate::out_cr: return "out-cr";
        case Postulate::undec_cr1: return "undec-cr1";
        case Postulate::undec_cr2: return "undec-cr2";
    }
    return "?";
}

inline Postulate parse_postulate(std::string_view s) {
    for (auto p : all_postulates)
        if (to_string(p) == s) return p;
    throw ParseError("unknown postulate '" + std::string(s) + "'");
}

inline bool is_cr_subcondition(Postulate p) {
    return std::find(cr_subconditions.begin(), cr_subconditions.end(), p) != cr_subconditions.end();
}

struct ClauseResult {
    bool holds = true;
    /// Attacker responsible for the failure, when the clause names one.
    std::optional<ArgumentId> attacker;
};

/// One of the five legality sub-clauses of a collective labelling at `a`.
inline ClauseResult check_clause(const Framework& af, const Labelling& o, ArgumentId a, Postulate clause) {
    Label la = o[a];
    auto first_with = [&](Label l) -> std::optional<ArgumentId> {
        for (auto b : af.attackers(a))
            if (o[b] == l) return b;
        return std::nullopt;
    };
    switch (clause) {
        case Postulate::in_cr1:
            if (la == Label::in)
                if (auto b = first_with(Label::in)) return {false, b};
            return {};
        case Postulate::in_cr2:
            if (la == Label::in)
                if (auto b = first_with(Label::undec)) return {false, b};
            return {};
        case Postulate::out_cr:
            if (la == Label::out && !first_with(Label::in)) return {false, std::nullopt};
            return {};
        case Postulate::undec_cr1:
            if (la == Label::undec)
                if (auto b = first_with(Label::in)) return {false, b};
            return {};
        case Postulate::undec_cr2:
            if (la == Label::undec && !first_with(Label::undec)) return {false, std::nullopt};
            return {};
        default: throw Error("not a collective-rationality clause");
    }
}

struct ColumnTally {
    std::size_t profile = 0;
    ArgumentId argument;
    Tally tally;

    bool operator==(const ColumnTally&) const = default;
};

/// Concrete evidence for a violated postulate, self-contained so it can be
/// replayed against the operator without the originating domain.
struct Counterexample {
    Postulate postulate = Postulate::collective_rationality;
    Framework framework;
    std::vector<Profile> profiles;
    std::vector<ArgumentId> focus;
    std::vector<ColumnTally> tallies;
    std::optional<LabelPermutation> permutation;
    std::optional<std::size_t> agent;
    std::optional<Label> label;
    std::string description;
};

enum class Verdict { holds_on_domain, violated, skipped };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds_on_domain: return "holds-on-domain";
        case Verdict::violated: return "violated";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

inline Verdict parse_verdict(std::string_view s) {
    for (auto v : {Verdict::holds_on_domain, Verdict::violated, Verdict::skipped})
        if (to_string(v) == s) return v;
    throw ParseError("unknown verdict '" + std::string(s) + "'");
}

struct CheckReport {
    Postulate postulate = Postulate::collective_rationality;
    Verdict verdict = Verdict::holds_on_domain;
    std::optional<Counterexample> counterexample;
    std::string reason;
    std::size_t profiles_examined = 0;
    /// Pairs whose partner profile fell outside the domain or had no defined outcome.
    std::size_t pairs_skipped = 0;
    std::string operator_name;
    DomainSpec domain;
};

namespace detail {

inline bool defined_equal_label(const AggregateOutcome& o, ArgumentId a, Label l) {
    return o.is_defined() && o.labelling()[a] == l;
}

inline bool is_rearrangement(const Profile& p, const Profile& q) {
    if (p.agents() != q.agents()) return false;
    auto x = p.labellings();
    auto y = q.labellings();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

inline bool permutation_allowed(Postulate p, const LabelPermutation& rho) {
    switch (p) {
        case Postulate::weak_systematicity: return rho.is_identity();
        case Postulate::in_out_systematicity: return rho.is_undec_preserving();
        case Postulate::strong_systematicity: return true;
        default: return false;
    }
}

}  // namespace detail

/// Re-runs `op` on the stored profiles and confirms the violation recorded
/// in `cx`. Non-dictatorship is confirmed against the stored sample only.
inline bool replays(const Counterexample& cx, const Operator& op) {
    if (cx.profiles.empty()) return false;
    for (const auto& p : cx.profiles)
        if (!p.bound_to(cx.framework)) return false;
    std::vector<AggregateOutcome> out;
    for (const auto& p : cx.profiles) out.push_back(op.apply(p));
    const Profile& p0 = cx.profiles[0];
    const auto& o0 = out[0];
    auto focus = [&](std::size_t i) -> std::optional<ArgumentId> {
        if (i < cx.focus.size() && cx.focus[i].index < cx.framework.size()) return cx.focus[i];
        return std::nullopt;
    };
    switch (cx.postulate) {
        case Postulate::universal_domain: return !o0.is_defined();
        case Postulate::no_tie_universal_domain: return is_tie_free(p0) && !o0.is_defined();
        case Postulate::collective_rationality: return o0.is_defined() && !is_complete(cx.framework, o0.labelling());
        case Postulate::in_cr1:
        case Postulate::in_cr2:
        case Postulate::out_cr:
        case Postulate::undec_cr1:
        case Postulate::undec_cr2: {
            auto a = focus(0);
            return a && o0.is_defined() && !check_clause(cx.framework, o0.labelling(), *a, cx.postulate).holds;
        }
        case Postulate::supportiveness:
        case Postulate::in_out_supportiveness: {
            auto a = focus(0);
            if (!a || !o0.is_defined()) return false;
            Label l = o0.labelling()[*a];
            if (cx.postulate == Postulate::in_out_supportiveness && l == Label::undec) return false;
            return tally(p0, *a).count(l) == 0;
        }
        case Postulate::unanimity: {
            auto ls = p0.labellings();
            bool constant = std::all_of(ls.begin(), ls.end(), [&](const Labelling& l) { return l == ls[0]; });
            return constant && o0.is_defined() && o0.labelling() != ls[0];
        }
        case Postulate::anonymity:
            return out.size() == 2 && out[0].is_defined() && out[1].is_defined() &&
                   detail::is_rearrangement(p0, cx.profiles[1]) && out[0].labelling() != out[1].labelling();
        case Postulate::independence: {
            auto a = focus(0);
            if (!a || out.size() != 2 || !out[0].is_defined() || !out[1].is_defined()) return false;
            if (p0.column(*a) != cx.profiles[1].column(*a)) return false;
            return out[0].labelling()[*a] != out[1].labelling()[*a];
        }
        case Postulate::weak_systematicity:
        case Postulate::in_out_systematicity:
        case Postulate::strong_systematicity: {
            auto a = focus(0);
            auto b = focus(1);
            LabelPermutation rho = cx.permutation.value_or(LabelPermutation::identity());
            if (!a || !b || out.size() != 2 || !out[0].is_defined() || !out[1].is_defined()) return false;
            if (!detail::permutation_allowed(cx.postulate, rho)) return false;
            const Profile& p1 = cx.profiles[1];
            if (p1.agents() != p0.agents()) return false;
            for (std::size_t i = 0; i < p0.agents(); ++i)
                if (p0[i][*a] != rho(p1[i][*b])) return false;
            return out[0].labelling()[*a] != rho(out[1].labelling()[*b]);
        }
        case Postulate::monotonicity:
        case Postulate::in_out_monotonicity: {
            auto a = focus(0);
            if (!a || !cx.label || out.size() != 2) return false;
            Label l = *cx.label;
            if (cx.postulate == Postulate::in_out_monotonicity && l == Label::undec) return false;
            const Profile& p1 = cx.profiles[1];
            if (p1.agents() != p0.agents()) return false;
            bool any_switch = false;
            for (std::size_t j = 0; j < p0.agents(); ++j) {
                if (p0[j] == p1[j]) continue;
                if (p0[j][*a] == l || p1[j][*a] != l) return false;
                any_switch = true;
            }
            return any_switch && detail::defined_equal_label(out[0], *a, l) && out[1].is_defined() &&
                   out[1].labelling()[*a] != l;
        }
        case Postulate::non_dictatorship: {
            if (!cx.agent) return false;
            std::size_t i = *cx.agent;
            for (std::size_t k = 0; k < cx.profiles.size(); ++k) {
                if (i >= cx.profiles[k].agents()) return false;
                if (out[k].is_defined() && out[k].labelling() != cx.profiles[k][i]) return false;
            }
            return true;
        }
    }
    return false;
}

/// Result of testing whether per-argument functions of the tally triple
/// reproduce the operator on the domain.
struct TallyCharacterisation {
    bool holds = true;
    std::size_t profiles_examined = 0;
    /// On failure: two profiles with equal tallies on `argument` but different labels.
    std::optional<std::pair<Profile, Profile>> conflict;
    std::optional<ArgumentId> argument;
};

/// Checks postulates of one operator over one domain; outcomes are cached
/// across checks.
class PostulateChecker {
public:
    PostulateChecker(const Framework& af, Operator op, const DomainSpec& spec, const EnumerationLimits& limits = {})
        : af_(af), op_(std::move(op)), dom_(af_, spec, limits), cache_(dom_, op_) {
        dom_.require_budget();
    }
    PostulateChecker(const PostulateChecker&) = delete;
    PostulateChecker& operator=(const PostulateChecker&) = delete;

    const ProfileDomain& domain() const noexcept { return dom_; }
    const Operator& op() const noexcept { return op_; }
    std::size_t evaluations() const noexcept { return cache_.evaluations(); }

    CheckReport check(Postulate p) {
        CheckReport r;
        r.postulate = p;
        r.operator_name = op_.name;
        r.domain = dom_.spec();
        if (dom_.members().empty()) {
            r.verdict = Verdict::skipped;
            r.reason = "domain is empty: framework has no " + std::string(to_string(dom_.spec().semantics)) +
                       " labelling";
            return r;
        }
        switch (p) {
            case Postulate::universal_domain: definedness(r, keys_with_ties()); break;
            case Postulate::no_tie_universal_domain: definedness(r, tie_free_keys()); break;
            case Postulate::collective_rationality: rationality(r); break;
            case Postulate::in_cr1:
            case Postulate::in_cr2:
            case Postulate::out_cr:
            case Postulate::undec_cr1:
            case Postulate::undec_cr2: subcondition(r); break;
            case Postulate::supportiveness:
            case Postulate::in_out_supportiveness: supportiveness(r); break;
            case Postulate::unanimity: unanimity(r); break;
            case Postulate::anonymity: anonymity(r); break;
            case Postulate::non_dictatorship: non_dictatorship(r); break;
            case Postulate::independence:
            case Postulate::weak_systematicity:
            case Postulate::in_out_systematicity:
            case Postulate::strong_systematicity: systematicity(r); break;
            case Postulate::monotonicity:
            case Postulate::in_out_monotonicity: monotonicity(r); break;
        }
        if (r.counterexample) r.verdict = Verdict::violated;
        return r;
    }

    std::vector<CheckReport> check_cr_subconditions() {
        std::vector<CheckReport> out;
        for (auto p : cr_subconditions) out.push_back(check(p));
        return out;
    }

    TallyCharacterisation tally_characterisation() {
        TallyCharacterisation t;
        std::map<std::pair<std::uint32_t, std::array<std::size_t, 3>>, std::pair<Label, const ProfileKey*>> seen;
        for (const auto& k : keys()) {
            ++t.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            for (auto a : af_.arguments()) {
                Tally tl;
                for (auto m : k) add_vote(tl, dom_.label(m, a));
                auto key = std::make_pair(a.index, std::array<std::size_t, 3>{tl.n_in, tl.n_out, tl.n_undec});
                Label l = o.labelling()[a];
                auto [it, fresh] = seen.try_emplace(key, l, &k);
                if (!fresh && it->second.first != l) {
                    t.holds = false;
                    t.conflict.emplace(dom_.profile(*it->second.second), dom_.profile(k));
                    t.argument = a;
                    return t;
                }
            }
        }
        return t;
    }

private:
    const std::vector<ProfileKey>& keys() {
        if (!keys_) keys_ = dom_.keys(false);
        return *keys_;
    }
    const std::vector<ProfileKey>& keys_with_ties() {
        if (!keys_ties_) keys_ties_ = dom_.keys(true);
        return *keys_ties_;
    }
    std::vector<ProfileKey> tie_free_keys() {
        std::vector<ProfileKey> out;
        for (const auto& k : keys_with_ties())
            if (dom_.tie_free(k)) out.push_back(k);
        return out;
    }

    bool exhaustive() const { return dom_.spec().mode == DomainMode::exhaustive; }

    Counterexample make(Postulate p, std::vector<ProfileKey> ks, std::vector<ArgumentId> focus, std::string what) {
        Counterexample cx;
        cx.postulate = p;
        cx.framework = af_;
        for (const auto& k : ks) cx.profiles.push_back(dom_.profile(k));
        cx.focus = std::move(focus);
        for (std::size_t i = 0; i < cx.profiles.size(); ++i)
            for (auto a : cx.focus) cx.tallies.push_back({i, a, tally(cx.profiles[i], a)});
        cx.description = std::move(what);
        return cx;
    }

    std::string nm(ArgumentId a) const { return af_.name(a); }

    void definedness(CheckReport& r, const std::vector<ProfileKey>& ks) {
        for (const auto& k : ks) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (o.is_defined()) continue;
            std::vector<ArgumentId> focus;
            for (const auto& t : o.ties()) focus.push_back(t.argument);
            r.counterexample = make(r.postulate, {k}, focus, "outcome undefined");
            return;
        }
    }

    void rationality(CheckReport& r) {
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined() || is_complete(af_, o.labelling())) continue;
            std::vector<ArgumentId> focus;
            for (auto a : af_.arguments())
                if (!is_legally_labelled(af_, o.labelling(), a)) focus.push_back(a);
            r.counterexample = make(r.postulate, {k}, focus, "outcome is not a complete labelling");
            return;
        }
    }

    void subcondition(CheckReport& r) {
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            for (auto a : af_.arguments()) {
                auto c = check_clause(af_, o.labelling(), a, r.postulate);
                if (c.holds) continue;
                std::vector<ArgumentId> focus{a};
                std::string what = nm(a) + " collectively " + std::string(to_string(o.labelling()[a]));
                if (c.attacker) {
                    focus.push_back(*c.attacker);
                    what += " with attacker " + nm(*c.attacker) + " collectively " +
                            std::string(to_string(o.labelling()[*c.attacker]));
                } else {
                    what += r.postulate == Postulate::out_cr ? " with no attacker collectively in"
                                                             : " with no attacker collectively undec";
                }
                r.counterexample = make(r.postulate, {k}, focus, what);
                return;
            }
        }
    }

    void supportiveness(CheckReport& r) {
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            for (auto a : af_.arguments()) {
                Label l = o.labelling()[a];
                if (r.postulate == Postulate::in_out_supportiveness && l == Label::undec) continue;
                bool voted = std::any_of(k.begin(), k.end(), [&](auto m) { return dom_.label(m, a) == l; });
                if (voted) continue;
                r.counterexample =
                    make(r.postulate, {k}, {a}, nm(a) + " collectively " + std::string(to_string(l)) +
                                                    " but no agent voted " + std::string(to_string(l)));
                return;
            }
        }
    }

    void unanimity(CheckReport& r) {
        for (std::uint16_t m = 0; m < dom_.members().size(); ++m) {
            ProfileKey k(dom_.agents(), m);
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined() || o.labelling() == dom_.members()[m]) continue;
            std::vector<ArgumentId> focus;
            for (auto a : af_.arguments())
                if (o.labelling()[a] != dom_.label(m, a)) focus.push_back(a);
            r.counterexample = make(r.postulate, {k}, focus, "unanimous profile not reproduced");
            return;
        }
    }

    std::vector<std::vector<std::size_t>> agent_permutations() const {
        std::size_t n = dom_.agents();
        std::vector<std::vector<std::size_t>> out;
        if (n < 2) return out;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        if (exhaustive() && n < 6) {
            while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
            return out;
        }
        auto swap = p;
        std::swap(swap[0], swap[1]);
        out.push_back(swap);
        if (n > 2) {
            auto cycle = p;
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
            out.push_back(cycle);
        }
        return out;
    }

    void anonymity(CheckReport& r) {
        auto perms = agent_permutations();
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            for (const auto& pi : perms) {
                ProfileKey q(k.size());
                for (std::size_t i = 0; i < k.size(); ++i) q[i] = k[pi[i]];
                const auto& oq = cache_(q);
                if (!oq.is_defined()) {
                    ++r.pairs_skipped;
                    continue;
                }
                if (oq.labelling() == o.labelling()) continue;
                std::vector<ArgumentId> focus;
                for (auto a : af_.arguments())
                    if (o.labelling()[a] != oq.labelling()[a]) focus.push_back(a);
                r.counterexample = make(r.postulate, {k, q}, focus, "reordering the agents changes the outcome");
                return;
            }
        }
    }

    void non_dictatorship(CheckReport& r) {
        std::size_t n = dom_.agents();
        std::vector<bool> refuted(n, false);
        std::size_t remaining = n;
        std::vector<const ProfileKey*> defined;
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            if (defined.size() < 8) defined.push_back(&k);
            for (std::size_t i = 0; i < n; ++i) {
                if (refuted[i] || o.labelling() == dom_.members()[k[i]]) continue;
                refuted[i] = true;
                if (--remaining == 0) return;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (refuted[i]) continue;
            std::vector<ProfileKey> sample;
            for (auto* k : defined) sample.push_back(*k);
            if (sample.empty()) sample.push_back(keys().empty() ? ProfileKey(n, 0) : keys().front());
            auto cx = make(r.postulate, sample, {},
                           "agent " + std::to_string(i) + " matches every defined outcome on the domain");
            cx.agent = i;
            r.counterexample = std::move(cx);
            return;
        }
    }

    std::vector<LabelPermutation> permutations_for(Postulate p) const {
        if (p == Postulate::independence || p == Postulate::weak_systematicity) return {LabelPermutation::identity()};
        if (p == Postulate::in_out_systematicity) return LabelPermutation::undec_preserving();
        return LabelPermutation::all();
    }

    std::uint64_t apply_to_code(std::uint64_t code, const LabelPermutation& rho) const {
        std::uint64_t out = 0;
        std::uint64_t place = 1;
        for (std::size_t i = 0; i < dom_.agents(); ++i) {
            auto digit = static_cast<std::uint8_t>(code % 3);
            code /= 3;
            out += place * to_index(rho(static_cast<Label>(digit)));
            place *= 3;
        }
        return out;
    }

    // Independence is the a == b, identity-only instance.
    void systematicity(CheckReport& r) {
        bool same_argument = r.postulate == Postulate::independence;
        auto rhos = permutations_for(r.postulate);
        if (!exhaustive()) return systematicity_sampled(r, rhos, same_argument);

        struct Entry {
            Label label;
            std::size_t key;
            ArgumentId arg;
        };
        // Index by (argument or 0, column code).
        std::map<std::pair<std::uint32_t, std::uint64_t>, Entry> first;
        struct Row {
            std::uint64_t code;
            Label label;
            std::size_t key;
            ArgumentId arg;
        };
        std::vector<Row> rows;
        const auto& ks = keys();
        for (std::size_t i = 0; i < ks.size(); ++i) {
            ++r.profiles_examined;
            const auto& o = cache_(ks[i]);
            if (!o.is_defined()) continue;
            for (auto a : af_.arguments()) {
                auto code = dom_.column_code(ks[i], a);
                rows.push_back({code, o.labelling()[a], i, a});
                first.try_emplace({same_argument ? a.index : 0u, code}, Entry{o.labelling()[a], i, a});
            }
        }
        for (const auto& row : rows) {
            for (const auto& rho : rhos) {
                auto it = first.find({same_argument ? row.arg.index : 0u, apply_to_code(row.code, rho)});
                if (it == first.end()) continue;
                if (it->second.label == rho(row.label)) continue;
                // Profile 0 holds column rho(column of profile 1).
                const auto& e = it->second;
                auto cx = make(r.postulate, {ks[e.key], ks[row.key]},
                               same_argument ? std::vector<ArgumentId>{e.arg} : std::vector<ArgumentId>{e.arg, row.arg},
                               systematicity_text(e.arg, e.label, row.arg, row.label, rho));
                if (!same_argument) cx.permutation = rho;
                r.counterexample = std::move(cx);
                return;
            }
        }
    }

    std::string systematicity_text(ArgumentId a, Label la, ArgumentId b, Label lb, const LabelPermutation& rho) const {
        std::string s = "matching columns on " + nm(a) + " and " + nm(b) + " elect " + std::string(to_string(la)) +
                        " and " + std::string(to_string(lb));
        if (!rho.is_identity()) s += " under " + rho.to_string();
        return s;
    }

    void systematicity_sampled(CheckReport& r, const std::vector<LabelPermutation>& rhos, bool same_argument) {
        std::mt19937_64 rng(dom_.spec().seed ^ 0x5157u);
        for (const auto& k1 : keys()) {
            ++r.profiles_examined;
            const auto& o1 = cache_(k1);
            if (!o1.is_defined()) continue;
            for (auto b : af_.arguments()) {
                for (const auto& rho : rhos) {
                    ArgumentId a = b;
                    if (!same_argument) {
                        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(af_.size() - 1));
                        a = ArgumentId{pick(rng)};
                    }
                    ProfileKey k0(k1.size());
                    bool ok = true;
                    for (std::size_t i = 0; i < k1.size() && ok; ++i) {
                        const auto& bucket = dom_.members_with(a, rho(dom_.label(k1[i], b)));
                        if (bucket.empty()) {
                            ok = false;
                            break;
                        }
                        std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
                        k0[i] = bucket[pick(rng)];
                    }
                    if (!ok || !dom_.admits(k0)) {
                        ++r.pairs_skipped;
                        continue;
                    }
                    const auto& o0 = cache_(k0);
                    if (!o0.is_defined()) {
                        ++r.pairs_skipped;
                        continue;
                    }
                    Label l0 = o0.labelling()[a];
                    Label l1 = o1.labelling()[b];
                    if (l0 == rho(l1)) continue;
                    auto cx = make(r.postulate, {k0, k1},
                                   same_argument ? std::vector<ArgumentId>{a} : std::vector<ArgumentId>{a, b},
                                   systematicity_text(a, l0, b, l1, rho));
                    if (!same_argument) cx.permutation = rho;
                    r.counterexample = std::move(cx);
                    return;
                }
            }
        }
    }

    void monotonicity(CheckReport& r) {
        bool io = r.postulate == Postulate::in_out_monotonicity;
        std::mt19937_64 rng(dom_.spec().seed ^ 0x30a0u);
        for (const auto& k : keys()) {
            ++r.profiles_examined;
            const auto& o = cache_(k);
            if (!o.is_defined()) continue;
            for (auto a : af_.arguments()) {
                Label l = o.labelling()[a];
                if (io && l == Label::undec) continue;
                std::vector<std::size_t> movable;
                for (std::size_t j = 0; j < k.size(); ++j)
                    if (dom_.label(k[j], a) != l) movable.push_back(j);
                const auto& bucket = dom_.members_with(a, l);
                if (movable.empty() || bucket.empty()) continue;
                if (exhaustive()) {
                    if (monotonicity_exhaustive(r, k, a, l, movable, bucket)) return;
                } else if (monotonicity_sampled(r, k, a, l, movable, bucket, rng)) {
                    return;
                }
            }
        }
    }

    bool monotonicity_partner(CheckReport& r, const ProfileKey& k, const ProfileKey& q, ArgumentId a, Label l) {
        if (!dom_.admits(q)) {
            ++r.pairs_skipped;
            return false;
        }
        const auto& oq = cache_(q);
        if (!oq.is_defined()) {
            ++r.pairs_skipped;
            return false;
        }
        if (oq.labelling()[a] == l) return false;
        auto cx = make(r.postulate, {k, q}, {a},
                       "agents switching " + nm(a) + " to " + std::string(to_string(l)) + " move the outcome to " +
                           std::string(to_string(oq.labelling()[a])));
        cx.label = l;
        r.counterexample = std::move(cx);
        return true;
    }

    // Every non-empty subset of the movable agents, every replacement choice.
    bool monotonicity_exhaustive(CheckReport& r, const ProfileKey& k, ArgumentId a, Label l,
                                 const std::vector<std::size_t>& movable, const std::vector<std::uint16_t>& bucket) {
        std::size_t m = movable.size();
        std::vector<std::size_t> choice(m, 0);  // 0 = unchanged, c = bucket[c - 1]
        while (true) {
            std::size_t i = 0;
            while (i < m && ++choice[i] > bucket.size()) choice[i++] = 0;
            if (i == m) return false;
            ProfileKey q = k;
            for (std::size_t t = 0; t < m; ++t)
                if (choice[t]) q[movable[t]] = bucket[choice[t] - 1];
            if (monotonicity_partner(r, k, q, a, l)) return true;
        }
    }

    bool monotonicity_sampled(CheckReport& r, const ProfileKey& k, ArgumentId a, Label l,
                              std::vector<std::size_t> movable, const std::vector<std::uint16_t>& bucket,
                              std::mt19937_64& rng) {
        std::shuffle(movable.begin(), movable.end(), rng);
        std::uniform_int_distribution<std::size_t> size_pick(1, std::min<std::size_t>(3, movable.size()));
        std::uniform_int_distribution<std::size_t> member_pick(0, bucket.size() - 1);
        ProfileKey q = k;
        std::size_t s = size_pick(rng);
        for (std::size_t t = 0; t < s; ++t) q[movable[t]] = bucket[member_pick(rng)];
        return monotonicity_partner(r, k, q, a, l);
    }

    Framework af_;
    Operator op_;
    ProfileDomain dom_;
    OutcomeCache cache_;
    std::optional<std::vector<ProfileKey>> keys_;
    std::optional<std::vector<ProfileKey>> keys_ties_;
};

inline CheckReport check_postulate(Postulate p, const Framework& af, const Operator& op, const DomainSpec& spec,
                                   const EnumerationLimits& limits = {}) {
    PostulateChecker c(af, op, spec, limits);
    return c.check(p);
}

inline std::vector<CheckReport> check_cr_subconditions(const Framework& af, const Operator& op,
                                                       const DomainSpec& spec, const EnumerationLimits& limits = {}) {
    PostulateChecker c(af, op, spec, limits);
    return c.check_cr_subconditions();
}

}  // namespace argagg

#endif
