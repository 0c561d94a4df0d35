#ifndef ARGAGG_SEARCH_HPP
#define ARGAGG_SEARCH_HPP

#include "argagg/postulates.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace argagg {

/// Which frameworks a search visits, in order: `seeds`, then for each size
/// from `min_args` to `max_args` either every attack relation (sizes up to
/// `exhaustive_up_to_args`) or `samples_per_size` random graphs.
struct GeneratorSpec {
    std::size_t min_args = 1;
    std::size_t max_args = 4;
    double density = 0.3;
    double self_loop_density = 0.1;
    std::size_t exhaustive_up_to_args = 3;
    std::size_t samples_per_size = 200;
    std::uint64_t seed = 1;
    std::vector<Framework> seeds;
};

struct SearchOptions {
    SemanticsKind semantics = SemanticsKind::complete;
    std::size_t agents = 3;
    /// collective-rationality (any clause) or one of the five sub-conditions.
    Postulate target = Postulate::collective_rationality;
    /// Maximum number of tie-free profiles aggregated across all frameworks.
    std::size_t budget = 10'000'000;
    std::size_t threads = 1;
    EnumerationLimits limits{};
};

struct SearchResult {
    std::optional<Counterexample> counterexample;
    /// Budget ran out before the generator was exhausted.
    bool exhausted = false;
    std::size_t frameworks_examined = 0;
    std::size_t profiles_examined = 0;
};

/// Frameworks in generator order. Only the first `limit` are materialised.
inline std::vector<Framework> generate_frameworks(const GeneratorSpec& g, std::size_t limit = static_cast<std::size_t>(-1)) {
    std::vector<Framework> out;
    for (const auto& f : g.seeds) {
        if (out.size() >= limit) return out;
        out.push_back(f);
    }
    std::mt19937_64 rng(g.seed);
    std::bernoulli_distribution edge(g.density);
    std::bernoulli_distribution loop(g.self_loop_density);
    for (std::size_t s = std::max<std::size_t>(g.min_args, 1); s <= g.max_args; ++s) {
        if (s <= g.exhaustive_up_to_args) {
            std::size_t bits = s * s;
            if (bits > 20) throw Error("exhaustive framework generation is limited to 4 arguments");
            for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
                if (out.size() >= limit) return out;
                std::vector<std::pair<std::size_t, std::size_t>> att;
                for (std::size_t e = 0; e < bits; ++e)
                    if (mask >> e & 1) att.emplace_back(e / s, e % s);
                out.push_back(Framework::from_indices(s, att));
            }
            continue;
        }
        for (std::size_t k = 0; k < g.samples_per_size; ++k) {
            if (out.size() >= limit) return out;
            std::vector<std::pair<std::size_t, std::size_t>> att;
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    if (i == j ? loop(rng) : edge(rng)) att.emplace_back(i, j);
            out.push_back(Framework::from_indices(s, att));
        }
    }
    return out;
}

namespace detail {

struct FrameworkScan {
    std::optional<Counterexample> counterexample;
    std::size_t profiles = 0;
};

/// Depth-first over multisets of domain members (plurality is anonymous,
/// so vote order is irrelevant), with running per-argument tallies.
class MultisetScanner {
public:
    MultisetScanner(const Framework& af, std::vector<Labelling> members, std::size_t agents, Postulate target,
                    std::size_t budget)
        : af_(af), members_(std::move(members)), n_(agents), target_(target), budget_(budget),
          counts_(af.size() * 3, 0), chosen_(agents, 0), outcome_(af.size(), Label::undec) {}

    FrameworkScan run() {
        if (!members_.empty()) dfs(0, 0);
        return std::move(scan_);
    }

private:
    bool dfs(std::size_t depth, std::size_t from) {
        if (depth == n_) return leaf();
        for (std::size_t m = from; m < members_.size(); ++m) {
            chosen_[depth] = static_cast<std::uint16_t>(m);
            vote(m, +1);
            bool stop = dfs(depth + 1, m);
            vote(m, -1);
            if (stop) return true;
        }
        return false;
    }

    void vote(std::size_t m, int sign) {
        const auto& l = members_[m].labels();
        for (std::size_t a = 0; a < l.size(); ++a) counts_[a * 3 + to_index(l[a])] += sign;
    }

    bool leaf() {
        for (std::size_t a = 0; a < af_.size(); ++a) {
            int i = counts_[a * 3], o = counts_[a * 3 + 1], u = counts_[a * 3 + 2];
            if (i > o && i > u) outcome_[a] = Label::in;
            else if (o > i && o > u) outcome_[a] = Label::out;
            else if (u > i && u > o) outcome_[a] = Label::undec;
            else return false;
        }
        if (++scan_.profiles > budget_) return true;
        Labelling o(af_, outcome_);
        for (auto a : af_.arguments()) {
            if (target_ == Postulate::collective_rationality) {
                for (auto clause : cr_subconditions) {
                    auto c = check_clause(af_, o, a, clause);
                    if (!c.holds) return record(o, a, clause, c);
                }
            } else {
                auto c = check_clause(af_, o, a, target_);
                if (!c.holds) return record(o, a, target_, c);
            }
        }
        return false;
    }

    bool record(const Labelling& o, ArgumentId a, Postulate clause, const ClauseResult& c) {
        Counterexample cx;
        cx.postulate = target_ == Postulate::collective_rationality ? Postulate::collective_rationality : clause;
        cx.framework = af_;
        std::vector<Labelling> votes;
        for (auto m : chosen_) votes.push_back(members_[m]);
        cx.profiles.emplace_back(std::move(votes));
        cx.focus.push_back(a);
        if (c.attacker) cx.focus.push_back(*c.attacker);
        for (auto f : cx.focus) cx.tallies.push_back({0, f, tally(cx.profiles[0], f)});
        cx.description = std::string(to_string(clause)) + " fails at " + af_.name(a) + " (collectively " +
                         std::string(to_string(o[a])) + ")";
        if (c.attacker)
            cx.description += ", attacker " + af_.name(*c.attacker) + " collectively " +
                              std::string(to_string(o[*c.attacker]));
        scan_.counterexample = std::move(cx);
        return true;
    }

    const Framework& af_;
    std::vector<Labelling> members_;
    std::size_t n_;
    Postulate target_;
    std::size_t budget_;
    std::vector<int> counts_;
    std::vector<std::uint16_t> chosen_;
    std::vector<Label> outcome_;
    FrameworkScan scan_;
};

}  // namespace detail

/// Every tie-free plurality outcome over `semantics`-profiles of `af`, checked
/// against the target clause. Stops at the first violation.
inline detail::FrameworkScan scan_framework(const Framework& af, const SearchOptions& opt,
                                            std::size_t budget = static_cast<std::size_t>(-1)) {
    if (opt.target != Postulate::collective_rationality && !is_cr_subcondition(opt.target))
        throw Error("search target must be collective-rationality or a sub-condition");
    detail::MultisetScanner s(af, enumerate(af, opt.semantics, opt.limits), opt.agents, opt.target, budget);
    return s.run();
}

/// Deterministic search for a plurality outcome violating the target clause.
/// The result does not depend on the thread count.
inline SearchResult find_cr_violation(const GeneratorSpec& gen, const SearchOptions& opt) {
    if (opt.agents == 0 || opt.agents > max_agents) throw Error("agent count out of range");
    SearchResult res;
    auto frameworks = generate_frameworks(gen);
    std::size_t threads = std::max<std::size_t>(opt.threads, 1);
    std::size_t chunk = threads * 16;
    for (std::size_t start = 0; start < frameworks.size(); start += chunk) {
        std::size_t end = std::min(frameworks.size(), start + chunk);
        std::vector<detail::FrameworkScan> scans(end - start);
        std::size_t remaining = opt.budget - res.profiles_examined;
        std::atomic<std::size_t> next{start};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < end;)
                scans[i - start] = scan_framework(frameworks[i], opt, remaining);
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        for (auto& s : scans) {
            ++res.frameworks_examined;
            if (res.profiles_examined + s.profiles > opt.budget) {
                res.profiles_examined = opt.budget;
                res.exhausted = true;
                return res;
            }
            res.profiles_examined += s.profiles;
            if (s.counterexample) {
                res.counterexample = std::move(s.counterexample);
                return res;
            }
        }
    }
    return res;
}

}  // namespace argagg

#endif
