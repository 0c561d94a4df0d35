#ifndef ARGAGG_DOMAIN_HPP
#define ARGAGG_DOMAIN_HPP

#include "argagg/error.hpp"
#include "argagg/operators.hpp"
#include "argagg/plurality.hpp"
#include "argagg/profile.hpp"
#include "argagg/semantics.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argagg {

enum class DomainMode { exhaustive, sampled };
enum class TieHandling { include_ties, exclude_ties };

inline std::string_view to_string(DomainMode m) { return m == DomainMode::exhaustive ? "exhaustive" : "sampled"; }
inline std::string_view to_string(TieHandling t) {
    return t == TieHandling::include_ties ? "include-ties" : "exclude-ties";
}

inline DomainMode parse_domain_mode(std::string_view s) {
    if (s == "exhaustive") return DomainMode::exhaustive;
    if (s == "sampled") return DomainMode::sampled;
    throw ParseError("unknown mode '" + std::string(s) + "'");
}

inline TieHandling parse_tie_handling(std::string_view s) {
    if (s == "include-ties") return TieHandling::include_ties;
    if (s == "exclude-ties") return TieHandling::exclude_ties;
    throw ParseError("unknown tie handling '" + std::string(s) + "'");
}

/// The finite set of profiles a postulate is checked over: every agent votes a
/// labelling of `semantics`.
struct DomainSpec {
    SemanticsKind semantics = SemanticsKind::complete;
    std::size_t agents = 3;
    DomainMode mode = DomainMode::exhaustive;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    TieHandling ties = TieHandling::exclude_ties;
    std::size_t budget = 1'000'000;

    bool operator==(const DomainSpec&) const = default;
};

inline constexpr std::size_t max_agents = 40;

/// Profile given as one index into the semantics' member list per agent.
using ProfileKey = std::vector<std::uint16_t>;

struct ProfileKeyHash {
    std::size_t operator()(const ProfileKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class ProfileDomain {
public:
    ProfileDomain(const Framework& af, const DomainSpec& spec, const EnumerationLimits& limits = {})
        : af_(af), spec_(spec), members_(enumerate(af, spec.semantics, limits)) {
        if (spec.agents == 0 || spec.agents > max_agents)
            throw Error("agent count must be in 1.." + std::to_string(max_agents));
        if (members_.size() > 0xffff) throw Error("too many labellings for a profile key");
        by_label_.assign(af.size() * 3, {});
        for (std::uint16_t m = 0; m < members_.size(); ++m)
            for (std::size_t a = 0; a < af.size(); ++a)
                by_label_[a * 3 + to_index(members_[m].at(a))].push_back(m);
    }

    const Framework& framework() const noexcept { return af_; }
    const DomainSpec& spec() const noexcept { return spec_; }
    const std::vector<Labelling>& members() const noexcept { return members_; }
    std::size_t agents() const noexcept { return spec_.agents; }

    double exhaustive_size() const {
        return std::pow(static_cast<double>(members_.size()), static_cast<double>(spec_.agents));
    }

    void require_budget() const {
        if (spec_.mode == DomainMode::exhaustive && exhaustive_size() > static_cast<double>(spec_.budget))
            throw BudgetExceeded(exhaustive_size(), spec_.budget);
    }

    Label label(std::uint16_t member, ArgumentId a) const { return members_[member][a]; }

    Profile profile(const ProfileKey& k) const {
        std::vector<Labelling> ls;
        ls.reserve(k.size());
        for (auto m : k) ls.push_back(members_.at(m));
        return Profile(std::move(ls));
    }

    bool tie_free(const ProfileKey& k) const {
        for (std::uint32_t a = 0; a < af_.size(); ++a) {
            Tally t;
            for (auto m : k) add_vote(t, members_[m].at(a));
            if (!t.plurality()) return false;
        }
        return true;
    }

    /// Whether the profile belongs to the domain under the tie-handling flag.
    bool admits(const ProfileKey& k) const { return spec_.ties == TieHandling::include_ties || tie_free(k); }

    /// Members whose label on `a` is `l`.
    const std::vector<std::uint16_t>& members_with(ArgumentId a, Label l) const {
        return by_label_[a.index * 3 + to_index(l)];
    }

    /// Column of `a` as a base-3 code, agent 0 least significant.
    std::uint64_t column_code(const ProfileKey& k, ArgumentId a) const {
        std::uint64_t code = 0;
        for (std::size_t i = k.size(); i-- > 0;) code = code * 3 + to_index(members_[k[i]][a]);
        return code;
    }

    /// Exhaustive: all |members|^n keys in lexicographic order, filtered by
    /// the tie flag unless `include_ties`. Sampled: `samples` uniform draws
    /// (tie-free draws by rejection when ties are excluded).
    std::vector<ProfileKey> keys(bool include_ties = false) const {
        std::vector<ProfileKey> out;
        if (members_.empty()) return out;
        bool keep_ties = include_ties || spec_.ties == TieHandling::include_ties;
        if (spec_.mode == DomainMode::exhaustive) {
            require_budget();
            ProfileKey k(spec_.agents, 0);
            while (true) {
                if (keep_ties || tie_free(k)) out.push_back(k);
                std::size_t i = k.size();
                while (i > 0) {
                    --i;
                    if (++k[i] < members_.size()) break;
                    k[i] = 0;
                    if (i == 0) return out;
                }
            }
        }
        std::mt19937_64 rng(spec_.seed);
        std::size_t attempts = 0;
        const std::size_t max_attempts = spec_.samples * 50 + 100;
        while (out.size() < spec_.samples && attempts++ < max_attempts) {
            ProfileKey k = random_key(rng);
            if (keep_ties || tie_free(k)) out.push_back(std::move(k));
        }
        return out;
    }

    ProfileKey random_key(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::size_t> pick(0, members_.size() - 1);
        ProfileKey k(spec_.agents);
        for (auto& m : k) m = static_cast<std::uint16_t>(pick(rng));
        return k;
    }

private:
    Framework af_;
    DomainSpec spec_;
    std::vector<Labelling> members_;
    std::vector<std::vector<std::uint16_t>> by_label_;
};

/// Memoising wrapper applying an operator to domain profiles.
class OutcomeCache {
public:
    OutcomeCache(const ProfileDomain& dom, const Operator& op) : dom_(dom), op_(op) {}

    const AggregateOutcome& operator()(const ProfileKey& k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        ++evaluations_;
        return cache_.emplace(k, op_.apply(dom_.profile(k))).first->second;
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    const ProfileDomain& dom_;
    const Operator& op_;
    std::unordered_map<ProfileKey, AggregateOutcome, ProfileKeyHash> cache_;
    std::size_t evaluations_ = 0;
};

}  // namespace argagg

#endif
