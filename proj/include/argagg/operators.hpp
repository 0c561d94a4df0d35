#ifndef ARGAGG_OPERATORS_HPP
#define ARGAGG_OPERATORS_HPP

#include "argagg/error.hpp"
#include "argagg/plurality.hpp"
#include "argagg/semantics.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace argagg {

/// An in-process aggregation function under test. `apply` must be
/// deterministic.
struct Operator {
    std::string name;
    std::function<AggregateOutcome(const Profile&)> apply;
};

inline Operator awpr_operator() {
    return {"awpr", [](const Profile& p) { return awpr(p); }};
}

inline Operator awpr_undec_tiebreak_operator() {
    return {"awpr-undec-tiebreak", [](const Profile& p) { return AggregateOutcome::defined(awpr_undec_tiebreak(p)); }};
}

/// Always returns agent `agent`'s labelling (0-based).
inline Operator dictator_operator(std::size_t agent) {
    return {"dictator(" + std::to_string(agent) + ")", [agent](const Profile& p) {
                if (agent >= p.agents())
                    throw Error("dictator agent " + std::to_string(agent) + " outside profile of " +
                                std::to_string(p.agents()));
                return AggregateOutcome::defined(p[agent]);
            }};
}

/// Ignores the votes and returns the grounded labelling of `af`.
inline Operator constant_grounded_operator(const Framework& af) {
    auto g = std::make_shared<const Labelling>(grounded(af));
    return {"constant-grounded", [g](const Profile&) { return AggregateOutcome::defined(*g); }};
}

/// Resolves `awpr`, `awpr-undec-tiebreak`, `dictator(i)` or `constant-grounded`.
inline Operator make_operator(std::string_view name, const Framework& af) {
    if (name == "awpr") return awpr_operator();
    if (name == "awpr-undec-tiebreak") return awpr_undec_tiebreak_operator();
    if (name == "constant-grounded") return constant_grounded_operator(af);
    if (name.starts_with("dictator(") && name.ends_with(")")) {
        std::string digits(name.substr(9, name.size() - 10));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return dictator_operator(std::stoul(digits));
    }
    throw ParseError("unknown operator '" + std::string(name) + "'");
}

}  // namespace argagg

#endif
