#ifndef ARGAGG_PLURALITY_HPP
#define ARGAGG_PLURALITY_HPP

#include "argagg/labelling.hpp"
#include "argagg/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argagg {

struct TiedArgument {
    ArgumentId argument;
    Tally tally;

    bool operator==(const TiedArgument&) const = default;
};

/// Result of applying an aggregation operator: a collective labelling, or
/// the arguments on which no collective label could be chosen.
class AggregateOutcome {
public:
    static AggregateOutcome defined(Labelling l) {
        AggregateOutcome o;
        o.labelling_ = std::move(l);
        return o;
    }
    static AggregateOutcome undefined(std::vector<TiedArgument> ties) {
        AggregateOutcome o;
        o.ties_ = std::move(ties);
        return o;
    }

    bool is_defined() const noexcept { return labelling_.has_value(); }
    const Labelling& labelling() const { return labelling_.value(); }
    const std::vector<TiedArgument>& ties() const noexcept { return ties_; }

    bool operator==(const AggregateOutcome&) const = default;

private:
    std::optional<Labelling> labelling_;
    std::vector<TiedArgument> ties_;
};

namespace detail {

inline std::vector<Label> plurality_labels(const Profile& p, std::vector<TiedArgument>& ties) {
    std::vector<Label> labels(p.arguments(), Label::undec);
    for (std::uint32_t i = 0; i < p.arguments(); ++i) {
        ArgumentId a{i};
        Tally t = tally(p, a);
        if (auto w = t.plurality())
            labels[i] = *w;
        else
            ties.push_back({a, t});
    }
    return labels;
}

inline Labelling rebind(const Profile& p, std::vector<Label> labels) {
    Labelling out = p[0];
    for (std::uint32_t i = 0; i < labels.size(); ++i) out.set(ArgumentId{i}, labels[i]);
    return out;
}

}  // namespace detail

/// Argument-wise plurality rule: each argument gets the label with a strict
/// plurality in its column; any tie makes the whole outcome undefined.
inline AggregateOutcome awpr(const Profile& p) {
    std::vector<TiedArgument> ties;
    auto labels = detail::plurality_labels(p, ties);
    if (!ties.empty()) return AggregateOutcome::undefined(std::move(ties));
    return AggregateOutcome::defined(detail::rebind(p, std::move(labels)));
}

/// Plurality with every tied argument labelled undec. Total.
inline Labelling awpr_undec_tiebreak(const Profile& p) {
    std::vector<TiedArgument> ties;
    auto labels = detail::plurality_labels(p, ties);
    return detail::rebind(p, std::move(labels));
}

/// True iff every argument's column has a strict plurality label.
inline bool is_tie_free(const Profile& p) {
    for (std::uint32_t i = 0; i < p.arguments(); ++i)
        if (!tally(p, ArgumentId{i}).plurality()) return false;
    return true;
}

}  // namespace argagg

#endif
