#ifndef ARGAGG_PROFILE_HPP
#define ARGAGG_PROFILE_HPP

#include "argagg/error.hpp"
#include "argagg/framework.hpp"
#include "argagg/labelling.hpp"
#include "argagg/semantics.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace argagg {

/// Ordered tuple of one labelling per agent, all over the same framework.
/// Agents are identified by their position (0-based).
class Profile {
public:
    Profile() = default;
    explicit Profile(std::vector<Labelling> labellings) : labellings_(std::move(labellings)) {
        if (labellings_.empty()) throw Error("a profile needs at least one agent");
        for (const auto& l : labellings_)
            if (l.fingerprint() != labellings_.front().fingerprint() || l.size() != labellings_.front().size())
                throw FrameworkMismatch();
    }

    std::size_t agents() const noexcept { return labellings_.size(); }
    std::size_t arguments() const noexcept { return labellings_.empty() ? 0 : labellings_.front().size(); }
    const Labelling& operator[](std::size_t agent) const { return labellings_.at(agent); }
    const std::vector<Labelling>& labellings() const noexcept { return labellings_; }
    std::uint64_t fingerprint() const noexcept { return labellings_.empty() ? 0 : labellings_.front().fingerprint(); }

    bool bound_to(const Framework& af) const noexcept {
        return !labellings_.empty() && labellings_.front().bound_to(af);
    }

    /// The agents' votes on `a`, in agent order.
    std::vector<Label> column(ArgumentId a) const {
        if (a.index >= arguments()) throw UnknownArgument("#" + std::to_string(a.index));
        std::vector<Label> out;
        out.reserve(agents());
        for (const auto& l : labellings_) out.push_back(l[a]);
        return out;
    }

    bool operator==(const Profile&) const = default;

private:
    std::vector<Labelling> labellings_;
};

/// Vote counts for one argument.
struct Tally {
    std::size_t n_in = 0;
    std::size_t n_out = 0;
    std::size_t n_undec = 0;

    std::size_t count(Label l) const {
        switch (l) {
            case Label::in: return n_in;
            case Label::out: return n_out;
            case Label::undec: return n_undec;
        }
        return 0;
    }
    std::size_t total() const { return n_in + n_out + n_undec; }

    /// The label whose count strictly exceeds every other count, if any.
    std::optional<Label> plurality() const {
        std::size_t best = std::max({n_in, n_out, n_undec});
        std::optional<Label> winner;
        for (Label l : all_labels) {
            if (count(l) != best) continue;
            if (winner) return std::nullopt;
            winner = l;
        }
        return winner;
    }

    bool operator==(const Tally&) const = default;
};

inline void add_vote(Tally& t, Label l) {
    switch (l) {
        case Label::in: ++t.n_in; break;
        case Label::out: ++t.n_out; break;
        case Label::undec: ++t.n_undec; break;
    }
}

inline Tally tally_of(const std::vector<Label>& column) {
    Tally t;
    for (Label l : column) add_vote(t, l);
    return t;
}

inline Tally tally(const Profile& p, ArgumentId a) {
    if (a.index >= p.arguments()) throw UnknownArgument("#" + std::to_string(a.index));
    Tally t;
    for (const auto& l : p.labellings()) add_vote(t, l[a]);
    return t;
}

inline std::string to_string(const Tally& t) {
    return "(" + std::to_string(t.n_in) + "," + std::to_string(t.n_out) + "," + std::to_string(t.n_undec) + ")";
}

struct ProfileViolation {
    std::size_t agent = 0;
    std::string description;

    bool operator==(const ProfileViolation&) const = default;
};

/// One entry per agent whose labelling is not a member of `kind` on `af`.
inline std::vector<ProfileViolation> validate_profile(const Framework& af, const Profile& profile, SemanticsKind kind,
                                                      const EnumerationLimits& limits = {}) {
    if (!profile.bound_to(af)) throw FrameworkMismatch();
    auto members = enumerate(af, kind, limits);
    std::vector<ProfileViolation> out;
    for (std::size_t i = 0; i < profile.agents(); ++i)
        if (!std::binary_search(members.begin(), members.end(), profile[i]))
            out.push_back({i, "not " + std::string(to_string(kind))});
    return out;
}

/// Profile file: `agents: n` then one labelling per line in `name=label`
/// form. Blank lines and `%` comments are ignored.
inline Profile parse_profile(const Framework& af, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> declared;
    std::vector<Labelling> labellings;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (!declared) {
            if (view.substr(0, 7) != "agents:") throw SyntaxError(lineno, "expected 'agents: <n>' header");
            std::string count(trim(view.substr(7)));
            try {
                std::size_t used = 0;
                declared = std::stoul(count, &used);
                if (used != count.size() || *declared == 0) throw std::invalid_argument(count);
            } catch (const std::exception&) {
                throw SyntaxError(lineno, "invalid agent count '" + count + "'");
            }
            continue;
        }
        try {
            labellings.push_back(parse_labelling(af, view));
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            throw SyntaxError(lineno, e.what());
        }
    }
    if (!declared) throw SyntaxError(lineno, "missing 'agents: <n>' header");
    if (labellings.size() != *declared)
        throw SyntaxError(lineno, "header declares " + std::to_string(*declared) + " agents, found " +
                                      std::to_string(labellings.size()) + " labellings");
    return Profile(std::move(labellings));
}

inline std::string serialize_profile(const Framework& af, const Profile& p) {
    std::string out = "agents: " + std::to_string(p.agents()) + "\n";
    for (const auto& l : p.labellings()) out += to_text(af, l) + "\n";
    return out;
}

}  // namespace argagg

#endif
