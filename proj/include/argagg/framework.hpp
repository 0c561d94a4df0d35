#ifndef ARGAGG_FRAMEWORK_HPP
#define ARGAGG_FRAMEWORK_HPP

#include "argagg/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argagg {

/// Dense handle of an argument: its position in sorted-name order.
struct ArgumentId {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const ArgumentId&) const = default;
};

struct Attack {
    ArgumentId attacker;
    ArgumentId target;

    constexpr auto operator<=>(const Attack&) const = default;
};

inline bool is_valid_argument_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

/// Immutable finite attack graph. Arguments are ordered by name; every
/// enumeration and serialisation order in the library derives from that.
class Framework {
public:
    Framework() = default;

    /// Builds a framework from names and named attacks. Duplicate attack
    /// pairs collapse; self-attacks are kept.
    static Framework from_names(std::vector<std::string> names,
                                const std::vector<std::pair<std::string, std::string>>& attacks) {
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i + 1 < names.size(); ++i)
            if (names[i] == names[i + 1]) throw DuplicateArgument(names[i]);
        for (const auto& n : names)
            if (!is_valid_argument_name(n)) throw ParseError("invalid argument name '" + n + "'");

        Framework af;
        af.names_ = std::move(names);
        std::set<Attack> edges;
        for (const auto& [from, to] : attacks) {
            auto a = af.find(from);
            if (!a) throw UndeclaredArgument(from);
            auto b = af.find(to);
            if (!b) throw UndeclaredArgument(to);
            edges.insert(Attack{*a, *b});
        }
        af.attacks_.assign(edges.begin(), edges.end());
        af.index();
        return af;
    }

    /// Builds a framework over `size` arguments with generated names
    /// (a, b, ... for up to 26 arguments, a00, a01, ... beyond that), so
    /// that name order and index order coincide.
    static Framework from_indices(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& attacks) {
        std::vector<std::string> names;
        names.reserve(size);
        for (std::size_t i = 0; i < size; ++i) names.push_back(generated_name(i, size));
        std::vector<std::pair<std::string, std::string>> named;
        named.reserve(attacks.size());
        for (auto [a, b] : attacks) {
            if (a >= size || b >= size) throw UnknownArgument("#" + std::to_string(std::max(a, b)));
            named.emplace_back(names[a], names[b]);
        }
        return from_names(std::move(names), named);
    }

    static std::string generated_name(std::size_t i, std::size_t size) {
        if (size <= 26) return std::string(1, static_cast<char>('a' + i));
        std::string digits = std::to_string(i);
        while (digits.size() < std::to_string(size - 1).size()) digits.insert(digits.begin(), '0');
        return "a" + digits;
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Attack>& attacks() const noexcept { return attacks_; }

    const std::string& name(ArgumentId a) const {
        check(a);
        return names_[a.index];
    }

    std::optional<ArgumentId> find(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name,
                                   [](const std::string& l, std::string_view r) { return l < r; });
        if (it == names_.end() || *it != name) return std::nullopt;
        return ArgumentId{static_cast<std::uint32_t>(it - names_.begin())};
    }

    ArgumentId id(std::string_view name) const {
        auto a = find(name);
        if (!a) throw UnknownArgument("'" + std::string(name) + "'");
        return *a;
    }

    /// The arguments attacking `a`, sorted by index.
    std::span<const ArgumentId> attackers(ArgumentId a) const {
        check(a);
        return attackers_[a.index];
    }

    /// The arguments attacked by `a`, sorted by index.
    std::span<const ArgumentId> targets(ArgumentId a) const {
        check(a);
        return targets_[a.index];
    }

    bool attacks(ArgumentId from, ArgumentId to) const {
        auto ts = targets(from);
        return std::binary_search(ts.begin(), ts.end(), to);
    }

    std::vector<ArgumentId> arguments() const {
        std::vector<ArgumentId> out(size());
        for (std::uint32_t i = 0; i < out.size(); ++i) out[i].index = i;
        return out;
    }

    /// FNV-1a hash of the canonical APX text; binds labellings to this graph.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    bool operator==(const Framework& other) const {
        return names_ == other.names_ && attacks_ == other.attacks_;
    }

private:
    void check(ArgumentId a) const {
        if (a.index >= names_.size()) throw UnknownArgument("#" + std::to_string(a.index));
    }

    void index() {
        attackers_.assign(size(), {});
        targets_.assign(size(), {});
        for (const auto& e : attacks_) {
            attackers_[e.target.index].push_back(e.attacker);
            targets_[e.attacker.index].push_back(e.target);
        }
        for (auto& v : attackers_) std::sort(v.begin(), v.end());
        std::uint64_t h = 14695981039346656037ull;
        auto mix = [&h](std::string_view s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
        };
        for (const auto& n : names_) {
            mix("arg(");
            mix(n);
            mix(").\n");
        }
        for (const auto& e : attacks_) {
            mix("att(");
            mix(names_[e.attacker.index]);
            mix(",");
            mix(names_[e.target.index]);
            mix(").\n");
        }
        fingerprint_ = h;
    }

    std::vector<std::string> names_;
    std::vector<Attack> attacks_;
    std::vector<std::vector<ArgumentId>> attackers_;
    std::vector<std::vector<ArgumentId>> targets_;
    std::uint64_t fingerprint_ = 14695981039346656037ull;
};

namespace detail {

inline void skip_blank(std::string_view text, std::size_t& pos, std::size_t& line) {
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '\n') {
            ++line;
            ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (c == '%') {
            while (pos < text.size() && text[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
}

inline void expect(std::string_view text, std::size_t& pos, std::size_t& line, char c) {
    skip_blank(text, pos, line);
    if (pos >= text.size() || text[pos] != c)
        throw SyntaxError(line, std::string("expected '") + c + "'");
    ++pos;
}

inline std::string read_name(std::string_view text, std::size_t& pos, std::size_t& line) {
    skip_blank(text, pos, line);
    std::size_t start = pos;
    while (pos < text.size() && is_valid_argument_name(text.substr(pos, 1))) ++pos;
    if (pos == start) throw SyntaxError(line, "expected argument name");
    return std::string(text.substr(start, pos - start));
}

}  // namespace detail

/// Parses APX text: `arg(<name>).` and `att(<name>,<name>).` statements,
/// whitespace and `%` comments ignored. Attacks may precede declarations.
inline Framework parse_framework(std::string_view text) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> attacks;
    std::size_t pos = 0;
    std::size_t line = 1;
    while (true) {
        detail::skip_blank(text, pos, line);
        if (pos >= text.size()) break;
        std::size_t kw_start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string_view keyword = text.substr(kw_start, pos - kw_start);
        if (keyword == "arg") {
            detail::expect(text, pos, line, '(');
            auto n = detail::read_name(text, pos, line);
            detail::expect(text, pos, line, ')');
            detail::expect(text, pos, line, '.');
            if (!seen.insert(n).second) throw DuplicateArgument(n);
            names.push_back(std::move(n));
        } else if (keyword == "att") {
            detail::expect(text, pos, line, '(');
            auto a = detail::read_name(text, pos, line);
            detail::expect(text, pos, line, ',');
            auto b = detail::read_name(text, pos, line);
            detail::expect(text, pos, line, ')');
            detail::expect(text, pos, line, '.');
            attacks.emplace_back(std::move(a), std::move(b));
        } else {
            throw SyntaxError(line, "expected 'arg' or 'att'");
        }
    }
    for (const auto& [a, b] : attacks) {
        if (!seen.count(a)) throw UndeclaredArgument(a);
        if (!seen.count(b)) throw UndeclaredArgument(b);
    }
    return Framework::from_names(std::move(names), attacks);
}

/// Canonical APX: `arg` lines sorted by name, then `att` lines sorted.
inline std::string serialize_framework(const Framework& af) {
    std::string out;
    for (const auto& n : af.names()) out += "arg(" + n + ").\n";
    for (const auto& e : af.attacks())
        out += "att(" + af.name(e.attacker) + "," + af.name(e.target) + ").\n";
    return out;
}

}  // namespace argagg

#endif
