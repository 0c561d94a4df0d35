#ifndef ARGAGG_LABELLING_HPP
#define ARGAGG_LABELLING_HPP

#include "argagg/error.hpp"
#include "argagg/framework.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace argagg {

/// in < out < undec is the canonical enumeration order.
enum class Label : std::uint8_t { in = 0, out = 1, undec = 2 };

inline constexpr std::array<Label, 3> all_labels{Label::in, Label::out, Label::undec};

constexpr std::size_t to_index(Label l) noexcept { return static_cast<std::size_t>(l); }

inline std::string_view to_string(Label l) {
    switch (l) {
        case Label::in: return "in";
        case Label::out: return "out";
        case Label::undec: return "undec";
    }
    return "?";
}

inline Label parse_label(std::string_view s) {
    if (s == "in") return Label::in;
    if (s == "out") return Label::out;
    if (s == "undec") return Label::undec;
    throw ParseError("unknown label '" + std::string(s) + "'");
}

/// Subset of {in, out, undec}.
class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr LabelSet(std::initializer_list<Label> ls) {
        for (Label l : ls) insert(l);
    }
    static constexpr LabelSet from_bits(std::uint8_t bits) {
        LabelSet s;
        s.bits_ = bits & 7u;
        return s;
    }
    static constexpr LabelSet all() { return from_bits(7); }

    constexpr void insert(Label l) { bits_ |= bit(l); }
    constexpr void erase(Label l) { bits_ &= static_cast<std::uint8_t>(~bit(l)); }
    constexpr bool contains(Label l) const { return bits_ & bit(l); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool is_singleton() const { return size() == 1; }
    /// The smallest label in canonical order; set must be non-empty.
    constexpr Label first() const { return static_cast<Label>(std::countr_zero(bits_)); }

    constexpr LabelSet operator&(LabelSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr LabelSet operator|(LabelSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr bool operator==(const LabelSet&) const = default;

    std::string to_string() const {
        std::string out = "{";
        for (Label l : all_labels) {
            if (!contains(l)) continue;
            if (out.size() > 1) out += ",";
            out += argagg::to_string(l);
        }
        return out + "}";
    }

private:
    static constexpr std::uint8_t bit(Label l) { return static_cast<std::uint8_t>(1u << to_index(l)); }
    std::uint8_t bits_ = 0;
};

/// Total assignment of labels to the arguments of one framework.
class Labelling {
public:
    Labelling() = default;
    Labelling(const Framework& af, std::vector<Label> labels)
        : labels_(std::move(labels)), fingerprint_(af.fingerprint()) {
        if (labels_.size() != af.size())
            throw Error("labelling has " + std::to_string(labels_.size()) + " labels, framework has " +
                        std::to_string(af.size()) + " arguments");
    }
    static Labelling uniform(const Framework& af, Label l) {
        return Labelling(af, std::vector<Label>(af.size(), l));
    }

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](ArgumentId a) const { return labels_.at(a.index); }
    Label at(std::size_t i) const { return labels_.at(i); }
    void set(ArgumentId a, Label l) { labels_.at(a.index) = l; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    bool bound_to(const Framework& af) const noexcept {
        return fingerprint_ == af.fingerprint() && labels_.size() == af.size();
    }

    /// Arguments carrying label `l`, in index order.
    std::vector<ArgumentId> with_label(Label l) const {
        std::vector<ArgumentId> out;
        for (std::uint32_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == l) out.push_back(ArgumentId{i});
        return out;
    }

    /// Bit i set iff argument i carries `l`. Requires at most 64 arguments.
    std::uint64_t mask(Label l) const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < labels_.size() && i < 64; ++i)
            if (labels_[i] == l) m |= std::uint64_t{1} << i;
        return m;
    }

    bool operator==(const Labelling& o) const {
        return fingerprint_ == o.fingerprint_ && labels_ == o.labels_;
    }
    /// Lexicographic over the label array with in < out < undec.
    std::strong_ordering operator<=>(const Labelling& o) const {
        if (auto c = labels_ <=> o.labels_; c != 0) return c;
        return fingerprint_ <=> o.fingerprint_;
    }

private:
    std::vector<Label> labels_;
    std::uint64_t fingerprint_ = 0;
};

inline void require_bound(const Framework& af, const Labelling& l) {
    if (!l.bound_to(af)) throw FrameworkMismatch();
}

/// `a1=in,a2=out,a3=in`, sorted by name.
inline std::string to_text(const Framework& af, const Labelling& l) {
    require_bound(af, l);
    std::string out;
    for (std::uint32_t i = 0; i < af.size(); ++i) {
        if (i) out += ",";
        out += af.names()[i];
        out += "=";
        out += to_string(l.at(i));
    }
    return out;
}

/// `([a1,a3],[a2],[])`.
inline std::string to_triple(const Framework& af, const Labelling& l) {
    require_bound(af, l);
    std::string out = "(";
    for (Label lab : all_labels) {
        if (lab != Label::in) out += ",";
        out += "[";
        bool first = true;
        for (auto a : l.with_label(lab)) {
            if (!first) out += ",";
            out += af.name(a);
            first = false;
        }
        out += "]";
    }
    return out + ")";
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Parses the comma-separated `name=label` form; every argument exactly once.
inline Labelling parse_labelling(const Framework& af, std::string_view text) {
    std::vector<Label> labels(af.size(), Label::undec);
    std::vector<bool> seen(af.size(), false);
    text = trim(text);
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected name=label, got '" + std::string(item) + "'");
        auto a = af.id(trim(item.substr(0, eq)));
        if (seen[a.index]) throw ParseError("argument '" + af.name(a) + "' labelled twice");
        seen[a.index] = true;
        labels[a.index] = parse_label(trim(item.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    for (std::uint32_t i = 0; i < af.size(); ++i)
        if (!seen[i]) throw ParseError("argument '" + af.names()[i] + "' has no label");
    return Labelling(af, std::move(labels));
}

/// Shorthand used by tests and the corpus: labels listed in argument order.
inline Labelling make_labelling(const Framework& af, std::initializer_list<Label> labels) {
    return Labelling(af, std::vector<Label>(labels));
}

}  // namespace argagg

#endif
