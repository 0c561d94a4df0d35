#ifndef ARGAGG_SEMANTICS_HPP
#define ARGAGG_SEMANTICS_HPP

#include "argagg/error.hpp"
#include "argagg/framework.hpp"
#include "argagg/labelling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

namespace argagg {

enum class SemanticsKind { complete, grounded, preferred, stable, semi_stable };

inline constexpr std::array<SemanticsKind, 5> all_semantics{
    SemanticsKind::grounded, SemanticsKind::stable, SemanticsKind::semi_stable, SemanticsKind::preferred,
    SemanticsKind::complete};

inline std::string_view to_string(SemanticsKind k) {
    switch (k) {
        case SemanticsKind::complete: return "complete";
        case SemanticsKind::grounded: return "grounded";
        case SemanticsKind::preferred: return "preferred";
        case SemanticsKind::stable: return "stable";
        case SemanticsKind::semi_stable: return "semi-stable";
    }
    return "?";
}

inline SemanticsKind parse_semantics(std::string_view s) {
    for (auto k : all_semantics)
        if (to_string(k) == s) return k;
    throw ParseError("unknown semantics '" + std::string(s) + "'");
}

struct EnumerationLimits {
    /// Hard ceiling is 64: set-inclusion filtering works on 64-bit masks.
    std::size_t max_arguments = 24;
};

inline bool is_conflict_free(const Framework& af, const Labelling& l) {
    require_bound(af, l);
    for (const auto& e : af.attacks())
        if (l[e.attacker] == Label::in && l[e.target] == Label::in) return false;
    return true;
}

/// Whether argument `a` satisfies the complete-labelling clause for its label.
inline bool is_legally_labelled(const Framework& af, const Labelling& l, ArgumentId a) {
    bool some_in = false;
    bool some_undec = false;
    bool all_out = true;
    for (auto b : af.attackers(a)) {
        Label lb = l[b];
        some_in |= lb == Label::in;
        some_undec |= lb == Label::undec;
        all_out &= lb == Label::out;
    }
    switch (l[a]) {
        case Label::in: return all_out;
        case Label::out: return some_in;
        case Label::undec: return some_undec && !some_in;
    }
    return false;
}

inline bool is_complete(const Framework& af, const Labelling& l) {
    require_bound(af, l);
    for (auto a : af.arguments())
        if (!is_legally_labelled(af, l, a)) return false;
    return true;
}

namespace detail {

inline void check_cap(const Framework& af, const EnumerationLimits& limits) {
    std::size_t cap = std::min<std::size_t>(limits.max_arguments, 64);
    if (af.size() > cap) throw TooLarge(af.size(), cap);
}

/// Domain-propagating search over complete labellings. Branching always picks
/// the lowest-index open argument and tries in, out, undec in that order, so
/// solutions come out in lexicographic order without sorting.
class CompleteEnumerator {
public:
    explicit CompleteEnumerator(const Framework& af) : af_(af) {}

    std::vector<Labelling> run() {
        std::vector<LabelSet> domains(af_.size(), LabelSet::all());
        std::vector<std::uint32_t> all(af_.size());
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        if (propagate(domains, all)) search(domains);
        return std::move(solutions_);
    }

private:
    bool narrow(std::vector<LabelSet>& d, std::uint32_t x, LabelSet keep, std::deque<std::uint32_t>& queue) {
        LabelSet next = d[x] & keep;
        if (next == d[x]) return true;
        d[x] = next;
        if (next.empty()) return false;
        queue.push_back(x);
        return true;
    }

    bool propagate(std::vector<LabelSet>& d, const std::vector<std::uint32_t>& seeds) {
        std::deque<std::uint32_t> queue(seeds.begin(), seeds.end());
        std::vector<std::uint32_t> touched;
        while (!queue.empty()) {
            std::uint32_t changed = queue.front();
            queue.pop_front();
            // A change at `changed` can affect itself, its targets (whose
            // attacker set changed) and its attackers (support reasoning).
            touched.clear();
            touched.push_back(changed);
            for (auto t : af_.targets(ArgumentId{changed})) touched.push_back(t.index);
            for (auto b : af_.attackers(ArgumentId{changed})) touched.push_back(b.index);
            for (auto x : touched)
                if (!revise(d, x, queue)) return false;
        }
        return true;
    }

    bool revise(std::vector<LabelSet>& d, std::uint32_t x, std::deque<std::uint32_t>& queue) {
        auto attackers = af_.attackers(ArgumentId{x});
        bool all_can_be_out = true;
        bool some_surely_in = false;
        std::size_t can_be_in = 0;
        std::size_t can_be_undec = 0;
        for (auto b : attackers) {
            LabelSet db = d[b.index];
            all_can_be_out &= db.contains(Label::out);
            some_surely_in |= db == LabelSet{Label::in};
            can_be_in += db.contains(Label::in);
            can_be_undec += db.contains(Label::undec);
        }
        LabelSet keep = LabelSet::all();
        if (!all_can_be_out) keep.erase(Label::in);
        if (can_be_in == 0) keep.erase(Label::out);
        if (some_surely_in || can_be_undec == 0) keep.erase(Label::undec);
        if (!narrow(d, x, keep, queue)) return false;

        LabelSet dx = d[x];
        if (dx == LabelSet{Label::in}) {
            for (auto b : attackers)
                if (!narrow(d, b.index, LabelSet{Label::out}, queue)) return false;
            for (auto t : af_.targets(ArgumentId{x}))
                if (!narrow(d, t.index, LabelSet{Label::out}, queue)) return false;
        } else if (dx == LabelSet{Label::out} && can_be_in == 1) {
            for (auto b : attackers)
                if (d[b.index].contains(Label::in) && !narrow(d, b.index, LabelSet{Label::in}, queue)) return false;
        } else if (dx == LabelSet{Label::undec}) {
            for (auto b : attackers)
                if (!narrow(d, b.index, LabelSet{Label::out, Label::undec}, queue)) return false;
            if (can_be_undec == 1)
                for (auto b : attackers)
                    if (d[b.index].contains(Label::undec) && !narrow(d, b.index, LabelSet{Label::undec}, queue))
                        return false;
        }
        return true;
    }

    void search(const std::vector<LabelSet>& d) {
        auto open = std::find_if(d.begin(), d.end(), [](LabelSet s) { return !s.is_singleton(); });
        if (open == d.end()) {
            std::vector<Label> labels(d.size());
            for (std::size_t i = 0; i < d.size(); ++i) labels[i] = d[i].first();
            Labelling l(af_, std::move(labels));
            if (is_complete(af_, l)) solutions_.push_back(std::move(l));
            return;
        }
        auto x = static_cast<std::uint32_t>(open - d.begin());
        for (Label v : all_labels) {
            if (!d[x].contains(v)) continue;
            auto branch = d;
            branch[x] = LabelSet{v};
            if (propagate(branch, {x})) search(branch);
        }
    }

    const Framework& af_;
    std::vector<Labelling> solutions_;
};

}  // namespace detail

/// All complete labellings in canonical (lexicographic) order. Never empty.
inline std::vector<Labelling> enumerate_complete(const Framework& af, const EnumerationLimits& limits = {}) {
    detail::check_cap(af, limits);
    return detail::CompleteEnumerator(af).run();
}

/// The grounded labelling by fixpoint iteration, independent of enumeration.
inline Labelling grounded(const Framework& af) {
    constexpr std::uint8_t unset = 3;
    std::vector<std::uint8_t> lab(af.size(), unset);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto a : af.arguments()) {
            if (lab[a.index] != unset) continue;
            bool all_out = true;
            bool some_in = false;
            for (auto b : af.attackers(a)) {
                all_out &= lab[b.index] == to_index(Label::out);
                some_in |= lab[b.index] == to_index(Label::in);
            }
            if (all_out) {
                lab[a.index] = static_cast<std::uint8_t>(Label::in);
                changed = true;
            } else if (some_in) {
                lab[a.index] = static_cast<std::uint8_t>(Label::out);
                changed = true;
            }
        }
    }
    std::vector<Label> labels(af.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = lab[i] == unset ? Label::undec : static_cast<Label>(lab[i]);
    return Labelling(af, std::move(labels));
}

/// Keeps the members of `complete` that satisfy `kind`'s selection rule.
/// Maximality and minimality are by set inclusion.
inline std::vector<Labelling> select_semantics(const std::vector<Labelling>& complete, SemanticsKind kind) {
    auto strict_subset = [](std::uint64_t a, std::uint64_t b) { return a != b && (a & ~b) == 0; };
    std::vector<Labelling> out;
    for (const auto& l : complete) {
        bool keep = true;
        switch (kind) {
            case SemanticsKind::complete: break;
            case SemanticsKind::stable: keep = l.mask(Label::undec) == 0; break;
            case SemanticsKind::grounded:
                keep = std::none_of(complete.begin(), complete.end(), [&](const Labelling& o) {
                    return strict_subset(o.mask(Label::in), l.mask(Label::in));
                });
                break;
            case SemanticsKind::preferred:
                keep = std::none_of(complete.begin(), complete.end(), [&](const Labelling& o) {
                    return strict_subset(l.mask(Label::in), o.mask(Label::in));
                });
                break;
            case SemanticsKind::semi_stable:
                keep = std::none_of(complete.begin(), complete.end(), [&](const Labelling& o) {
                    return strict_subset(o.mask(Label::undec), l.mask(Label::undec));
                });
                break;
        }
        if (keep) out.push_back(l);
    }
    return out;
}

/// Labellings of `kind` in canonical order; stable may be empty.
inline std::vector<Labelling> enumerate(const Framework& af, SemanticsKind kind, const EnumerationLimits& limits = {}) {
    return select_semantics(enumerate_complete(af, limits), kind);
}

}  // namespace argagg

#endif
