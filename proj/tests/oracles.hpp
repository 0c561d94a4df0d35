#ifndef ARGAGG_TESTS_ORACLES_HPP
#define ARGAGG_TESTS_ORACLES_HPP

// Brute-force reference implementations. Written straight from the
// definitions; none of them call the library's own algorithms.

#include "argagg/argagg.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using argagg::ArgumentId;
using argagg::Framework;
using argagg::Label;
using argagg::Labelling;
using argagg::SemanticsKind;

using Labels = std::vector<Label>;

inline std::vector<std::vector<std::size_t>> attackers_of(const Framework& af) {
    std::vector<std::vector<std::size_t>> att(af.size());
    for (std::size_t x = 0; x < af.size(); ++x)
        for (std::size_t y = 0; y < af.size(); ++y)
            if (af.attacks(ArgumentId{static_cast<std::uint32_t>(y)}, ArgumentId{static_cast<std::uint32_t>(x)}))
                att[x].push_back(y);
    return att;
}

inline bool complete(const std::vector<std::vector<std::size_t>>& att, const Labels& l) {
    for (std::size_t x = 0; x < l.size(); ++x) {
        bool any_in = false, all_out = true, any_undec = false;
        for (auto y : att[x]) {
            any_in |= l[y] == Label::in;
            all_out &= l[y] == Label::out;
            any_undec |= l[y] == Label::undec;
        }
        if (l[x] == Label::in && !all_out) return false;
        if (l[x] == Label::out && !any_in) return false;
        if (l[x] == Label::undec && (any_in || !any_undec)) return false;
    }
    return true;
}

inline bool complete(const Framework& af, const Labels& l) { return complete(attackers_of(af), l); }

/// All 3^n assignments, in lexicographic order with in < out < undec.
inline std::vector<Labels> all_assignments(std::size_t n) {
    std::vector<Labels> out;
    Labels cur(n, Label::in);
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (cur[i] != Label::undec) {
                cur[i] = static_cast<Label>(static_cast<int>(cur[i]) + 1);
                for (std::size_t j = i + 1; j < n; ++j) cur[j] = Label::in;
                goto next;
            }
        }
        return out;
    next:;
    }
}

inline std::vector<Labels> complete_labellings(const Framework& af) {
    auto att = attackers_of(af);
    std::vector<Labels> out;
    for (auto& l : all_assignments(af.size()))
        if (complete(att, l)) out.push_back(l);
    return out;
}

inline std::set<std::size_t> with(const Labels& l, Label x) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] == x) s.insert(i);
    return s;
}

inline bool proper_subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<Labels> semantics(const Framework& af, SemanticsKind kind) {
    auto comp = complete_labellings(af);
    std::vector<Labels> out;
    for (const auto& l : comp) {
        bool keep = true;
        for (const auto& m : comp) {
            switch (kind) {
                case SemanticsKind::complete: break;
                case SemanticsKind::grounded: keep &= !proper_subset(with(m, Label::in), with(l, Label::in)); break;
                case SemanticsKind::preferred: keep &= !proper_subset(with(l, Label::in), with(m, Label::in)); break;
                case SemanticsKind::semi_stable:
                    keep &= !proper_subset(with(m, Label::undec), with(l, Label::undec));
                    break;
                case SemanticsKind::stable: keep &= with(l, Label::undec).empty(); break;
            }
        }
        if (keep) out.push_back(l);
    }
    return out;
}

inline Labels labels_of(const Labelling& l) {
    Labels out;
    for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l.at(i));
    return out;
}

inline std::vector<Labels> labels_of(const std::vector<Labelling>& ls) {
    std::vector<Labels> out;
    for (const auto& l : ls) out.push_back(labels_of(l));
    return out;
}

/// Strict plurality, nullopt on any tie at the top.
inline std::optional<Labels> plurality(const std::vector<Labels>& votes) {
    Labels out(votes.front().size());
    for (std::size_t a = 0; a < out.size(); ++a) {
        int c[3] = {0, 0, 0};
        for (const auto& v : votes) ++c[static_cast<int>(v[a])];
        int best = std::max({c[0], c[1], c[2]});
        int winners = (c[0] == best) + (c[1] == best) + (c[2] == best);
        if (winners > 1) return std::nullopt;
        out[a] = c[0] == best ? Label::in : c[1] == best ? Label::out : Label::undec;
    }
    return out;
}

inline Labels plurality_undec(const std::vector<Labels>& votes) {
    Labels out(votes.front().size());
    for (std::size_t a = 0; a < out.size(); ++a) {
        int c[3] = {0, 0, 0};
        for (const auto& v : votes) ++c[static_cast<int>(v[a])];
        int best = std::max({c[0], c[1], c[2]});
        int winners = (c[0] == best) + (c[1] == best) + (c[2] == best);
        out[a] = winners > 1 ? Label::undec : c[0] == best ? Label::in : c[1] == best ? Label::out : Label::undec;
    }
    return out;
}

/// Whether clause `which` (0..4 = IN-CR1, IN-CR2, OUT-CR, UNDEC-CR1,
/// UNDEC-CR2) holds at every argument.
inline bool clause_holds(const std::vector<std::vector<std::size_t>>& att, const Labels& l, int which) {
    for (std::size_t x = 0; x < l.size(); ++x) {
        bool any_in = false, any_undec = false;
        for (auto y : att[x]) {
            any_in |= l[y] == Label::in;
            any_undec |= l[y] == Label::undec;
        }
        switch (which) {
            case 0: if (l[x] == Label::in && any_in) return false; break;
            case 1: if (l[x] == Label::in && any_undec) return false; break;
            case 2: if (l[x] == Label::out && !any_in) return false; break;
            case 3: if (l[x] == Label::undec && any_in) return false; break;
            case 4: if (l[x] == Label::undec && !any_undec) return false; break;
        }
    }
    return true;
}

/// Every ordered tie-free n-profile over `members`; true if some plurality
/// outcome violates clause `which` (-1 means full completeness).
inline bool any_violation(const Framework& af, const std::vector<Labels>& members, std::size_t n, int which) {
    auto att = attackers_of(af);
    if (members.empty()) return false;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Labels> votes;
        for (auto i : idx) votes.push_back(members[i]);
        if (auto o = plurality(votes)) {
            bool ok = which < 0 ? complete(att, *o) : clause_holds(att, *o, which);
            if (!ok) return true;
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == members.size()) idx[k++] = 0;
        if (k == n) return false;
    }
}

inline std::set<Label> justification(const std::vector<Labels>& comp, std::size_t a) {
    std::set<Label> s;
    for (const auto& l : comp) s.insert(l[a]);
    return s;
}

inline Label swap(Label l) { return l == Label::in ? Label::out : l == Label::out ? Label::in : Label::undec; }

inline bool sync_equal(const std::vector<Labels>& comp, std::size_t a, std::size_t b) {
    for (const auto& l : comp)
        if (l[a] != l[b]) return false;
    return true;
}

inline bool sync_swapped(const std::vector<Labels>& comp, std::size_t a, std::size_t b) {
    for (const auto& l : comp)
        if (l[a] != swap(l[b])) return false;
    return true;
}

inline bool weakly_connected(const Framework& af, std::size_t a, std::size_t b) {
    std::vector<bool> seen(af.size(), false);
    std::vector<std::size_t> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < af.size(); ++y) {
            ArgumentId X{static_cast<std::uint32_t>(x)}, Y{static_cast<std::uint32_t>(y)};
            if (!seen[y] && (af.attacks(X, Y) || af.attacks(Y, X))) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return seen[b];
}

/// Erdos-Renyi style framework; self-loops drawn separately.
inline Framework random_framework(std::mt19937_64& rng, std::size_t min_args, std::size_t max_args) {
    std::uniform_int_distribution<std::size_t> size(min_args, max_args);
    std::uniform_real_distribution<double> u(0, 1);
    std::size_t n = size(rng);
    double density = 0.1 + 0.5 * u(rng);
    double loops = 0.15 * u(rng);
    std::vector<std::pair<std::size_t, std::size_t>> att;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (u(rng) < (i == j ? loops : density)) att.emplace_back(i, j);
    return Framework::from_indices(n, att);
}

}  // namespace oracle

#endif
