#ifndef ARGAGG_PERMUTATION_HPP
#define ARGAGG_PERMUTATION_HPP

#include "argagg/error.hpp"
#include "argagg/labelling.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace argagg {

/// Bijection on {in, out, undec}.
class LabelPermutation {
public:
    constexpr LabelPermutation() : image_{Label::in, Label::out, Label::undec} {}
    /// Images of in, out, undec respectively; must be a bijection.
    LabelPermutation(Label of_in, Label of_out, Label of_undec) : image_{of_in, of_out, of_undec} {
        LabelSet seen{of_in, of_out, of_undec};
        if (seen.size() != 3) throw Error("label mapping is not a bijection");
    }

    static LabelPermutation identity() { return {}; }
    static LabelPermutation swap_in_out() { return {Label::out, Label::in, Label::undec}; }

    /// All six permutations; identity first.
    static std::vector<LabelPermutation> all() {
        std::vector<LabelPermutation> out;
        std::array<Label, 3> p{Label::in, Label::out, Label::undec};
        do out.emplace_back(p[0], p[1], p[2]);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
    static std::vector<LabelPermutation> undec_preserving() { return {identity(), swap_in_out()}; }

    Label operator()(Label l) const { return image_[to_index(l)]; }

    LabelPermutation inverse() const {
        LabelPermutation inv;
        for (Label l : all_labels) inv.image_[to_index((*this)(l))] = l;
        return inv;
    }

    bool is_identity() const { return *this == identity(); }
    bool is_undec_preserving() const { return (*this)(Label::undec) == Label::undec; }
    bool is_fixpoint_free() const {
        return std::none_of(all_labels.begin(), all_labels.end(), [this](Label l) { return (*this)(l) == l; });
    }

    /// `in:out,out:undec,undec:in`
    std::string to_string() const {
        std::string out;
        for (Label l : all_labels) {
            if (!out.empty()) out += ",";
            out += std::string(argagg::to_string(l)) + ":" + std::string(argagg::to_string((*this)(l)));
        }
        return out;
    }

    static LabelPermutation parse(std::string_view text) {
        std::array<Label, 3> image{Label::in, Label::out, Label::undec};
        std::size_t pos = 0;
        LabelSet defined;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            auto item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
            auto colon = item.find(':');
            if (colon == std::string_view::npos) throw ParseError("bad permutation item '" + std::string(item) + "'");
            Label from = parse_label(trim(item.substr(0, colon)));
            image[to_index(from)] = parse_label(trim(item.substr(colon + 1)));
            defined.insert(from);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (defined.size() != 3) throw ParseError("permutation must map all three labels");
        return {image[0], image[1], image[2]};
    }

    bool operator==(const LabelPermutation&) const = default;

private:
    std::array<Label, 3> image_;
};

}  // namespace argagg

#endif
