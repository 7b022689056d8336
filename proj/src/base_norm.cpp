#include "algnorm/base_norm.hpp"

namespace algnorm {

std::string to_string(BaseNormTag tag) {
    switch (tag) {
        case BaseNormTag::L1: return "l1";
        case BaseNormTag::L2: return "l2";
        case BaseNormTag::Sup: return "sup";
    }
    return "?";
}

std::optional<BaseNormTag> parse_base_norm(std::string_view text) {
    if (text == "l1") return BaseNormTag::L1;
    if (text == "l2") return BaseNormTag::L2;
    if (text == "sup") return BaseNormTag::Sup;
    return std::nullopt;
}

Magnitude base_norm(BaseNormTag tag, const Element& a) {
    switch (tag) {
        case BaseNormTag::L1: {
            Magnitude sum = Magnitude::from_exact(Rational(0));
            for (const auto& [k, c] : a.terms()) {
                sum = sum + magnitude(c);
            }
            return sum;
        }
        case BaseNormTag::L2: {
            Rational square(0);
            for (const auto& [k, c] : a.terms()) {
                square += magnitude_squared(c);
            }
            return Magnitude::from_square(square);
        }
        case BaseNormTag::Sup: {
            const GaussianRational* best = nullptr;
            Rational best_square(0);
            for (const auto& [k, c] : a.terms()) {
                Rational sq = magnitude_squared(c);
                if (best == nullptr || sq > best_square) {
                    best = &c;
                    best_square = std::move(sq);
                }
            }
            return best == nullptr ? Magnitude::from_exact(Rational(0)) : magnitude(*best);
        }
    }
    return {};
}

}  // namespace algnorm
