#include "algnorm/sampler.hpp"

#include <algorithm>

#include "random.hpp"

namespace algnorm {

Sampler::Sampler(AlgebraSpec algebra, const SamplerConfig& config)
    : algebra_(std::move(algebra)), config_(config), rng_(config.seed) {
    if (config_.max_support == 0 || config_.max_index == 0 || config_.coefficient_bound < 1) {
        throw Error(ErrorKind::InvalidParameter, "sampler needs max_support, max_index and coefficient_bound >= 1");
    }
    const Index top = algebra_.dimension().value_or(config_.max_index);
    for (Index k = 1; k <= top; ++k) {
        if (algebra_.in_range(k)) window_.push_back(k);
    }
    for (Index u : algebra_.adjoined_indices()) {
        if (std::find(window_.begin(), window_.end(), u) == window_.end()) window_.push_back(u);
    }
}

GaussianRational Sampler::scalar() {
    const auto b = config_.coefficient_bound;
    auto draw = [&] {
        const auto num = detail::uniform_signed(rng_, -b, b);
        const auto den = detail::uniform_signed(rng_, 1, b);
        return Rational(num, den);
    };
    Rational re = draw();
    if (config_.pool == CoefficientPool::Real) {
        return GaussianRational(std::move(re));
    }
    Rational im = draw();
    return GaussianRational(std::move(re), std::move(im));
}

Element Sampler::general_element() {
    const auto size = detail::uniform(rng_, 1, config_.max_support);
    std::vector<Element::Term> terms;
    terms.reserve(size);
    for (std::uint64_t s = 0; s < size; ++s) {
        const Index k = window_[detail::uniform(rng_, 0, window_.size() - 1)];
        terms.emplace_back(k, scalar());
    }
    return Element::from_terms(std::move(terms));
}

Element Sampler::basis_vector() { return Element::basis(window_[detail::uniform(rng_, 0, window_.size() - 1)]); }

Element Sampler::square_member() {
    const Element a = general_element();
    const Element b = general_element();
    return multiply(algebra_, a, b);
}

Element Sampler::element() {
    switch (detail::uniform(rng_, 0, 9)) {
        case 0: return basis_vector();
        case 1: return square_member();
        default: return general_element();
    }
}

}  // namespace algnorm
