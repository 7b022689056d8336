#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algnorm/algebra.hpp"

namespace algnorm {

enum class CoefficientPool {
    Real,      // im = 0; keeps l1/sup norms and phi values exact
    Gaussian,  // independent rational re and im
};

struct SamplerConfig {
    std::uint64_t seed = 42;
    std::uint64_t trials = 1000;
    Index max_support = 8;
    Index max_index = 64;
    // Numerators in [-bound, bound], denominators in [1, bound].
    std::int64_t coefficient_bound = 100;
    CoefficientPool pool = CoefficientPool::Gaussian;
};

// Deterministic element stream for one algebra. Support sizes are uniform on
// 1..max_support, indices uniform on the algebra's window (1..max_index, or
// the whole finite basis, plus adjoined coordinates). One draw in ten is a
// pure basis vector and one in ten is a product ab, so the A^2 and L cases of
// the functional tables are always exercised.
class Sampler {
public:
    Sampler(AlgebraSpec algebra, const SamplerConfig& config);

    Element element();
    Element general_element();
    Element basis_vector();
    Element square_member();
    GaussianRational scalar();

    const std::vector<Index>& window() const { return window_; }

private:
    AlgebraSpec algebra_;
    SamplerConfig config_;
    std::mt19937_64 rng_;
    std::vector<Index> window_;
};

}  // namespace algnorm
