#pragma once

#include <cstdint>
#include <random>

#include "defectus/scalar.hpp"

namespace defectus {

/// Uniform draw from [lo, hi] off the raw engine stream (modulo bias is irrelevant here;
/// this keeps the sequence independent of the standard library's distribution internals).
inline long rng_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

/// Random ring element of bounded height: an integer in [-9, 9], or a polynomial
/// of degree <= 2 with coefficients in [0, q).
Scalar random_ring_element(const Backend& bk, std::mt19937_64& rng);

/// Random unit of the ring with the same height bounds.
Scalar random_unit(const Backend& bk, std::mt19937_64& rng);

} // namespace defectus
