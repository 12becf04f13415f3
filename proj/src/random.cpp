#include "defectus/random.hpp"

#include "defectus/fqpoly.hpp"

namespace defectus {

Scalar random_ring_element(const Backend& bk, std::mt19937_64& rng) {
    if (bk.kind() == BackendKind::int_local)
        return Scalar::from_int(bk, rng_range(rng, -9, 9));
    // polynomial of degree at most 2 with residue coefficients
    const long q = bk.prime();
    std::vector<long> coeffs(3);
    for (auto& c : coeffs) c = rng_range(rng, 0, q - 1);
    return Scalar::from_poly_fraction(bk, FqPoly(q, coeffs), FqPoly::constant(q, 1));
}

Scalar random_unit(const Backend& bk, std::mt19937_64& rng) {
    if (bk.kind() == BackendKind::int_local) {
        const long p = bk.prime();
        long v = rng_range(rng, 1, p - 1) + p * rng_range(rng, 0, 3);
        if (rng() % 2) v = -v;
        return Scalar::from_int(bk, v);
    }
    const long q = bk.prime();
    std::vector<long> coeffs(3);
    coeffs[0] = rng_range(rng, 1, q - 1); // nonzero constant term keeps it a unit
    for (size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng_range(rng, 0, q - 1);
    return Scalar::from_poly_fraction(bk, FqPoly(q, coeffs), FqPoly::constant(q, 1));
}

} // namespace defectus
