#pragma once

#include <cstdint>
#include <vector>

#include "defectus/matrix.hpp"
#include "defectus/valuation.hpp"

namespace defectus {

/// Unimodular transforms and invariant-factor exponents: left * M * right is
/// the diagonal grid with pi^exponents[i] at (i, i).
struct SmithDecomposition {
    std::vector<long> exponents; // nondecreasing, length == rank
    int rank;
    Matrix left;
    Matrix right;

    /// Materializes the diagonal grid (same shape as the decomposed matrix).
    Matrix diagonal(int rows, int cols) const;
};

/// Exact determinant by fraction-free (Bareiss) elimination; intermediates stay in the ring.
Scalar determinant(const Matrix& M);

/// Rank over the fraction field.
int rank(const Matrix& M);

/// Minimum valuation over all k x k minors; infinity iff rank < k.
/// Dispatches to the OpenMP kernel when the minor count is large enough.
Valuation minor_ideal_valuation(const Matrix& M, int k);
/// Serial reference implementation with identical semantics.
Valuation minor_ideal_valuation_serial(const Matrix& M, int k);

SmithDecomposition smith_form(const Matrix& M);

/// Torsion length of coker(M) = sum of Smith invariant-factor exponents. Always finite.
Valuation cokernel_torsion_length(const Matrix& M);

/// Deterministic product of `steps` random elementary row operations on the identity.
Matrix random_unimodular(const Backend& bk, int size, uint64_t seed, long steps);

/// U * a * V with U, V checked square and unimodular.
Matrix gl_act(const Matrix& a, const Matrix& U, const Matrix& V);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);
unsigned long long binomial(int n, int k);

} // namespace defectus
