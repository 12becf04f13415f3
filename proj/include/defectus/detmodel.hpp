#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "defectus/linalg.hpp"

namespace defectus {

/// The determinantal setting: a generic m x n matrix with the ideal of its
/// maximal (m x m) minors. t = m - 1 is the rank of points on the variety,
/// the size of the window ideals, and the length of exponent profiles.
struct ProblemShape {
    int m, n, t;

    ProblemShape(int m, int n);

    /// Number of window minors f_1 ... f_{n-t} (m consecutive columns each).
    int window_count() const { return n - t; }
};

/// Diagonal data for the canonical point: nondecreasing exponents
/// a_1 <= ... <= a_t defining D = diag(pi^{a_1}, ..., pi^{a_t}).
struct NormalizedPointSpec {
    ProblemShape shape;
    std::vector<long> exponents;

    NormalizedPointSpec(ProblemShape shape, std::vector<long> exponents);

    /// Valuation of det D — the w-invariant of the point.
    long exponent_sum() const;
};

/// The m x n point whose first t rows repeat D cyclically and whose last row
/// is zero: entry (i, j) = pi^{a_i} when j = i (mod t), for 1 <= i <= t.
Matrix normalized_point(const NormalizedPointSpec& spec, const Backend& bk);

/// Determinant of the m consecutive columns i ... i+t (1-based window index).
Scalar window_minor_value(const Matrix& a, int i);

/// Evaluated Jacobian of the window minors: an (mn) x (n-t) matrix whose rows
/// follow the variables X_{ij} in row-major order. The entry at (X_{ij}, k) is
/// the (i, j-k+1) cofactor of window k when column j lies in that window,
/// else zero.
Matrix jacobian_windows_at_point(const Matrix& a);

/// Evaluated Jacobian of ALL maximal minors: an (mn) x C(n,m) matrix, one
/// column per m-subset of columns in lexicographic order. The window-minor
/// columns appear among them at the consecutive subsets.
Matrix jacobian_all_minors_at_point(const Matrix& a);

/// Valuation of the ideal of t-minors of the t consecutive columns
/// i ... i+t-1 (1-based, 1 <= i <= n-t+1).
Valuation window_ideal_valuation(const Matrix& a, int i);

/// Colength of the conductor: the sum of window_ideal_valuation over the
/// interior windows i = 2 ... n-t; zero when the product is empty (n = m).
Valuation conductor_colength(const Matrix& a);

/// A random point with all maximal minors zero. Without a profile: a product
/// of random m x t and t x n matrices, resampled until the rank is exactly t.
/// With a profile: a two-sided unimodular scramble of the normalized point
/// with those exponents, so the t-minor valuation equals the profile sum.
Matrix sample_variety_point(const ProblemShape& shape, const Backend& bk,
                            const std::optional<std::vector<long>>& profile,
                            uint64_t seed);

/// Brute-force check over all size! permutation monomials of the generic
/// size x size determinant: under the lexicographic order with row-major
/// variables (earlier variables larger), the unique maximal monomial is the
/// main diagonal. Also checks, for this m = size and every n up to 9, that
/// the main-diagonal supports of the windows are pairwise disjoint.
bool initial_monomial_check(int size);

/// True iff the evaluated window Jacobian of the normalized point is
/// supported exactly on the variables X_{m,k} and X_{m,k+t} per window k,
/// with values +-det D.
bool derivative_pattern_check(const NormalizedPointSpec& spec, const Backend& bk);

/// True iff the rows of the window Jacobian indexed by X_{m,1} ... X_{m,n-t}
/// form a lower-triangular square matrix with diagonal +-det D and
/// determinant +-(det D)^{n-t}, and the full Jacobian's (n-t)-minor ideal has
/// valuation (n-t) * v(det D) by exhaustive enumeration.
bool triangular_submatrix_check(const NormalizedPointSpec& spec, const Backend& bk);

} // namespace defectus
