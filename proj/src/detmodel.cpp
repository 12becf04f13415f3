#include "defectus/detmodel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "defectus/random.hpp"

namespace defectus {

ProblemShape::ProblemShape(int m_, int n_) : m(m_), n(n_), t(m_ - 1) {
    if (m < 2 || n < m)
        throw Error(ErrorCode::bad_input,
                    "problem shape requires 2 <= m <= n, got m=" + std::to_string(m) +
                        ", n=" + std::to_string(n));
}

NormalizedPointSpec::NormalizedPointSpec(ProblemShape shape_, std::vector<long> exponents_)
    : shape(shape_), exponents(std::move(exponents_)) {
    if (static_cast<int>(exponents.size()) != shape.t)
        throw Error(ErrorCode::bad_input,
                    "expected " + std::to_string(shape.t) + " exponents, got " +
                        std::to_string(exponents.size()));
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0)
            throw Error(ErrorCode::bad_input, "exponents must be nonnegative");
        if (i > 0 && exponents[i] < exponents[i - 1])
            throw Error(ErrorCode::bad_input, "exponents must be nondecreasing");
    }
}

long NormalizedPointSpec::exponent_sum() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

Matrix normalized_point(const NormalizedPointSpec& spec, const Backend& bk) {
    const int n = spec.shape.n, t = spec.shape.t;
    Matrix a(bk, spec.shape.m, n);
    for (int r = 0; r < t; ++r)
        for (int c = r; c < n; c += t)
            a.set(r, c, Scalar::uniformizer_power(bk, spec.exponents[r]));
    return a;
}

namespace {

ProblemShape shape_of(const Matrix& a) { return ProblemShape(a.rows(), a.cols()); }

// All m x m cofactors of a square matrix: entry (i, j) is
// (-1)^{i+j} times the complementary minor.
Matrix cofactor_grid(const Matrix& W) {
    const int m = W.rows();
    Matrix C(W.backend(), m, m);
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < m; ++i) {
        std::vector<int> ri = all;
        ri.erase(ri.begin() + i);
        for (int j = 0; j < m; ++j) {
            std::vector<int> ci = all;
            ci.erase(ci.begin() + j);
            Scalar d = determinant(W.submatrix(ri, ci));
            C.set(i, j, (i + j) % 2 ? -d : d);
        }
    }
    return C;
}

// Shared builder for both Jacobians: one column per column-subset of a,
// filled with the cofactors of the corresponding evaluated m x m submatrix.
Matrix jacobian_for_subsets(const Matrix& a, const std::vector<std::vector<int>>& subsets) {
    const int m = a.rows(), n = a.cols();
    Matrix J(a.backend(), m * n, static_cast<int>(subsets.size()));
    for (size_t s = 0; s < subsets.size(); ++s) {
        const auto& cols = subsets[s];
        Matrix C = cofactor_grid(a.submatrix([&] {
            std::vector<int> rows(m);
            std::iota(rows.begin(), rows.end(), 0);
            return rows;
        }(), cols));
        for (int i = 0; i < m; ++i)
            for (size_t pos = 0; pos < cols.size(); ++pos)
                J.set(i * n + cols[pos], static_cast<int>(s), C.at(i, static_cast<int>(pos)));
    }
    return J;
}

} // namespace

Scalar window_minor_value(const Matrix& a, int i) {
    const ProblemShape shape = shape_of(a);
    if (i < 1 || i > shape.window_count())
        throw Error(ErrorCode::bad_window,
                    "window index " + std::to_string(i) + " outside 1.." +
                        std::to_string(shape.window_count()));
    return determinant(a.column_block(i - 1, shape.m));
}

Matrix jacobian_windows_at_point(const Matrix& a) {
    const ProblemShape shape = shape_of(a);
    std::vector<std::vector<int>> windows;
    for (int k = 1; k <= shape.window_count(); ++k) {
        std::vector<int> cols(shape.m);
        std::iota(cols.begin(), cols.end(), k - 1);
        windows.push_back(std::move(cols));
    }
    return jacobian_for_subsets(a, windows);
}

Matrix jacobian_all_minors_at_point(const Matrix& a) {
    const ProblemShape shape = shape_of(a);
    return jacobian_for_subsets(a, combinations(shape.n, shape.m));
}

Valuation window_ideal_valuation(const Matrix& a, int i) {
    const ProblemShape shape = shape_of(a);
    if (i < 1 || i > shape.n - shape.t + 1)
        throw Error(ErrorCode::bad_window,
                    "window index " + std::to_string(i) + " outside 1.." +
                        std::to_string(shape.n - shape.t + 1));
    return minor_ideal_valuation(a.column_block(i - 1, shape.t), shape.t);
}

Valuation conductor_colength(const Matrix& a) {
    const ProblemShape shape = shape_of(a);
    Valuation total = Valuation::of(0);
    for (int i = 2; i <= shape.window_count(); ++i) total += window_ideal_valuation(a, i);
    return total;
}

Matrix sample_variety_point(const ProblemShape& shape, const Backend& bk,
                            const std::optional<std::vector<long>>& profile,
                            uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (profile) {
        NormalizedPointSpec spec(shape, *profile);
        // 3 ops per dimension is already a dense scramble; heavier mixing only
        // inflates entry sizes (polynomial degrees especially) with no gain
        Matrix U = random_unimodular(bk, shape.m, rng(), 3L * shape.m);
        Matrix V = random_unimodular(bk, shape.n, rng(), 3L * shape.n);
        return U * normalized_point(spec, bk) * V;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix B(bk, shape.m, shape.t);
        Matrix C(bk, shape.t, shape.n);
        for (int i = 0; i < shape.m; ++i)
            for (int j = 0; j < shape.t; ++j) B.set(i, j, random_ring_element(bk, rng));
        for (int i = 0; i < shape.t; ++i)
            for (int j = 0; j < shape.n; ++j) C.set(i, j, random_ring_element(bk, rng));
        Matrix a = B * C;
        if (rank(a) == shape.t) return a;
    }
    throw Error(ErrorCode::sampling_exhausted,
                "no full-rank product after 64 attempts (shape " + std::to_string(shape.m) +
                    "x" + std::to_string(shape.n) + ")");
}

bool initial_monomial_check(int size) {
    if (size < 2 || size > 6)
        throw Error(ErrorCode::size_too_large,
                    "permutation enumeration is limited to sizes 2..6");

    // A permutation monomial of the size x size generic determinant is the set
    // {X_{r, perm(r)}}. With variables ordered row-major, earlier = larger, a
    // monomial beats another iff its sorted index vector is lexicographically
    // smaller. The main diagonal must be the strict maximum.
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> diagonal(size);
    for (int r = 0; r < size; ++r) diagonal[r] = r * size + r;
    bool dominant = true;
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> indices(size);
        for (int r = 0; r < size; ++r) indices[r] = r * size + perm[r];
        if (!(diagonal < indices)) dominant = false;
    }

    // The initial monomial of window minor f_i is its main diagonal
    // X_{1,i}, X_{2,i+1}, ..., X_{m,i+t}; distinct windows must not share a
    // variable, for every width n this check is asked to cover.
    const int m = size, t = size - 1;
    bool disjoint = true;
    for (int n = m; n <= 9; ++n) {
        std::set<std::pair<int, int>> support;
        int total = 0;
        for (int i = 1; i <= n - t; ++i)
            for (int r = 1; r <= m; ++r) {
                support.insert({r, i + r - 1});
                ++total;
            }
        if (static_cast<int>(support.size()) != total) disjoint = false;
    }
    return dominant && disjoint;
}

bool derivative_pattern_check(const NormalizedPointSpec& spec, const Backend& bk) {
    const int m = spec.shape.m, n = spec.shape.n, t = spec.shape.t;
    Matrix a = normalized_point(spec, bk);
    Matrix J = jacobian_windows_at_point(a);
    Scalar delta = Scalar::uniformizer_power(bk, spec.exponent_sum());
    for (int k = 1; k <= spec.shape.window_count(); ++k)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                const Scalar& e = J.at((i - 1) * n + (j - 1), k - 1);
                const bool expected_spot = (i == m) && (j == k || j == k + t);
                if (expected_spot) {
                    if (e != delta && e != -delta) return false;
                } else if (!e.is_zero()) {
                    return false;
                }
            }
    return true;
}

bool triangular_submatrix_check(const NormalizedPointSpec& spec, const Backend& bk) {
    const int m = spec.shape.m, n = spec.shape.n;
    const int wins = spec.shape.window_count();
    Matrix a = normalized_point(spec, bk);
    Matrix J = jacobian_windows_at_point(a);
    Scalar delta = Scalar::uniformizer_power(bk, spec.exponent_sum());

    // rows of J indexed by the last-row variables X_{m,1} ... X_{m,n-t}
    std::vector<int> rows(wins);
    for (int j = 0; j < wins; ++j) rows[j] = (m - 1) * n + j;
    std::vector<int> cols(wins);
    std::iota(cols.begin(), cols.end(), 0);
    Matrix S = J.submatrix(rows, cols);

    for (int i = 0; i < wins; ++i) {
        if (S.at(i, i) != delta && S.at(i, i) != -delta) return false;
        for (int j = i + 1; j < wins; ++j)
            if (!S.at(i, j).is_zero()) return false;
    }

    Scalar det = determinant(S);
    Scalar power = Scalar::uniformizer_power(bk, spec.exponent_sum() * wins);
    if (det != power && det != -power) return false;

    // the triangular witness pins the minor ideal; re-derive it exhaustively
    return minor_ideal_valuation(J, wins) ==
           Valuation::of(spec.exponent_sum()).times(wins);
}

} // namespace defectus
