#include "defectus/detmodel.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace defectus;

namespace {

Matrix random_entries(const Backend& bk, int rows, int cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> val(-9, 9);
    std::uniform_int_distribution<long> pow(0, 2);
    Matrix M(bk, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            M.set(i, j, Scalar::from_int(bk, val(rng)) * Scalar::uniformizer_power(bk, pow(rng)));
    return M;
}

} // namespace

TEST_CASE("problem shape validation and window count") {
    ProblemShape s(3, 5);
    CHECK(s.t == 2);
    CHECK(s.window_count() == 3);
    CHECK(ProblemShape(2, 2).window_count() == 1);
    expect_error(ErrorCode::bad_input, [] { ProblemShape(1, 4); });
    expect_error(ErrorCode::bad_input, [] { ProblemShape(4, 3); });
}

TEST_CASE("normalized point spec validation") {
    ProblemShape s(3, 5);
    CHECK(NormalizedPointSpec(s, {1, 2}).exponent_sum() == 3);
    expect_error(ErrorCode::bad_input, [&] { NormalizedPointSpec(s, {1}); });
    expect_error(ErrorCode::bad_input, [&] { NormalizedPointSpec(s, {2, 1}); });
    expect_error(ErrorCode::bad_input, [&] { NormalizedPointSpec(s, {-1, 0}); });
}

TEST_CASE("normalized point layout, one-row case") {
    Backend bk = Backend::int_local(5);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(2, 4), {1}), bk);
    CHECK(a == Matrix::from_ints(bk, {{5, 5, 5, 5}, {0, 0, 0, 0}}));
}

TEST_CASE("normalized point layout, staggered rows") {
    Backend bk = Backend::int_local(2);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(3, 4), {1, 2}), bk);
    CHECK(a == Matrix::from_ints(bk, {{2, 0, 2, 0}, {0, 4, 0, 4}, {0, 0, 0, 0}}));
}

TEST_CASE("normalized point over the polynomial backend") {
    Backend bk = Backend::poly_local(3);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(2, 3), {2}), bk);
    Scalar t2 = Scalar::uniformizer_power(bk, 2);
    for (int j = 0; j < 3; ++j) {
        CHECK(a.at(0, j) == t2);
        CHECK(a.at(1, j).is_zero());
    }
}

TEST_CASE("window minors match the permutation expansion") {
    for (const Backend& bk : {Backend::int_local(5), Backend::poly_local(3)}) {
        Matrix M = random_entries(bk, 3, 5, 42);
        for (int i = 1; i <= 3; ++i)
            CHECK(window_minor_value(M, i) ==
                  oracles::permutation_determinant(M.column_block(i - 1, 3)));
    }
}

TEST_CASE("window minors vanish on the variety") {
    Backend bk = Backend::int_local(5);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(3, 5), {1, 2}), bk);
    for (int i = 1; i <= 3; ++i) CHECK(window_minor_value(a, i).is_zero());
}

TEST_CASE("window index bounds") {
    Backend bk = Backend::int_local(5);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(3, 5), {0, 0}), bk);
    expect_error(ErrorCode::bad_window, [&] { window_minor_value(a, 0); });
    expect_error(ErrorCode::bad_window, [&] { window_minor_value(a, 4); });
    expect_error(ErrorCode::bad_window, [&] { window_ideal_valuation(a, 0); });
    expect_error(ErrorCode::bad_window, [&] { window_ideal_valuation(a, 5); });
}

TEST_CASE("window jacobian matches the derivative oracle entrywise") {
    for (const Backend& bk : {Backend::int_local(2), Backend::poly_local(3)}) {
        Matrix M = random_entries(bk, 3, 5, 7);
        Matrix J = jacobian_windows_at_point(M);
        REQUIRE(J.rows() == 15);
        REQUIRE(J.cols() == 3);
        for (int k = 0; k < 3; ++k) {
            Matrix win = M.column_block(k, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 5; ++j) {
                    Scalar got = J.at(i * 5 + j, k);
                    if (j >= k && j <= k + 2)
                        CHECK(got == oracles::permutation_det_derivative(win, i, j - k));
                    else
                        CHECK(got.is_zero());
                }
        }
    }
}

TEST_CASE("all-minors jacobian matches the derivative oracle entrywise") {
    Backend bk = Backend::int_local(5);
    Matrix M = random_entries(bk, 2, 4, 11);
    Matrix J = jacobian_all_minors_at_point(M);
    REQUIRE(J.rows() == 8);
    REQUIRE(J.cols() == 6); // C(4,2) column pairs in lexicographic order
    auto subsets = combinations(4, 2);
    std::vector<int> all_rows = {0, 1};
    for (size_t s = 0; s < subsets.size(); ++s) {
        Matrix sub = M.submatrix(all_rows, subsets[s]);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) {
                Scalar got = J.at(i * 4 + j, static_cast<int>(s));
                int pos = -1;
                for (size_t q = 0; q < subsets[s].size(); ++q)
                    if (subsets[s][q] == j) pos = static_cast<int>(q);
                if (pos >= 0)
                    CHECK(got == oracles::permutation_det_derivative(sub, i, pos));
                else
                    CHECK(got.is_zero());
            }
    }
}

TEST_CASE("all-minors jacobian hand case") {
    // a = [[1,0,0],[0,0,0]]: the {0,1}-minor is X00*X11 - X01*X10, so its
    // derivative with respect to X11 (variable row 4) is X00 = 1.
    Backend bk = Backend::int_local(5);
    Matrix a = Matrix::from_ints(bk, {{1, 0, 0}, {0, 0, 0}});
    Matrix J = jacobian_all_minors_at_point(a);
    CHECK(J.at(4, 0) == Scalar::one(bk));
    CHECK(J.at(3, 0).is_zero());
}

TEST_CASE("window ideal valuations of a staggered point") {
    Backend bk = Backend::int_local(2);
    Matrix a = normalized_point(NormalizedPointSpec(ProblemShape(3, 4), {1, 2}), bk);
    CHECK(window_ideal_valuation(a, 1) == Valuation::of(3));
    CHECK(window_ideal_valuation(a, 2) == Valuation::of(3));
    CHECK(window_ideal_valuation(a, 3) == Valuation::of(3));
    CHECK(conductor_colength(a) == Valuation::of(3));
}

TEST_CASE("conductor colength sums interior windows only") {
    Backend bk = Backend::int_local(5);
    // square shape: no interior windows, empty product
    Matrix sq = normalized_point(NormalizedPointSpec(ProblemShape(2, 2), {3}), bk);
    CHECK(conductor_colength(sq) == Valuation::of(0));
    // one-row shape: windows are single columns, each of valuation a_1
    Matrix row = normalized_point(NormalizedPointSpec(ProblemShape(2, 4), {1}), bk);
    CHECK(conductor_colength(row) == Valuation::of(2));
}

TEST_CASE("conductor colength is infinite when a window degenerates") {
    Backend bk = Backend::int_local(5);
    // columns 1,2 are proportional, so the middle window's minors all vanish
    Matrix a = Matrix::from_ints(bk, {{1, 0, 0, 5}, {0, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK(window_ideal_valuation(a, 2) == Valuation::infinity());
    CHECK(conductor_colength(a) == Valuation::infinity());
}

TEST_CASE("free sampling lands on the variety with full rank") {
    for (const Backend& bk : {Backend::int_local(5), Backend::poly_local(3)}) {
        ProblemShape s(3, 5);
        Matrix a = sample_variety_point(s, bk, std::nullopt, 99);
        CHECK(minor_ideal_valuation(a, 3) == Valuation::infinity());
        CHECK(rank(a) == 2);
        CHECK(a == sample_variety_point(s, bk, std::nullopt, 99)); // deterministic
        CHECK(a != sample_variety_point(s, bk, std::nullopt, 100));
    }
}

TEST_CASE("profile sampling pins the t-minor valuation") {
    Backend bk = Backend::int_local(2);
    ProblemShape s(3, 6);
    std::vector<long> profile = {1, 3};
    Matrix a = sample_variety_point(s, bk, profile, 5);
    CHECK(minor_ideal_valuation(a, 3) == Valuation::infinity());
    CHECK(minor_ideal_valuation(a, 2) == Valuation::of(4));
    CHECK(a == sample_variety_point(s, bk, profile, 5));
}

TEST_CASE("initial monomial dominance and window disjointness") {
    for (int size = 2; size <= 6; ++size) CHECK(initial_monomial_check(size));
    expect_error(ErrorCode::size_too_large, [] { initial_monomial_check(1); });
    expect_error(ErrorCode::size_too_large, [] { initial_monomial_check(7); });
}

TEST_CASE("derivative pattern at normalized points") {
    CHECK(derivative_pattern_check(NormalizedPointSpec(ProblemShape(2, 4), {1}),
                                   Backend::int_local(5)));
    CHECK(derivative_pattern_check(NormalizedPointSpec(ProblemShape(3, 4), {1, 2}),
                                   Backend::int_local(2)));
    CHECK(derivative_pattern_check(NormalizedPointSpec(ProblemShape(3, 5), {1, 3}),
                                   Backend::poly_local(3)));
    CHECK(derivative_pattern_check(NormalizedPointSpec(ProblemShape(4, 6), {0, 1, 2}),
                                   Backend::int_local(5)));
}

TEST_CASE("triangular jacobian submatrix at normalized points") {
    CHECK(triangular_submatrix_check(NormalizedPointSpec(ProblemShape(2, 4), {1}),
                                     Backend::int_local(5)));
    CHECK(triangular_submatrix_check(NormalizedPointSpec(ProblemShape(3, 4), {1, 2}),
                                     Backend::int_local(2)));
    // wins = 3, det D = pi^4: the pinned submatrix determinant has valuation 12
    CHECK(triangular_submatrix_check(NormalizedPointSpec(ProblemShape(3, 5), {1, 3}),
                                     Backend::poly_local(3)));
    CHECK(triangular_submatrix_check(NormalizedPointSpec(ProblemShape(4, 6), {0, 1, 2}),
                                     Backend::int_local(5)));
}
