#include <random>

#include "defectus/linalg.hpp"
#include "defectus/random.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace defectus;

namespace {

// Random matrix whose entries carry varied valuations, to exercise pivoting.
Matrix random_valued_matrix(const Backend& bk, int r, int c, std::mt19937_64& rng) {
    Matrix M(bk, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Scalar s = random_ring_element(bk, rng);
            long e = rng_range(rng, 0, 2);
            M.set(i, j, s * Scalar::uniformizer_power(bk, e));
        }
    return M;
}

const Backend kBackends[] = {Backend::int_local(2), Backend::int_local(5),
                             Backend::poly_local(3)};

} // namespace

TEST_CASE("matrix container basics") {
    Backend bk = Backend::int_local(5);
    Matrix A = Matrix::from_ints(bk, {{1, 2, 3}, {4, 5, 6}});
    CHECK(A.rows() == 2);
    CHECK(A.cols() == 3);
    CHECK(A.at(1, 2) == Scalar::from_int(bk, 6));

    Matrix S = A.submatrix({1}, {0, 2});
    CHECK(S.rows() == 1);
    CHECK(S.at(0, 0) == Scalar::from_int(bk, 4));
    CHECK(S.at(0, 1) == Scalar::from_int(bk, 6));

    Matrix B = A.column_block(1, 2);
    CHECK(B.cols() == 2);
    CHECK(B.at(0, 0) == Scalar::from_int(bk, 2));
    CHECK(B.at(1, 1) == Scalar::from_int(bk, 6));

    CHECK(Matrix::identity(bk, 2) * A == A);
    Matrix C = A;
    C.swap_rows(0, 1);
    CHECK(C.at(0, 0) == Scalar::from_int(bk, 4));
    C.swap_cols(0, 2);
    CHECK(C.at(0, 0) == Scalar::from_int(bk, 6));
    C.add_row_multiple(1, 0, Scalar::from_int(bk, 10));
    CHECK(C.at(1, 0) == Scalar::from_int(bk, 63));
    C.scale_row(0, Scalar::from_int(bk, 2));
    CHECK(C.at(0, 0) == Scalar::from_int(bk, 12));

    expect_error(ErrorCode::bad_input, [&] { Matrix(bk, 0, 3); });
    expect_error(ErrorCode::bad_input, [&] { Matrix::from_ints(bk, {{1, 2}, {3}}); });
    expect_error(ErrorCode::backend_mismatch,
                 [&] { Matrix(bk, 1, 1).set(0, 0, Scalar::one(Backend::int_local(2))); });
    expect_error(ErrorCode::dimension_mismatch, [&] { (void)(A * A); });
    expect_error(ErrorCode::bad_input,
                 [&] { Matrix::from_scalars(bk, 2, 2, {Scalar::one(bk)}); });
}

TEST_CASE("determinant matches the permutation expansion") {
    for (const Backend& bk : kBackends) {
        std::mt19937_64 rng(17);
        for (int n = 1; n <= 5; ++n)
            for (int rep = 0; rep < 4; ++rep) {
                Matrix A = random_valued_matrix(bk, n, n, rng);
                CHECK(determinant(A) == oracles::permutation_determinant(A));
            }
    }
}

TEST_CASE("determinant handles pivoting and singularity") {
    Backend bk = Backend::int_local(5);
    CHECK(determinant(Matrix::from_ints(bk, {{0, 1}, {1, 0}})) == Scalar::from_int(bk, -1));
    CHECK(determinant(Matrix::from_ints(bk, {{2, 0, 1}, {1, 3, -1}, {0, 5, 2}})) ==
          Scalar::from_int(bk, 27));
    CHECK(determinant(Matrix::from_ints(bk, {{1, 2}, {2, 4}})).is_zero());
    CHECK(determinant(Matrix::from_ints(bk, {{0, 0}, {0, 0}})).is_zero());
    CHECK(determinant(Matrix::from_ints(bk, {{7}})) == Scalar::from_int(bk, 7));
    expect_error(ErrorCode::not_square,
                 [&] { determinant(Matrix::from_ints(bk, {{1, 2, 3}, {4, 5, 6}})); });
}

TEST_CASE("rank over the fraction field") {
    Backend bk = Backend::int_local(5);
    CHECK(rank(Matrix::from_ints(bk, {{0, 0}, {0, 0}})) == 0);
    CHECK(rank(Matrix::identity(bk, 3)) == 3);
    CHECK(rank(Matrix::from_ints(bk, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix::from_ints(bk, {{1, 2, 3}, {2, 4, 6}, {0, 0, 5}})) == 2);
    // valuations do not affect rank
    CHECK(rank(Matrix::from_ints(bk, {{5, 0}, {0, 25}})) == 2);

    for (const Backend& b : kBackends) {
        std::mt19937_64 rng(99);
        for (int rep = 0; rep < 6; ++rep) {
            Matrix A = random_valued_matrix(b, 3, 4, rng);
            CHECK(rank(A) == smith_form(A).rank);
        }
    }
}

TEST_CASE("smith form on a hand-checked matrix") {
    Backend bk = Backend::int_local(2);
    Matrix A = Matrix::from_ints(bk, {{2, 1}, {0, 2}});
    SmithDecomposition snf = smith_form(A);
    REQUIRE(snf.rank == 2);
    CHECK(snf.exponents == std::vector<long>{0, 2});
    CHECK(snf.left * A * snf.right == snf.diagonal(2, 2));
    CHECK(determinant(snf.left).is_unit());
    CHECK(determinant(snf.right).is_unit());
    CHECK(cokernel_torsion_length(A) == Valuation::of(2));
}

TEST_CASE("smith form invariants on random matrices") {
    for (const Backend& bk : kBackends) {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 5; ++rep) {
            const int r = 2 + static_cast<int>(rng() % 3);
            const int c = 2 + static_cast<int>(rng() % 4);
            Matrix A = random_valued_matrix(bk, r, c, rng);
            SmithDecomposition snf = smith_form(A);

            CHECK(snf.left * A * snf.right == snf.diagonal(r, c));
            CHECK(determinant(snf.left).is_unit());
            CHECK(determinant(snf.right).is_unit());
            for (size_t i = 0; i + 1 < snf.exponents.size(); ++i)
                CHECK(snf.exponents[i] <= snf.exponents[i + 1]);

            // partial sums of the exponents must equal the minor-ideal valuations
            long acc = 0;
            for (int k = 1; k <= snf.rank; ++k) {
                acc += snf.exponents[k - 1];
                CHECK(minor_ideal_valuation_serial(A, k) == Valuation::of(acc));
            }
            for (int k = snf.rank + 1; k <= std::min(r, c); ++k)
                CHECK(minor_ideal_valuation_serial(A, k).is_infinite());
        }
    }
}

TEST_CASE("smith form of a non-square matrix") {
    Backend bk = Backend::poly_local(3);
    Matrix A(bk, 2, 3);
    A.set(0, 0, Scalar::uniformizer_power(bk, 1));
    A.set(1, 1, Scalar::one(bk));
    SmithDecomposition snf = smith_form(A);
    CHECK(snf.rank == 2);
    CHECK(snf.exponents == std::vector<long>{0, 1});
    CHECK(snf.left * A * snf.right == snf.diagonal(2, 3));
}

TEST_CASE("cokernel torsion length") {
    Backend bk = Backend::int_local(5);
    CHECK(cokernel_torsion_length(Matrix::from_ints(bk, {{25}})) == Valuation::of(2));
    CHECK(cokernel_torsion_length(Matrix::from_ints(bk, {{5, 0}, {0, 5}})) == Valuation::of(2));
    CHECK(cokernel_torsion_length(Matrix::identity(bk, 4)) == Valuation::of(0));
    // the zero matrix has no invariant factors at all
    CHECK(cokernel_torsion_length(Matrix::from_ints(bk, {{0, 0}, {0, 0}})) == Valuation::of(0));
}

TEST_CASE("minor-ideal valuation agrees between serial and dispatched kernels") {
    for (const Backend& bk : kBackends) {
        std::mt19937_64 rng(23);
        Matrix A = random_valued_matrix(bk, 6, 7, rng);
        for (int k = 1; k <= 4; ++k)
            CHECK(minor_ideal_valuation(A, k) == minor_ideal_valuation_serial(A, k));
    }
}

TEST_CASE("minor-ideal valuation edge cases") {
    Backend bk = Backend::int_local(2);
    Matrix D = Matrix::from_ints(bk, {{2, 0}, {0, 4}});
    CHECK(minor_ideal_valuation(D, 1) == Valuation::of(1));
    CHECK(minor_ideal_valuation(D, 2) == Valuation::of(3));
    CHECK(minor_ideal_valuation(Matrix::identity(bk, 3), 3) == Valuation::of(0));
    CHECK(minor_ideal_valuation(Matrix::from_ints(bk, {{0, 0}, {0, 0}}), 1).is_infinite());
    expect_error(ErrorCode::bad_minor_size, [&] { minor_ideal_valuation(D, 0); });
    expect_error(ErrorCode::bad_minor_size, [&] { minor_ideal_valuation(D, 3); });
}

TEST_CASE("random unimodular matrices are unimodular") {
    for (const Backend& bk : kBackends)
        for (int n = 1; n <= 4; ++n)
            for (uint64_t seed = 1; seed <= 3; ++seed) {
                Matrix U = random_unimodular(bk, n, seed, 30);
                CHECK(determinant(U).is_unit());
            }
    // deterministic for a fixed seed
    Backend bk = Backend::int_local(5);
    CHECK(random_unimodular(bk, 3, 42, 30) == random_unimodular(bk, 3, 42, 30));
    CHECK(random_unimodular(bk, 3, 42, 30) != random_unimodular(bk, 3, 43, 30));
}

TEST_CASE("two-sided unimodular action preserves the smith exponents") {
    for (const Backend& bk : kBackends) {
        std::mt19937_64 rng(5);
        Matrix A = random_valued_matrix(bk, 3, 4, rng);
        Matrix U = random_unimodular(bk, 3, 11, 40);
        Matrix V = random_unimodular(bk, 4, 12, 40);
        Matrix B = gl_act(A, U, V);
        CHECK(smith_form(A).exponents == smith_form(B).exponents);
    }

    Backend bk = Backend::int_local(2);
    Matrix A = Matrix::from_ints(bk, {{1, 0}, {0, 1}});
    Matrix bad = Matrix::from_ints(bk, {{2, 0}, {0, 1}});
    expect_error(ErrorCode::not_unimodular, [&] { gl_act(A, bad, A); });
    expect_error(ErrorCode::not_unimodular, [&] { gl_act(A, A, bad); });
    expect_error(ErrorCode::dimension_mismatch,
                 [&] { gl_act(A, Matrix::identity(bk, 3), A); });
}

TEST_CASE("subset enumeration") {
    auto sets = combinations(4, 2);
    std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(sets == want);
    CHECK(combinations(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(combinations(3, 3).size() == 1);
    CHECK(combinations(2, 3).empty());
    CHECK(binomial(28, 4) == 20475);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
}
