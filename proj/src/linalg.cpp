#include "defectus/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "defectus/random.hpp"

namespace defectus {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

Scalar determinant(const Matrix& A) {
    if (A.rows() != A.cols())
        throw Error(ErrorCode::not_square, "determinant of a non-square matrix");
    const Backend& bk = A.backend();
    const int n = A.rows();
    Matrix M = A;
    Scalar prev = Scalar::one(bk);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Scalar::zero(bk);
            M.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Scalar num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                M.set(i, j, num.divide_exact(prev));
            }
            M.set(i, k, Scalar::zero(bk));
        }
        prev = M.at(k, k);
    }
    Scalar det = M.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

int rank(const Matrix& A) {
    const Backend& bk = A.backend();
    Matrix M = A;
    const int r = M.rows(), c = M.cols();
    Scalar prev = Scalar::one(bk);
    int s = 0;
    while (s < std::min(r, c)) {
        int pi = -1, pj = -1;
        for (int i = s; i < r && pi < 0; ++i)
            for (int j = s; j < c; ++j)
                if (!M.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        M.swap_rows(s, pi);
        M.swap_cols(s, pj);
        for (int i = s + 1; i < r; ++i) {
            for (int j = s + 1; j < c; ++j) {
                Scalar num = M.at(i, j) * M.at(s, s) - M.at(i, s) * M.at(s, j);
                M.set(i, j, num.divide_exact(prev));
            }
            M.set(i, s, Scalar::zero(bk));
        }
        prev = M.at(s, s);
        ++s;
    }
    return s;
}

namespace {

void check_minor_size(const Matrix& M, int k) {
    if (k < 1 || k > std::min(M.rows(), M.cols()))
        throw Error(ErrorCode::bad_minor_size,
                    "minor size " + std::to_string(k) + " out of range for " +
                        std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

Valuation minor_valuation_parallel(const Matrix& M, int k) {
    const auto rsets = combinations(M.rows(), k);
    const auto csets = combinations(M.cols(), k);
    const long nr = static_cast<long>(rsets.size());
    const long nc = static_cast<long>(csets.size());
    long best = -1; // -1 encodes infinity
    std::atomic<bool> zero_found{false};
#pragma omp parallel
    {
        long local = -1;
#pragma omp for collapse(2) schedule(dynamic, 8)
        for (long a = 0; a < nr; ++a) {
            for (long b = 0; b < nc; ++b) {
                if (zero_found.load(std::memory_order_relaxed)) continue;
                Valuation v = determinant(M.submatrix(rsets[a], csets[b])).valuation();
                if (v.is_infinite()) continue;
                const long vv = v.value();
                if (local < 0 || vv < local) local = vv;
                if (vv == 0) zero_found.store(true, std::memory_order_relaxed);
            }
        }
#pragma omp critical
        {
            if (local >= 0 && (best < 0 || local < best)) best = local;
        }
    }
    return best < 0 ? Valuation::infinity() : Valuation::of(best);
}

} // namespace

Valuation minor_ideal_valuation_serial(const Matrix& M, int k) {
    check_minor_size(M, k);
    const auto rsets = combinations(M.rows(), k);
    const auto csets = combinations(M.cols(), k);
    Valuation best = Valuation::infinity();
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            best = min(best, determinant(M.submatrix(rs, cs)).valuation());
            if (best == Valuation::of(0)) return best;
        }
    return best;
}

Valuation minor_ideal_valuation(const Matrix& M, int k) {
    check_minor_size(M, k);
#ifdef _OPENMP
    const unsigned long long pairs = binomial(M.rows(), k) * binomial(M.cols(), k);
    if (pairs >= 256 && omp_get_max_threads() > 1) return minor_valuation_parallel(M, k);
#endif
    return minor_ideal_valuation_serial(M, k);
}

SmithDecomposition smith_form(const Matrix& A) {
    const Backend& bk = A.backend();
    const int r = A.rows(), c = A.cols();
    Matrix D = A;
    Matrix L = Matrix::identity(bk, r);
    Matrix R = Matrix::identity(bk, c);

    int s = 0;
    while (s < std::min(r, c)) {
        // pivot: minimal valuation over the trailing block, ties row-major
        int pi = -1, pj = -1;
        Valuation best = Valuation::infinity();
        for (int i = s; i < r; ++i)
            for (int j = s; j < c; ++j) {
                Valuation v = D.at(i, j).valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        D.swap_rows(s, pi);
        L.swap_rows(s, pi);
        D.swap_cols(s, pj);
        R.swap_cols(s, pj);

        const Scalar pivot = D.at(s, s);
        for (int i = s + 1; i < r; ++i) {
            if (D.at(i, s).is_zero()) continue;
            Scalar f = -(D.at(i, s).divide_exact(pivot));
            D.add_row_multiple(i, s, f);
            L.add_row_multiple(i, s, f);
        }
        for (int j = s + 1; j < c; ++j) {
            if (D.at(s, j).is_zero()) continue;
            Scalar g = -(D.at(s, j).divide_exact(pivot));
            D.add_col_multiple(j, s, g);
            R.add_col_multiple(j, s, g);
        }
        ++s;
    }

    // scale each pivot to an exact uniformizer power
    std::vector<long> exps(s);
    for (int i = 0; i < s; ++i) {
        exps[i] = D.at(i, i).valuation().value();
        Scalar unit = D.at(i, i).divide_exact(Scalar::uniformizer_power(bk, exps[i]));
        Scalar inv = unit.unit_inverse();
        D.scale_row(i, inv);
        L.scale_row(i, inv);
    }

    // min-valuation pivoting already orders the exponents; normalize anyway
    for (int i = 0; i + 1 < s; ++i) {
        int mi = i;
        for (int j = i + 1; j < s; ++j)
            if (exps[j] < exps[mi]) mi = j;
        if (mi != i) {
            std::swap(exps[i], exps[mi]);
            D.swap_rows(i, mi);
            D.swap_cols(i, mi);
            L.swap_rows(i, mi);
            R.swap_cols(i, mi);
        }
    }

    return SmithDecomposition{std::move(exps), s, std::move(L), std::move(R)};
}

Matrix SmithDecomposition::diagonal(int rows, int cols) const {
    const Backend& bk = left.backend();
    Matrix D(bk, rows, cols);
    for (size_t i = 0; i < exponents.size(); ++i)
        D.set(static_cast<int>(i), static_cast<int>(i),
              Scalar::uniformizer_power(bk, exponents[i]));
    return D;
}

Valuation cokernel_torsion_length(const Matrix& M) {
    const auto snf = smith_form(M);
    long sum = 0;
    for (long e : snf.exponents) sum += e;
    return Valuation::of(sum);
}

Matrix random_unimodular(const Backend& bk, int size, uint64_t seed, long steps) {
    Matrix U = Matrix::identity(bk, size);
    std::mt19937_64 rng(seed);
    for (long s = 0; s < steps; ++s) {
        const int op = size == 1 ? 1 : static_cast<int>(rng() % 3);
        switch (op) {
            case 0: {
                int a = static_cast<int>(rng() % size);
                int b = static_cast<int>(rng() % size);
                if (a != b) U.swap_rows(a, b);
                break;
            }
            case 1: {
                int i = static_cast<int>(rng() % size);
                U.scale_row(i, random_unit(bk, rng));
                break;
            }
            default: {
                int i = static_cast<int>(rng() % size);
                int j = static_cast<int>(rng() % size);
                if (i != j) U.add_row_multiple(i, j, random_ring_element(bk, rng));
                break;
            }
        }
    }
    return U;
}

Matrix gl_act(const Matrix& a, const Matrix& U, const Matrix& V) {
    if (U.rows() != U.cols() || U.rows() != a.rows())
        throw Error(ErrorCode::dimension_mismatch, "left factor must be rows x rows");
    if (V.rows() != V.cols() || V.rows() != a.cols())
        throw Error(ErrorCode::dimension_mismatch, "right factor must be cols x cols");
    if (!determinant(U).is_unit())
        throw Error(ErrorCode::not_unimodular, "left factor determinant is not a unit");
    if (!determinant(V).is_unit())
        throw Error(ErrorCode::not_unimodular, "right factor determinant is not a unit");
    return U * a * V;
}

} // namespace defectus
