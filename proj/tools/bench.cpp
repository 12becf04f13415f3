// Timing comparison between the serial minor-enumeration kernel and the
// dispatched (OpenMP) one, plus a batch point-analysis throughput figure.
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "defectus/congruence.hpp"
#include "defectus/random.hpp"

using namespace defectus;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

Matrix random_matrix(const Backend& bk, int r, int c, std::mt19937_64& rng) {
    Matrix M(bk, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            // shift every valuation up by one so no minor is a unit: a unit
            // minor would trip the early exit and the kernel would go unmeasured
            Scalar s = random_ring_element(bk, rng);
            M.set(i, j, s * Scalar::uniformizer_power(bk, rng_range(rng, 1, 3)));
        }
    return M;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP: dispatched kernel runs serially\n\n";
#endif

    const Backend bk = Backend::int_local(5);
    std::mt19937_64 rng(2024);

    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12)
              << "serial s" << std::setw(14) << "dispatched s" << "\n";

    // minor enumeration on progressively larger grids
    for (int size = 8; size <= 10; ++size) {
        Matrix M = random_matrix(bk, size, size + 2, rng);
        const int k = std::min(size / 2, 5);

        auto t0 = clock_type::now();
        Valuation serial = minor_ideal_valuation_serial(M, k);
        const double serial_s = seconds_since(t0);

        t0 = clock_type::now();
        Valuation dispatched = minor_ideal_valuation(M, k);
        const double dispatched_s = seconds_since(t0);

        if (serial != dispatched) {
            std::cerr << "kernel mismatch on size " << size << "\n";
            return 1;
        }
        std::ostringstream label;
        label << "minor enumeration " << size << "x" << (size + 2) << " k=" << k;
        std::cout << std::left << std::setw(34) << label.str() << std::right << std::setw(12)
                  << std::fixed << std::setprecision(3) << serial_s << std::setw(14)
                  << dispatched_s << "\n";
    }

    // batch analysis throughput: sample + full report, fanned out by the
    // same parallel-for used by the sample command
    const ProblemShape shape(3, 6);
    const int count = 40;
    std::vector<Matrix> points;
    points.reserve(count);
    std::mt19937_64 seeder(7);
    for (int i = 0; i < count; ++i)
        points.push_back(sample_variety_point(shape, bk, std::nullopt, seeder()));

    auto t0 = clock_type::now();
    for (int i = 0; i < count; ++i) (void)analyze_point(points[i]);
    const double serial_s = seconds_since(t0);

    t0 = clock_type::now();
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) (void)analyze_point(points[i]);
    const double parallel_s = seconds_since(t0);

    std::ostringstream label;
    label << "batch analysis " << count << " points 3x6";
    std::cout << std::left << std::setw(34) << label.str() << std::right << std::setw(12)
              << std::fixed << std::setprecision(3) << serial_s << std::setw(14) << parallel_s
              << "\n";
    return 0;
}
