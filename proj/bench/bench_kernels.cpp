// Timing comparison of the serial reference kernels against the OpenMP
// variants, with an agreement column so a speedup never hides a wrong
// answer. Sizes can be overridden on the command line.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include <omp.h>

#include "qcb/kernels.hpp"
#include "qcb/matrix.hpp"

using namespace qcb;
using Clock = std::chrono::steady_clock;

namespace {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Complex& z : m.flat()) z = Complex(gauss(rng), gauss(rng));
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double max_delta(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

void row(const char* kernel, std::size_t n, double serial_ms, double parallel_ms, double delta) {
    std::printf("%-12s %6zu %12.2f %12.2f %9.2fx %12.2e\n", kernel, n, serial_ms, parallel_ms,
                serial_ms / parallel_ms, delta);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes = {64, 128, 256, 384};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoul(argv[i], nullptr, 10));
    }
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-12s %6s %12s %12s %9s %12s\n", "kernel", "n", "serial ms", "parallel ms",
                "speedup", "max |delta|");

    std::mt19937_64 rng(7);
    for (std::size_t n : sizes) {
        const ComplexMatrix m = random_matrix(n, n, rng);
        const ComplexMatrix h = random_hermitian(n, rng);

        std::vector<double> sv_s, sv_p, ev_s, ev_p;
        const double svd_serial = time_ms([&] { sv_s = kernels::jacobi_svd_serial(m); });
        const double svd_parallel = time_ms([&] { sv_p = kernels::jacobi_svd_parallel(m); });
        row("jacobi_svd", n, svd_serial, svd_parallel, max_delta(sv_s, sv_p));

        const double eigh_serial = time_ms([&] { ev_s = kernels::jacobi_eigh_serial(h); });
        const double eigh_parallel = time_ms([&] { ev_p = kernels::jacobi_eigh_parallel(h); });
        row("jacobi_eigh", n, eigh_serial, eigh_parallel, max_delta(ev_s, ev_p));

        ComplexMatrix g_s, g_p;
        const double gram_serial = time_ms([&] { g_s = kernels::gram_serial(m); });
        const double gram_parallel = time_ms([&] { g_p = kernels::gram_parallel(m); });
        row("gram", n, gram_serial, gram_parallel, max_abs_diff(g_s, g_p));

        ComplexMatrix mm_s, mm_p;
        const double mm_serial = time_ms([&] { mm_s = kernels::matmul_serial(m, h); });
        const double mm_parallel = time_ms([&] { mm_p = kernels::matmul_parallel(m, h); });
        row("matmul", n, mm_serial, mm_parallel, max_abs_diff(mm_s, mm_p));
    }
    return 0;
}
