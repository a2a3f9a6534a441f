// Serial kernels are the reference; the OpenMP round-robin variants must
// reproduce them on every shape, including the odd-dimension bye path.

#include <doctest.h>

#include <random>
#include <set>

#include "jacobi_detail.hpp"
#include "qcb/kernels.hpp"
#include "qcb/linalg.hpp"
#include "support.hpp"

using namespace qcb;

namespace {

double max_abs_delta(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("tournament schedule covers every pair exactly once per sweep") {
    for (std::size_t k : {2u, 4u, 5u, 9u, 16u}) {
        std::vector<std::size_t> slots = kernels::detail::tournament_slots(k);
        const std::size_t cnt = slots.size();
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t round = 0; round + 1 < cnt; ++round) {
            std::set<std::size_t> touched;
            for (std::size_t i = 0; i < cnt / 2; ++i) {
                std::size_t p = slots[i], q = slots[cnt - 1 - i];
                if (p == kernels::detail::npos || q == kernels::detail::npos) continue;
                if (p > q) std::swap(p, q);
                CHECK(touched.insert(p).second);  // disjointness within the round
                CHECK(touched.insert(q).second);
                CHECK(seen.emplace(p, q).second);
            }
            kernels::detail::advance_tournament(slots);
        }
        CHECK(seen.size() == k * (k - 1) / 2);
    }
}

TEST_CASE("parallel SVD matches the serial reference across shapes") {
    std::mt19937_64 rng(11);
    for (auto [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {5, 5}, {12, 7}, {8, 13}, {33, 20}, {64, 64}, {81, 81}, {3, 100}}) {
        const ComplexMatrix m = test::random_matrix(r, c, rng);
        const std::vector<double> s = kernels::jacobi_svd_serial(m);
        const std::vector<double> p = kernels::jacobi_svd_parallel(m);
        CHECK(max_abs_delta(s, p) <= 1e-10 * std::max(1.0, s.front()));
    }
}

TEST_CASE("parallel Hermitian eigensolver matches the serial reference") {
    std::mt19937_64 rng(12);
    for (std::size_t n : {2u, 3u, 9u, 17u, 40u, 65u, 81u}) {
        const ComplexMatrix h = test::random_hermitian(n, rng);
        const std::vector<double> s = kernels::jacobi_eigh_serial(h);
        const std::vector<double> p = kernels::jacobi_eigh_parallel(h);
        CHECK(max_abs_delta(s, p) <= 1e-10 * std::max(1.0, std::abs(s.front())));
    }
}

TEST_CASE("matmul and gram parallel variants match the serial reference") {
    std::mt19937_64 rng(13);
    const ComplexMatrix a = test::random_matrix(37, 21, rng);
    const ComplexMatrix b = test::random_matrix(21, 45, rng);
    CHECK(max_abs_diff(kernels::matmul_serial(a, b), kernels::matmul_parallel(a, b)) <= 1e-13);
    CHECK(max_abs_diff(kernels::gram_serial(a), kernels::gram_parallel(a)) <= 1e-13);
}

TEST_CASE("gram agrees with explicit adjoint product") {
    std::mt19937_64 rng(14);
    const ComplexMatrix m = test::random_matrix(9, 6, rng);
    const ComplexMatrix direct = matmul(adjoint(m), m, Exec::serial);
    CHECK(max_abs_diff(gram(m, Exec::serial), direct) <= 1e-12);
    CHECK(max_abs_diff(gram(m, Exec::parallel), direct) <= 1e-12);
}

TEST_CASE("SVD kernels handle degenerate inputs") {
    const ComplexMatrix zero(4, 3);
    for (double sv : kernels::jacobi_svd_serial(zero)) CHECK(sv == 0.0);
    for (double sv : kernels::jacobi_svd_parallel(zero)) CHECK(sv == 0.0);

    const ComplexMatrix id = ComplexMatrix::identity(5);
    for (double sv : kernels::jacobi_svd_parallel(id)) CHECK(sv == doctest::Approx(1.0));

    ComplexMatrix col(6, 1);  // single column: no pairs to rotate
    col(0, 0) = 3.0;
    col(3, 0) = 4.0;
    CHECK(kernels::jacobi_svd_serial(col)[0] == doctest::Approx(5.0));
}

TEST_CASE("explicit Exec policies dispatch to the requested kernel") {
    std::mt19937_64 rng(15);
    const ComplexMatrix m = test::random_matrix(10, 10, rng);
    const std::vector<double> s = singular_values(m, Exec::serial);
    const std::vector<double> p = singular_values(m, Exec::parallel);
    CHECK(max_abs_delta(s, p) <= 1e-10 * s.front());
}
