#include <doctest.h>

#include <omp.h>

#include <wallcross/parallel.hpp>
#include <wallcross/pyramid_kernels.hpp>
#include <wallcross/series_kernels.hpp>

#include "support.hpp"

using namespace wallcross;

namespace
{

// Forces a team larger than the machine so the parallel paths really split.
struct ThreadScope {
    int saved = omp_get_max_threads();
    explicit ThreadScope(int n) { set_thread_cap(n); }
    ~ThreadScope() { set_thread_cap(saved); }
};

} // namespace

TEST_CASE("mul_parallel agrees with mul_serial")
{
    for (const int threads : {1, 3, 8}) {
        ThreadScope scope(threads);
        for (int trial = 0; trial < 150; ++trial) {
            const TruncationBox box = testsupport::random_box(12);
            const BiSeries a = testsupport::random_series(box, 0.3);
            const BiSeries b = testsupport::random_series(box, 0.3);
            CHECK(kernels::mul_parallel(a, b) == kernels::mul_serial(a, b));
        }
    }
    CHECK_THROWS_AS(kernels::mul_parallel(BiSeries({1, 1}), BiSeries({1, 2})), box_mismatch);
    CHECK_THROWS_AS(kernels::mul_serial(BiSeries({1, 1}), BiSeries({1, 2})), box_mismatch);
}

TEST_CASE("count_ideals_parallel agrees with count_ideals_serial")
{
    const std::vector<std::pair<ErcSpec, EnumerationLimits>> cases = {
        {ErcSpec(ErcKind::infinite_pyramid, 1), {{8, 8}, 9}},
        {ErcSpec(ErcKind::infinite_pyramid, 2), {{5, 6}, std::nullopt}},
        {ErcSpec(ErcKind::infinite_pyramid, 3), {{6, 6}, 8}},
        {ErcSpec(ErcKind::finite_type, 3), {{4, 10}, std::nullopt}},
        {ErcSpec(ErcKind::finite_type, 4), {{10, 20}, std::nullopt}},
        {ErcSpec(ErcKind::finite_type, 2), {{0, 0}, std::nullopt}},
    };
    for (const int threads : {1, 4}) {
        ThreadScope scope(threads);
        for (const auto &[spec, limits] : cases) {
            CAPTURE(to_label(spec));
            const auto poset = kernels::build_poset(spec, limits);
            const auto serial = kernels::count_ideals_serial(poset, limits);
            const auto parallel = kernels::count_ideals_parallel(poset, limits);
            CHECK(serial.counts == parallel.counts);
            CHECK(parallel.visited == parallel.total());
        }
    }
}

TEST_CASE("thread cap from the environment")
{
    setenv("WALLCROSS_THREADS", "3", 1);
    CHECK(thread_cap_from_env() == 3);
    setenv("WALLCROSS_THREADS", "zero", 1);
    CHECK(thread_cap_from_env() == std::nullopt);
    unsetenv("WALLCROSS_THREADS");
    CHECK(thread_cap_from_env() == std::nullopt);
}
