#include <wallcross/parallel.hpp>

#include <cstdlib>
#include <string>

#include <omp.h>

namespace wallcross
{

std::optional<int> thread_cap_from_env()
{
    const char *raw = std::getenv("WALLCROSS_THREADS");
    if (raw == nullptr) {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const int n = std::stoi(raw, &used);
        if (used == std::string(raw).size() && n > 0) {
            return n;
        }
    } catch (const std::exception &) {
    }
    return std::nullopt;
}

void set_thread_cap(int threads)
{
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
}

int max_threads()
{
    return omp_get_max_threads();
}

} // namespace wallcross
