#include "qsch/parallel.hpp"

namespace qsch {

namespace {
std::atomic<int> g_jobs{0};
}

void set_default_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int default_jobs() {
    int j = g_jobs.load();
    if (j > 0) return j;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace qsch
