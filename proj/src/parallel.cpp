#include "turan/parallel.hpp"

namespace turan {

namespace {
std::atomic<int> g_workers{static_cast<int>(std::max(1U, std::thread::hardware_concurrency()))};
}

int worker_count() { return g_workers.load(); }

void set_worker_count(int workers) { g_workers = std::max(1, workers); }

}  // namespace turan
