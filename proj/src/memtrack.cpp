#include "qsim/memtrack.hpp"

#include <atomic>
#include <mutex>
#include <vector>

namespace qsim::memtrack {

namespace {

struct RankUsage {
    std::size_t current[2] = {0, 0};
    std::size_t peak[2] = {0, 0};
};

std::atomic<bool> g_enabled{false};
std::mutex g_mutex;
std::vector<RankUsage> g_usage;

thread_local int t_rank = -1;
thread_local Phase t_phase = Phase::execute;

} // namespace

void enable(int ranks) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_usage.assign(static_cast<std::size_t>(ranks), RankUsage{});
    g_enabled.store(true, std::memory_order_release);
}

void disable() {
    g_enabled.store(false, std::memory_order_release);
}

bool enabled() { return g_enabled.load(std::memory_order_acquire); }

void register_thread(int rank) {
    t_rank = rank;
    t_phase = Phase::execute;
}

void unregister_thread() { t_rank = -1; }

void set_phase(Phase phase) { t_phase = phase; }

void on_alloc(std::size_t bytes) {
    if (!enabled() || t_rank < 0)
        return;
    std::lock_guard<std::mutex> lock(g_mutex);
    if (t_rank >= static_cast<int>(g_usage.size()))
        return;
    auto& u = g_usage[t_rank];
    const int p = static_cast<int>(t_phase);
    u.current[p] += bytes;
    u.peak[p] = std::max(u.peak[p], u.current[p]);
}

void on_free(std::size_t bytes) {
    if (!enabled() || t_rank < 0)
        return;
    std::lock_guard<std::mutex> lock(g_mutex);
    if (t_rank >= static_cast<int>(g_usage.size()))
        return;
    auto& u = g_usage[t_rank];
    const int p = static_cast<int>(t_phase);
    u.current[p] -= std::min(u.current[p], bytes);
}

std::size_t peak_bytes(int rank, Phase phase) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (rank < 0 || rank >= static_cast<int>(g_usage.size()))
        return 0;
    return g_usage[rank].peak[static_cast<int>(phase)];
}

void reset() {
    std::lock_guard<std::mutex> lock(g_mutex);
    for (auto& u : g_usage)
        u = RankUsage{};
}

} // namespace qsim::memtrack
