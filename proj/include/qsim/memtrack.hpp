#pragma once

#include <cstddef>
#include <cstdint>

namespace qsim::memtrack {

// Per-rank accounting of amplitude storage, used by the distributed-memory
// audit. Disabled by default; when enabled, threads register themselves under
// a rank id and amplitude buffers report their allocations. Phases separate
// the execution working set from the gather/scatter staging at rank 0.
enum class Phase : int { execute = 0, gather = 1 };

void enable(int ranks);
void disable();
bool enabled();

void register_thread(int rank);
void unregister_thread();
void set_phase(Phase phase);

void on_alloc(std::size_t bytes);
void on_free(std::size_t bytes);

std::size_t peak_bytes(int rank, Phase phase);
void reset();

} // namespace qsim::memtrack
