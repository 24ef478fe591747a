#ifndef OSCM_SYSINFO_HPP
#define OSCM_SYSINFO_HPP

#include <cstddef>

namespace oscm {

// Detected physical RAM in bytes (0 if detection fails).
std::size_t total_physical_memory();

// Default solver memory budget: 75% of detected RAM, with a 1 GiB floor
// when detection fails.
std::size_t default_memory_budget();

// Physical core count (hyperthreads collapsed); falls back to the logical
// count when /proc/cpuinfo is unavailable.
unsigned physical_core_count();

}  // namespace oscm

#endif
