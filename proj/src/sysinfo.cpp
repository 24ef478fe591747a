#include "sysinfo.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include <unistd.h>

namespace oscm {

std::size_t total_physical_memory() {
#if defined(_SC_PHYS_PAGES) && defined(_SC_PAGESIZE)
    long pages = ::sysconf(_SC_PHYS_PAGES);
    long page_size = ::sysconf(_SC_PAGESIZE);
    if (pages > 0 && page_size > 0) {
        return static_cast<std::size_t>(pages) * static_cast<std::size_t>(page_size);
    }
#endif
    return 0;
}

std::size_t default_memory_budget() {
    std::size_t total = total_physical_memory();
    if (total == 0) {
        return std::size_t{1} << 30;
    }
    return total / 4 * 3;
}

unsigned physical_core_count() {
    std::ifstream cpuinfo("/proc/cpuinfo");
    if (cpuinfo) {
        std::set<std::pair<int, int>> cores;
        int physical_id = -1;
        int core_id = -1;
        std::string line;
        while (std::getline(cpuinfo, line)) {
            if (line.empty()) {
                if (physical_id >= 0 && core_id >= 0) {
                    cores.emplace(physical_id, core_id);
                }
                physical_id = core_id = -1;
                continue;
            }
            auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            std::string key = line.substr(0, line.find('\t'));
            if (key.rfind("physical id", 0) == 0) {
                physical_id = std::stoi(line.substr(colon + 1));
            } else if (key.rfind("core id", 0) == 0) {
                core_id = std::stoi(line.substr(colon + 1));
            }
        }
        if (physical_id >= 0 && core_id >= 0) {
            cores.emplace(physical_id, core_id);
        }
        if (!cores.empty()) {
            return static_cast<unsigned>(cores.size());
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace oscm
