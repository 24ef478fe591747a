#ifndef OSCM_INTERVAL_SYSTEM_HPP
#define OSCM_INTERVAL_SYSTEM_HPP

#include "instance.hpp"
#include "types.hpp"

namespace oscm {

// Intervals [open_pos, close_pos] over the 2n' sweep positions (n' =
// vertices with at least one edge). A vertex opens at its smallest fixed
// neighbor's bucket and closes at its largest one; within a bucket, closers
// come first, degree-1 vertices next, openers last, so intervals that merely
// touch a fixed vertex never overlap.
struct interval_system {
    static constexpr std::uint32_t npos = 0xffffffffu;

    struct event {
        vertex_t v;
        bool open;
    };

    std::vector<event> events;
    std::vector<std::uint32_t> open_pos;   // per free vertex; npos when isolated
    std::vector<std::uint32_t> close_pos;  // per free vertex; npos when isolated
    std::vector<vertex_t> isolated;        // degree-0 vertices, ascending
};

interval_system build_interval_system(const bipartite_instance &inst);

// Active-set sizes along the sweep: widths[t] = |M| after event t.
struct width_profile {
    unsigned max_width = 0;
    std::vector<unsigned> widths;
    std::vector<std::uint64_t> histogram;  // histogram[w] = #positions with width w
};

width_profile characterize_instance(const bipartite_instance &inst);

}  // namespace oscm

#endif
