#ifndef OSCM_SWEEP_SOLVER_HPP
#define OSCM_SWEEP_SOLVER_HPP

#include "instance.hpp"
#include "interval_system.hpp"
#include "types.hpp"

namespace oscm {

struct sweep_options {
    unsigned width_cap = 30;
    unsigned threads = 1;
    std::size_t memory_budget = 0;  // 0 = default (75% of detected RAM)
    deadline limit;
};

// Test probe: dp value of the closed set after each event, i.e. the optimal
// crossing count over exactly the vertices closed so far.
struct sweep_debug {
    std::vector<crossing_t> dp_closed_after_event;
};

// Interval-sweep dp: walk the 2n' positions keeping a window of active
// vertices; subset states live only over the window, closed vertices are
// folded into a per-vertex F accumulator. Fails with capacity_error when the
// window exceeds width_cap or the tables exceed the memory budget.
solve_result solve_sweep(const bipartite_instance &inst, const sweep_options &opts,
                         sweep_debug *debug = nullptr);

}  // namespace oscm

#endif
