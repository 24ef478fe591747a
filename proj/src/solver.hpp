#ifndef OSCM_SOLVER_HPP
#define OSCM_SOLVER_HPP

#include <string>
#include <string_view>

#include "instance.hpp"
#include "types.hpp"

namespace oscm {

enum class algorithm_id {
    auto_select,
    slow_dp,
    fast_dp,
    mitm_dp,
    golden,
    subexpo,
    brute,
};

// CLI names: auto, slow-dp, fast-dp, mitm-dp, golden, subexpo, brute.
algorithm_id parse_algorithm(std::string_view name);
const char *algorithm_name(algorithm_id id);

struct solver_options {
    algorithm_id algo = algorithm_id::auto_select;
    unsigned threads = 1;
    std::uint64_t max_k = std::uint64_t{1} << 20;  // golden doubling cap
    unsigned width_cap = 30;                       // subexpo window cap
    std::size_t memory_budget = 0;                 // 0 = 75% of detected RAM
    std::uint32_t brute_cap = 9;
    double timeout_seconds = 0;                    // 0 = none
};

// auto rule: subexpo when the window fits the cap, else mitm-dp when n fits,
// else golden.
algorithm_id select_algorithm(const bipartite_instance &inst, const solver_options &opts);

solve_result solve(const bipartite_instance &inst, const solver_options &opts);

}  // namespace oscm

#endif
