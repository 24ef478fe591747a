#ifndef OSCM_BITMASK_SOLVER_HPP
#define OSCM_BITMASK_SOLVER_HPP

#include "f_oracle.hpp"
#include "types.hpp"

namespace oscm {

struct bitmask_options {
    dp_variant variant = dp_variant::mitm;
    unsigned threads = 1;
    std::size_t memory_budget = 0;  // 0 = default (75% of detected RAM)
    unsigned cap_slow = 30;
    unsigned cap_fast = 27;
    unsigned cap_mitm = 30;
    deadline limit;
};

// dp over all 2^n subsets of the free layer: dp[X] = min over v in X of
// dp[X \ v] + F(X \ v, v), filled layer by layer (ascending popcount).
std::vector<crossing_t> fill_dp_sequential(unsigned n, const f_oracle &f, deadline limit = {});

// Same table; within each layer the states are split into contiguous rank
// ranges, one per worker, with a barrier between layers. Entry values are
// identical to the sequential fill.
std::vector<crossing_t> fill_dp_parallel(unsigned n, const f_oracle &f, unsigned workers,
                                         deadline limit = {});

// Walks X down from the full set picking the lowest vertex that attains the
// recorded minimum.
permutation reconstruct_from_dp(const std::vector<crossing_t> &dp, unsigned n,
                                const f_oracle &f);

solve_result solve_bitmask(const bipartite_instance &inst, const bitmask_options &opts);

}  // namespace oscm

#endif
