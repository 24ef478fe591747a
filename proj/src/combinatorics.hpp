#ifndef OSCM_COMBINATORICS_HPP
#define OSCM_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace oscm {

// C(n, k) for n <= 64; every such value fits in 64 bits. Zero when k > n.
std::uint64_t binomial(unsigned n, unsigned k);

// The k-th (1-based) n-bit mask with exactly i bits set, in increasing
// numeric order. O(n) via the binomial table; throws std::out_of_range when
// k is not in [1, C(n,i)].
std::uint64_t get_kth_state(unsigned n, unsigned i, std::uint64_t k);

// Successor of x among masks of equal popcount, in increasing numeric order
// (Gosper's hack). Caller bounds the iteration by the layer size.
inline std::uint64_t next_state(std::uint64_t x) {
    std::uint64_t low = x & (~x + 1);
    std::uint64_t carry = x + low;
    return carry | (((x ^ carry) >> 2) / low);
}

// Even split of `total` layer states over `workers`: the first total % workers
// workers take one extra state each. first_rank is 1-based and contiguous.
struct layer_work_plan {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> first_rank;
};

layer_work_plan make_layer_plan(std::uint64_t total, unsigned workers);

}  // namespace oscm

#endif
