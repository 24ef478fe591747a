#ifndef OSCM_CROSSING_HPP
#define OSCM_CROSSING_HPP

#include "instance.hpp"
#include "types.hpp"

namespace oscm {

// entries[x*n + y] = crossings the pair contributes when x is drawn before y.
struct crossing_matrix {
    std::uint32_t n = 0;
    std::vector<crossing_t> entries;

    explicit crossing_matrix(std::uint32_t size = 0)
        : n(size), entries(static_cast<std::size_t>(size) * size, 0) {}

    crossing_t operator()(vertex_t x, vertex_t y) const {
        return entries[static_cast<std::size_t>(x) * n + y];
    }
    crossing_t &at(vertex_t x, vertex_t y) {
        return entries[static_cast<std::size_t>(x) * n + y];
    }
};

// Per-pair merge over the sorted neighbor lists; diagonal stays zero.
crossing_matrix compute_crossing_matrix(const bipartite_instance &inst);

// Total crossings of an order evaluated through the matrix: sum of C[p_i][p_j]
// over i < j.
crossing_t permutation_cost(const crossing_matrix &c, const permutation &p);

inline constexpr std::uint32_t default_brute_force_cap = 9;

// Evaluates every order of the free layer with count_crossings and returns
// the lexicographically smallest minimizer. The independent oracle for every
// other solver; refuses n_free above the cap.
solve_result brute_force_solve(const bipartite_instance &inst,
                               std::uint32_t cap = default_brute_force_cap);

}  // namespace oscm

#endif
