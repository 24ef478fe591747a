#include "crossing.hpp"

#include <algorithm>
#include <numeric>

namespace oscm {

crossing_matrix compute_crossing_matrix(const bipartite_instance &inst) {
    const std::uint32_t n = inst.n_free();
    crossing_matrix c(n);
    for (vertex_t x = 0; x < n; ++x) {
        const auto &nx = inst.adjacency[x];
        if (nx.empty()) continue;
        for (vertex_t y = x + 1; y < n; ++y) {
            const auto &ny = inst.adjacency[y];
            if (ny.empty()) continue;
            // c_xy counts pairs (b,d) in N_x x N_y with b > d; shared fixed
            // endpoints cross in neither direction.
            crossing_t c_xy = 0;
            crossing_t common = 0;
            std::size_t j = 0;
            for (vertex_t b : nx) {
                while (j < ny.size() && ny[j] < b) ++j;
                c_xy += j;
                if (j < ny.size() && ny[j] == b) ++common;
            }
            crossing_t total = static_cast<crossing_t>(nx.size()) * ny.size();
            c.at(x, y) = c_xy;
            c.at(y, x) = total - common - c_xy;
        }
    }
    return c;
}

crossing_t permutation_cost(const crossing_matrix &c, const permutation &p) {
    crossing_t total = 0;
    for (std::size_t i = 0; i < p.order.size(); ++i) {
        for (std::size_t j = i + 1; j < p.order.size(); ++j) {
            total += c(p.order[i], p.order[j]);
        }
    }
    return total;
}

solve_result brute_force_solve(const bipartite_instance &inst, std::uint32_t cap) {
    const std::uint32_t n = inst.n_free();
    if (n > cap) {
        throw capacity_error("brute force handles n_free <= " + std::to_string(cap) +
                             ", instance has " + std::to_string(n));
    }
    std::vector<vertex_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<vertex_t> best_order = order;
    crossing_t best = count_crossings_order(inst, order);
    // next_permutation walks orders lexicographically, so keeping strict
    // improvements only leaves the lexicographically smallest optimum.
    while (std::next_permutation(order.begin(), order.end())) {
        crossing_t c = count_crossings_order(inst, order);
        if (c < best) {
            best = c;
            best_order = order;
        }
    }
    return {permutation::from_order(std::move(best_order)), best};
}

}  // namespace oscm
