#ifndef OSCM_GOLDEN_SOLVER_HPP
#define OSCM_GOLDEN_SOLVER_HPP

#include <optional>
#include <utility>

#include "crossing.hpp"
#include "precedence.hpp"
#include "types.hpp"

namespace oscm {

// Pairwise lower bound and the residual cost matrix C'_ij = C_ij -
// min(C_ij, C_ji); at least one direction of every pair is free.
struct residual_costs {
    unsigned n = 0;
    crossing_t lower_bound = 0;
    std::vector<crossing_t> residual;

    static residual_costs compute(const crossing_matrix &c);

    crossing_t cp(unsigned i, unsigned j) const {
        return residual[static_cast<std::size_t>(i) * n + j];
    }
};

// One node of the bounded search tree: the committed precedence matrix, the
// remaining budget, and a resume point for the choice-pair scan (pairs before
// the cursor stay decided or cost-neutral forever, so children inherit it).
struct search_instance {
    bit_matrix order_before;
    std::int64_t budget = 0;
    std::uint32_t cursor = 0;
};

struct best_solution {
    std::int64_t budget = std::numeric_limits<std::int64_t>::min();
    bit_matrix order_before;

    bool found() const { return budget >= 0; }
};

// First pair (i, j), i < j, that is undecided and has unequal directional
// residuals; advances the instance's cursor. Empty when every remaining
// undecided pair is cost-neutral.
std::optional<std::pair<unsigned, unsigned>> find_choice(search_instance &inst,
                                                         const residual_costs &costs);

// Copy of `inst` with a before b committed and the closure restored: every
// ancestor of a gets every descendant of b, each newly decided pair paying
// its residual out of the budget. Requires the pair to be undecided.
search_instance commit(const search_instance &inst, unsigned a, unsigned b,
                       const residual_costs &costs);

// Root node for budget k: zero-cost directions forced (C_ij = 0 < C_ji),
// pairs whose reverse residual exceeds k forced, then transitively closed.
// Empty optional when the forced orderings contradict each other.
std::optional<search_instance> build_root_instance(const crossing_matrix &c,
                                                   const residual_costs &costs,
                                                   std::uint64_t k);

// Depth-first exploration of commit(a,b)/commit(b,a); prunes exhausted
// budgets and anything that cannot beat the best leaf so far.
void search_sequential(search_instance root, const residual_costs &costs, best_solution &sol,
                       deadline limit = {});

// Shared-stack thread pool: workers pop a node, expand depth-first pushing
// one child and keeping the other, and stop when the stack is empty and
// nobody is expanding. The final budget matches the sequential search.
best_solution parallel_search(search_instance root, const residual_costs &costs,
                              unsigned workers, deadline limit = {});

struct golden_options {
    unsigned threads = 1;
    std::uint64_t max_k = std::uint64_t{1} << 20;
    deadline limit;
};

// k-doubling driver: k = 0, 1, 2, 4, ... until the search finds a leaf;
// throws not_found_error past max_k.
solve_result solve_golden(const bipartite_instance &inst, const golden_options &opts);

}  // namespace oscm

#endif
