#include "golden_solver.hpp"

#include <bit>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace oscm {

residual_costs residual_costs::compute(const crossing_matrix &c) {
    residual_costs r;
    r.n = c.n;
    r.residual.assign(static_cast<std::size_t>(c.n) * c.n, 0);
    for (unsigned i = 0; i < c.n; ++i) {
        for (unsigned j = i + 1; j < c.n; ++j) {
            crossing_t low = std::min(c(i, j), c(j, i));
            r.lower_bound += low;
            r.residual[static_cast<std::size_t>(i) * c.n + j] = c(i, j) - low;
            r.residual[static_cast<std::size_t>(j) * c.n + i] = c(j, i) - low;
        }
    }
    return r;
}

namespace {

// Budget charge that cannot underflow; once exhausted it pins to a floor
// that stays below every feasible budget.
void charge(std::int64_t &budget, crossing_t cost) {
    constexpr std::int64_t floor_v = std::numeric_limits<std::int64_t>::min() / 2;
    if (budget <= floor_v) return;
    std::uint64_t room = static_cast<std::uint64_t>(budget - floor_v);
    if (cost >= room) {
        budget = floor_v;
    } else {
        budget -= static_cast<std::int64_t>(cost);
    }
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> find_choice(search_instance &inst,
                                                         const residual_costs &costs) {
    const unsigned n = costs.n;
    unsigned i = inst.cursor / (n == 0 ? 1 : n);
    unsigned j = inst.cursor % (n == 0 ? 1 : n);
    for (; i < n; ++i, j = 0) {
        if (j <= i) j = i + 1;
        for (; j < n; ++j) {
            if (costs.cp(i, j) == costs.cp(j, i)) continue;  // cost-neutral
            if (inst.order_before.get(i, j) || inst.order_before.get(j, i)) continue;
            inst.cursor = i * n + j;
            return std::make_pair(i, j);
        }
    }
    inst.cursor = n * n;
    return std::nullopt;
}

search_instance commit(const search_instance &inst, unsigned a, unsigned b,
                       const residual_costs &costs) {
    search_instance out = inst;
    const unsigned n = costs.n;
    const unsigned words = out.order_before.words_per_row();

    // Descendants of b, b included; no loop iteration rewrites row b, since b
    // cannot precede a here.
    std::vector<std::uint64_t> desc(out.order_before.row(b), out.order_before.row(b) + words);
    desc[b >> 6] |= std::uint64_t{1} << (b & 63);

    for (unsigned i = 0; i < n; ++i) {
        if (i != a && !out.order_before.get(i, a)) continue;
        std::uint64_t *row = out.order_before.row(i);
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t added = desc[w] & ~row[w];
            while (added != 0) {
                unsigned j = (w << 6) + static_cast<unsigned>(std::countr_zero(added));
                added &= added - 1;
                charge(out.budget, costs.cp(i, j));
            }
            row[w] |= desc[w];
        }
    }
    return out;
}

std::optional<search_instance> build_root_instance(const crossing_matrix &c,
                                                   const residual_costs &costs,
                                                   std::uint64_t k) {
    const unsigned n = c.n;
    search_instance root;
    root.order_before = bit_matrix(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c(i, j) == 0 && c(j, i) > 0) root.order_before.set(i, j);
            if (costs.cp(j, i) > k) root.order_before.set(i, j);
        }
    }
    if (!transitive_closure(root.order_before)) {
        return std::nullopt;  // forced orderings contradict: no solution at this k
    }
    root.budget = static_cast<std::int64_t>(k);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i != j && root.order_before.get(i, j)) {
                charge(root.budget, costs.cp(i, j));
            }
        }
    }
    return root;
}

void search_sequential(search_instance root, const residual_costs &costs, best_solution &sol,
                       deadline limit) {
    std::vector<search_instance> stack;
    stack.push_back(std::move(root));
    std::uint64_t steps = 0;

    while (!stack.empty()) {
        search_instance inst = std::move(stack.back());
        stack.pop_back();
        for (;;) {
            if (limit.enabled() && (++steps & 1023) == 0 && limit.expired()) {
                throw timeout_error("golden-ratio search exceeded its deadline");
            }
            if (inst.budget < 0) break;
            if (sol.found() && inst.budget <= sol.budget) break;
            auto choice = find_choice(inst, costs);
            if (!choice) {
                if (inst.budget > sol.budget) {
                    sol.budget = inst.budget;
                    sol.order_before = inst.order_before;
                }
                break;
            }
            auto [a, b] = *choice;
            stack.push_back(commit(inst, b, a, costs));
            inst = commit(inst, a, b, costs);
        }
    }
}

namespace {

struct pool_state {
    std::mutex m;
    std::condition_variable cv;
    std::vector<search_instance> stack;
    unsigned active = 0;
    best_solution sol;
    std::atomic<std::int64_t> best_budget{std::numeric_limits<std::int64_t>::min()};
    std::atomic<bool> aborted{false};
};

void pool_worker(pool_state &st, const residual_costs &costs, const deadline &limit) {
    std::unique_lock lk(st.m);
    for (;;) {
        st.cv.wait(lk, [&] {
            return !st.stack.empty() || st.active == 0 || st.aborted.load(std::memory_order_relaxed);
        });
        if (st.aborted.load(std::memory_order_relaxed) || st.stack.empty()) {
            st.cv.notify_all();
            return;
        }
        search_instance inst = std::move(st.stack.back());
        st.stack.pop_back();
        ++st.active;
        lk.unlock();

        std::uint64_t steps = 0;
        for (;;) {
            if (limit.enabled() && (++steps & 255) == 0 && limit.expired()) {
                st.aborted.store(true, std::memory_order_relaxed);
                break;
            }
            if (inst.budget < 0) break;
            std::int64_t bb = st.best_budget.load(std::memory_order_relaxed);
            if (bb >= 0 && inst.budget <= bb) break;
            auto choice = find_choice(inst, costs);
            if (!choice) {
                std::lock_guard guard(st.m);
                if (inst.budget > st.sol.budget) {
                    st.sol.budget = inst.budget;
                    st.sol.order_before = inst.order_before;
                    st.best_budget.store(inst.budget, std::memory_order_relaxed);
                }
                break;
            }
            auto [a, b] = *choice;
            search_instance sibling = commit(inst, b, a, costs);
            search_instance next = commit(inst, a, b, costs);
            {
                std::lock_guard guard(st.m);
                st.stack.push_back(std::move(sibling));
            }
            st.cv.notify_one();
            inst = std::move(next);
        }

        lk.lock();
        --st.active;
        if (st.aborted.load(std::memory_order_relaxed) ||
            (st.stack.empty() && st.active == 0)) {
            st.cv.notify_all();
        }
    }
}

}  // namespace

best_solution parallel_search(search_instance root, const residual_costs &costs,
                              unsigned workers, deadline limit) {
    if (workers == 0) workers = 1;
    pool_state st;
    st.stack.push_back(std::move(root));

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned j = 0; j < workers; ++j) {
        pool.emplace_back(pool_worker, std::ref(st), std::cref(costs), std::cref(limit));
    }
    for (auto &t : pool) t.join();

    if (st.aborted.load(std::memory_order_relaxed)) {
        throw timeout_error("golden-ratio search exceeded its deadline");
    }
    return std::move(st.sol);
}

solve_result solve_golden(const bipartite_instance &inst, const golden_options &opts) {
    crossing_matrix c = compute_crossing_matrix(inst);
    residual_costs costs = residual_costs::compute(c);

    std::uint64_t k = 0;
    for (;;) {
        if (k > opts.max_k || k > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4)) {
            throw not_found_error("no solution within max-k " + std::to_string(opts.max_k));
        }
        auto root = build_root_instance(c, costs, k);
        if (root) {
            best_solution sol;
            if (opts.threads <= 1) {
                search_sequential(std::move(*root), costs, sol, opts.limit);
            } else {
                sol = parallel_search(std::move(*root), costs, opts.threads, opts.limit);
            }
            if (sol.found()) {
                auto order = topological_order(sol.order_before);
                solve_result result;
                result.crossings =
                    costs.lower_bound + (k - static_cast<std::uint64_t>(sol.budget));
                result.perm = permutation::from_order(std::move(*order));
                return result;
            }
        }
        k = (k == 0) ? 1 : k * 2;
    }
}

}  // namespace oscm
