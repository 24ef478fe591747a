#include "bitmask_solver.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <thread>

#include "combinatorics.hpp"
#include "sysinfo.hpp"

namespace oscm {

namespace {

constexpr std::uint64_t deadline_stride = 1 << 14;

// dp values for ranks [first, first + count) of layer i. Unranks the first
// state and Gosper-steps through the rest; both enumerate the layer in
// increasing numeric order.
void compute_range(std::vector<crossing_t> &dp, unsigned n, unsigned i, std::uint64_t first,
                   std::uint64_t count, const f_oracle &f, const deadline &limit,
                   std::atomic<bool> *expired) {
    if (count == 0) return;
    std::uint64_t x = get_kth_state(n, i, first);
    for (std::uint64_t k = 0; k < count; ++k) {
        crossing_t best = crossing_inf;
        std::uint64_t rest = x;
        while (rest != 0) {
            unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            std::uint64_t prev = x ^ (std::uint64_t{1} << v);
            crossing_t cand = dp[prev] + f(prev, v);
            if (cand < best) best = cand;
        }
        dp[x] = best;
        if (k + 1 < count) x = next_state(x);
        if (limit.enabled() && (k & (deadline_stride - 1)) == deadline_stride - 1 &&
            limit.expired()) {
            if (expired) expired->store(true, std::memory_order_seq_cst);
            return;
        }
    }
}

}  // namespace

std::vector<crossing_t> fill_dp_sequential(unsigned n, const f_oracle &f, deadline limit) {
    std::vector<crossing_t> dp(std::uint64_t{1} << n, crossing_inf);
    dp[0] = 0;
    std::atomic<bool> expired{false};
    for (unsigned i = 1; i <= n; ++i) {
        compute_range(dp, n, i, 1, binomial(n, i), f, limit, &expired);
        if (expired.load(std::memory_order_relaxed)) {
            throw timeout_error("bitmask dp exceeded its deadline");
        }
    }
    return dp;
}

std::vector<crossing_t> fill_dp_parallel(unsigned n, const f_oracle &f, unsigned workers,
                                         deadline limit) {
    if (workers == 0) workers = 1;
    std::vector<crossing_t> dp(std::uint64_t{1} << n, crossing_inf);
    dp[0] = 0;

    std::atomic<bool> expired{false};
    std::barrier sync(static_cast<std::ptrdiff_t>(workers));
    auto worker = [&](unsigned j) {
        for (unsigned i = 1; i <= n; ++i) {
            layer_work_plan plan = make_layer_plan(binomial(n, i), workers);
            if (!expired.load(std::memory_order_relaxed)) {
                compute_range(dp, n, i, plan.first_rank[j], plan.counts[j], f, limit, &expired);
            }
            // No worker starts layer i+1 before every layer-i range is done.
            sync.arrive_and_wait();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned j = 0; j < workers; ++j) pool.emplace_back(worker, j);
    for (auto &t : pool) t.join();

    if (expired.load(std::memory_order_relaxed)) {
        throw timeout_error("bitmask dp exceeded its deadline");
    }
    return dp;
}

permutation reconstruct_from_dp(const std::vector<crossing_t> &dp, unsigned n,
                                const f_oracle &f) {
    std::vector<vertex_t> reversed;
    reversed.reserve(n);
    std::uint64_t x = (std::uint64_t{1} << n) - 1;
    while (x != 0) {
        std::uint64_t rest = x;
        while (rest != 0) {
            unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            std::uint64_t prev = x ^ (std::uint64_t{1} << v);
            if (dp[x] == dp[prev] + f(prev, v)) {
                reversed.push_back(static_cast<vertex_t>(v));
                x = prev;
                break;
            }
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return permutation::from_order(std::move(reversed));
}

solve_result solve_bitmask(const bipartite_instance &inst, const bitmask_options &opts) {
    const unsigned n = inst.n_free();
    unsigned cap = opts.cap_mitm;
    if (opts.variant == dp_variant::slow) cap = opts.cap_slow;
    if (opts.variant == dp_variant::fast) cap = opts.cap_fast;
    if (n > cap) {
        throw capacity_error(std::string(dp_variant_name(opts.variant)) + " handles n_free <= " +
                             std::to_string(cap) + ", instance has " + std::to_string(n));
    }

    std::size_t budget = opts.memory_budget ? opts.memory_budget : default_memory_budget();
    std::size_t dp_bytes = (std::size_t{1} << n) * sizeof(crossing_t);
    std::size_t need = dp_bytes + f_oracle::table_bytes(n, opts.variant);
    if (need > budget) {
        std::string msg = std::string(dp_variant_name(opts.variant)) + " needs " +
                          std::to_string(need) + " bytes, budget is " + std::to_string(budget);
        if (opts.variant == dp_variant::fast) {
            msg += "; mitm-dp fits the same instances in O(2^(n/2) n) memory";
        }
        throw capacity_error(msg);
    }

    crossing_matrix c = compute_crossing_matrix(inst);
    f_oracle f = f_oracle::build(c, opts.variant, budget, opts.threads);
    std::vector<crossing_t> dp = opts.threads <= 1
                                     ? fill_dp_sequential(n, f, opts.limit)
                                     : fill_dp_parallel(n, f, opts.threads, opts.limit);

    solve_result result;
    result.crossings = dp[(std::uint64_t{1} << n) - 1];
    result.perm = reconstruct_from_dp(dp, n, f);
    return result;
}

}  // namespace oscm
