#include "sweep_solver.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <bit>
#include <thread>

#include "combinatorics.hpp"
#include "crossing.hpp"
#include "sysinfo.hpp"

namespace oscm {

namespace {

constexpr std::uint64_t deadline_stride = 1 << 14;

// Inserts a zero bit at position s: bits at and above s shift up.
std::uint64_t expand_mask(std::uint64_t mask, unsigned s) {
    std::uint64_t low = (std::uint64_t{1} << s) - 1;
    return (mask & low) | ((mask & ~low) << 1);
}

struct sweep_state {
    const bipartite_instance &inst;
    const interval_system &sys;
    crossing_matrix cost;

    unsigned width = 0;
    std::vector<vertex_t> slot_vertex;
    std::vector<crossing_t> dp;          // over subsets of the current window
    std::vector<crossing_t> rekey_buf;
    std::vector<crossing_t> fl;          // F(L_t, v) per free vertex
    std::vector<bool> closed;
    std::vector<std::vector<std::uint8_t>> choices;  // per open event, argmin slot
    std::vector<std::uint8_t> removed_slot;          // per close event

    // Window F split: half tables over slots [0, split) and [split, width).
    unsigned split = 0;
    std::vector<crossing_t> half_lo, half_hi;

    sweep_debug *debug = nullptr;

    sweep_state(const bipartite_instance &bi, const interval_system &is)
        : inst(bi), sys(is), cost(compute_crossing_matrix(bi)) {
        fl.assign(bi.n_free(), 0);
        closed.assign(bi.n_free(), false);
        choices.resize(is.events.size());
        removed_slot.assign(is.events.size(), 0);
        dp.assign(1, 0);
    }

    crossing_t fwin(std::uint64_t mask, unsigned x_slot) const {
        std::uint64_t lo = mask & ((std::uint64_t{1} << split) - 1);
        return half_lo[lo * width + x_slot] + half_hi[(mask >> split) * width + x_slot];
    }

    void rebuild_half_tables() {
        split = width / 2;
        auto build = [&](std::vector<crossing_t> &table, unsigned delta, unsigned s) {
            const std::uint64_t confs = std::uint64_t{1} << s;
            table.assign(confs * width, 0);
            for (std::uint64_t conf = 1; conf < confs; ++conf) {
                unsigned top = std::bit_width(conf) - 1;
                std::uint64_t prev = conf ^ (std::uint64_t{1} << top);
                vertex_t y = slot_vertex[top + delta];
                for (unsigned x = 0; x < width; ++x) {
                    table[conf * width + x] = table[prev * width + x] + cost(y, slot_vertex[x]);
                }
            }
        };
        build(half_lo, 0, split);
        build(half_hi, split, width - split);
    }

    // Single-threaded step: window bookkeeping for event t. Fill work for
    // open events happens separately so it can be split across workers.
    void prep_event(std::size_t t) {
        const interval_system::event &e = sys.events[t];
        if (e.open) {
            slot_vertex.push_back(e.v);
            ++width;
            // Existing states keep their index: the new slot is the top bit.
            dp.resize(std::uint64_t{1} << width, crossing_inf);
            rebuild_half_tables();
            choices[t].assign(std::uint64_t{1} << width, 0xff);
        } else {
            unsigned s = static_cast<unsigned>(
                std::find(slot_vertex.begin(), slot_vertex.end(), e.v) - slot_vertex.begin());
            removed_slot[t] = static_cast<std::uint8_t>(s);
            // Keep exactly the states containing the closing vertex; its dp
            // values migrate to the L side.
            const std::uint64_t bit = std::uint64_t{1} << s;
            rekey_buf.resize(std::uint64_t{1} << (width - 1));
            for (std::uint64_t m = 0; m < rekey_buf.size(); ++m) {
                rekey_buf[m] = dp[expand_mask(m, s) | bit];
            }
            dp.swap(rekey_buf);
            slot_vertex.erase(slot_vertex.begin() + s);
            --width;
            closed[e.v] = true;
            for (vertex_t u = 0; u < inst.n_free(); ++u) {
                if (!closed[u]) fl[u] += cost(e.v, u);
            }
        }
        if (debug) debug->dp_closed_after_event.push_back(dp[0]);
    }

    // dp for ranks [first, first+count) of the open-event layer with
    // |S| = bits_in_t + 1; every state contains the just-opened top slot.
    void fill_layer_range(std::size_t t, unsigned bits_in_t, std::uint64_t first,
                          std::uint64_t count, const deadline &limit,
                          std::atomic<bool> *expired) {
        if (count == 0) return;
        const unsigned others = width - 1;
        const std::uint64_t top_bit = std::uint64_t{1} << others;
        std::vector<std::uint8_t> &choice = choices[t];
        std::uint64_t sub = get_kth_state(others, bits_in_t, first);
        for (std::uint64_t k = 0; k < count; ++k) {
            const std::uint64_t state = sub | top_bit;
            crossing_t best = crossing_inf;
            std::uint8_t best_slot = 0xff;
            std::uint64_t rest = state;
            while (rest != 0) {
                unsigned v = static_cast<unsigned>(std::countr_zero(rest));
                rest &= rest - 1;
                std::uint64_t prev = state ^ (std::uint64_t{1} << v);
                crossing_t cand = dp[prev] + fl[slot_vertex[v]] + fwin(prev, v);
                if (cand < best) {
                    best = cand;
                    best_slot = static_cast<std::uint8_t>(v);
                }
            }
            dp[state] = best;
            choice[state] = best_slot;
            if (k + 1 < count) sub = next_state(sub);
            if (limit.enabled() && (k & (deadline_stride - 1)) == deadline_stride - 1 &&
                limit.expired()) {
                if (expired) expired->store(true, std::memory_order_seq_cst);
                return;
            }
        }
    }

    permutation reconstruct() const {
        std::vector<vertex_t> reversed;
        reversed.reserve(inst.n_free());
        std::vector<vertex_t> slots;  // replayed backwards
        std::uint64_t mask = 0;
        unsigned w = 0;
        for (std::size_t t = sys.events.size(); t-- > 0;) {
            const interval_system::event &e = sys.events[t];
            if (!e.open) {
                unsigned s = removed_slot[t];
                mask = expand_mask(mask, s) | (std::uint64_t{1} << s);
                slots.insert(slots.begin() + s, e.v);
                ++w;
            } else {
                const std::uint64_t top_bit = std::uint64_t{1} << (w - 1);
                while (mask & top_bit) {
                    std::uint8_t v = choices[t][mask];
                    reversed.push_back(slots[v]);
                    mask ^= std::uint64_t{1} << v;
                }
                slots.pop_back();
                --w;
            }
        }
        std::vector<vertex_t> order(sys.isolated.begin(), sys.isolated.end());
        order.insert(order.end(), reversed.rbegin(), reversed.rend());
        return permutation::from_order(std::move(order));
    }
};

std::size_t estimate_bytes(const bipartite_instance &inst, const interval_system &sys,
                           const width_profile &profile) {
    const unsigned maxw = profile.max_width;
    if (maxw >= 48) {
        return std::numeric_limits<std::size_t>::max();  // beyond any real budget
    }
    std::size_t dp_bytes = (std::size_t{1} << maxw) * sizeof(crossing_t);
    std::size_t rekey = maxw == 0 ? 0 : (std::size_t{1} << (maxw - 1)) * sizeof(crossing_t);
    std::size_t halves =
        2 * (std::size_t{1} << ((maxw + 1) / 2)) * maxw * sizeof(crossing_t);
    std::size_t choice_bytes = 0;
    for (std::size_t t = 0; t < sys.events.size(); ++t) {
        if (sys.events[t].open) {
            choice_bytes += std::size_t{1} << profile.widths[t];
        }
    }
    std::size_t n = inst.n_free();
    return dp_bytes + rekey + halves + choice_bytes + n * n * sizeof(crossing_t) +
           n * sizeof(crossing_t);
}

void run_sequential(sweep_state &st, const deadline &limit) {
    std::atomic<bool> expired{false};
    for (std::size_t t = 0; t < st.sys.events.size(); ++t) {
        if (limit.expired()) {
            throw timeout_error("interval sweep exceeded its deadline");
        }
        st.prep_event(t);
        if (!st.sys.events[t].open) continue;
        for (unsigned sz = 1; sz <= st.width; ++sz) {
            st.fill_layer_range(t, sz - 1, 1, binomial(st.width - 1, sz - 1), limit, &expired);
            if (expired.load(std::memory_order_relaxed)) {
                throw timeout_error("interval sweep exceeded its deadline");
            }
        }
    }
}

void run_parallel(sweep_state &st, unsigned workers, const deadline &limit) {
    std::atomic<bool> expired{false};
    std::barrier sync(static_cast<std::ptrdiff_t>(workers));

    // Every worker executes the same barrier schedule; widths evolve
    // identically, so the per-layer loop counts agree without sharing.
    auto worker = [&](unsigned j) {
        unsigned w = 0;
        for (std::size_t t = 0; t < st.sys.events.size(); ++t) {
            const bool open = st.sys.events[t].open;
            if (j == 0) {
                if (limit.expired()) expired.store(true, std::memory_order_seq_cst);
                if (!expired.load(std::memory_order_relaxed)) st.prep_event(t);
            }
            w += open ? 1 : -1;
            sync.arrive_and_wait();
            if (expired.load(std::memory_order_relaxed)) return;
            if (!open) continue;
            for (unsigned sz = 1; sz <= w; ++sz) {
                layer_work_plan plan = make_layer_plan(binomial(w - 1, sz - 1), workers);
                st.fill_layer_range(t, sz - 1, plan.first_rank[j], plan.counts[j], limit,
                                    &expired);
                sync.arrive_and_wait();
                if (expired.load(std::memory_order_relaxed)) return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned j = 0; j < workers; ++j) pool.emplace_back(worker, j);
    for (auto &t : pool) t.join();

    if (expired.load(std::memory_order_relaxed)) {
        throw timeout_error("interval sweep exceeded its deadline");
    }
}

}  // namespace

solve_result solve_sweep(const bipartite_instance &inst, const sweep_options &opts,
                         sweep_debug *debug) {
    interval_system sys = build_interval_system(inst);
    if (sys.events.empty()) {
        // Only isolated vertices; any order is crossing-free.
        std::vector<vertex_t> order(sys.isolated.begin(), sys.isolated.end());
        return {permutation::from_order(std::move(order)), 0};
    }

    width_profile profile = characterize_instance(inst);
    if (profile.max_width > opts.width_cap) {
        throw capacity_error("window too wide: max |M_t| = " +
                             std::to_string(profile.max_width) + " exceeds width-cap " +
                             std::to_string(opts.width_cap));
    }
    std::size_t budget = opts.memory_budget ? opts.memory_budget : default_memory_budget();
    std::size_t need = estimate_bytes(inst, sys, profile);
    if (need > budget) {
        throw capacity_error("interval sweep needs " + std::to_string(need) +
                             " bytes, budget is " + std::to_string(budget));
    }

    sweep_state st(inst, sys);
    st.debug = debug;
    if (opts.threads <= 1) {
        run_sequential(st, opts.limit);
    } else {
        run_parallel(st, opts.threads, opts.limit);
    }

    solve_result result;
    result.crossings = st.dp[0];
    result.perm = st.reconstruct();
    return result;
}

}  // namespace oscm
