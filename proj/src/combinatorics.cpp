#include "combinatorics.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace oscm {

namespace {

constexpr unsigned max_n = 64;

using table_t = std::array<std::array<std::uint64_t, max_n + 1>, max_n + 1>;

table_t build_table() {
    table_t t{};
    for (unsigned n = 0; n <= max_n; ++n) {
        t[n][0] = 1;
        for (unsigned k = 1; k <= n; ++k) {
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
    }
    return t;
}

const table_t &table() {
    static const table_t t = build_table();
    return t;
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
    if (n > max_n) {
        throw std::out_of_range("binomial table covers n <= 64");
    }
    if (k > n) return 0;
    return table()[n][k];
}

std::uint64_t get_kth_state(unsigned n, unsigned i, std::uint64_t k) {
    if (i > n || k < 1 || k > binomial(n, i)) {
        throw std::out_of_range("rank " + std::to_string(k) + " out of range for layer (" +
                                std::to_string(n) + ", " + std::to_string(i) + ")");
    }
    std::uint64_t x = 0;
    unsigned v = n;
    while (v > 0 && i > 0) {
        --v;
        std::uint64_t below = binomial(v, i);
        if (below < k) {
            k -= below;
            --i;
            x |= std::uint64_t{1} << v;
        }
    }
    return x;
}

layer_work_plan make_layer_plan(std::uint64_t total, unsigned workers) {
    layer_work_plan plan;
    plan.counts.resize(workers);
    plan.first_rank.resize(workers);
    std::uint64_t base = workers ? total / workers : 0;
    std::uint64_t extra = workers ? total % workers : 0;
    std::uint64_t next = 1;
    for (unsigned j = 0; j < workers; ++j) {
        plan.counts[j] = base + (j < extra ? 1 : 0);
        plan.first_rank[j] = next;
        next += plan.counts[j];
    }
    return plan;
}

}  // namespace oscm
