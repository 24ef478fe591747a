#include "f_oracle.hpp"

#include <string>
#include <thread>

namespace oscm {

const char *dp_variant_name(dp_variant v) {
    switch (v) {
        case dp_variant::slow: return "slow-dp";
        case dp_variant::fast: return "fast-dp";
        case dp_variant::mitm: return "mitm-dp";
    }
    return "?";
}

namespace {

// F over one half of the universe: f[conf][x] = f[conf without its top
// bit][x] + C(top + delta, x). Parallel over x, the outer loop.
void fill_half_table(std::vector<crossing_t> &f, const crossing_matrix &c, unsigned n,
                     unsigned delta, unsigned s, unsigned threads) {
    const std::uint64_t confs = std::uint64_t{1} << s;
    f.assign(confs * n, 0);
    auto fill_columns = [&](unsigned x_begin, unsigned x_end) {
        for (std::uint64_t conf = 1; conf < confs; ++conf) {
            unsigned v = std::bit_width(conf) - 1;
            std::uint64_t prev = conf ^ (std::uint64_t{1} << v);
            for (unsigned x = x_begin; x < x_end; ++x) {
                f[conf * n + x] = f[prev * n + x] + c(v + delta, x);
            }
        }
    };
    if (threads <= 1 || n <= 1) {
        fill_columns(0, n);
        return;
    }
    unsigned used = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned j = 0; j < used; ++j) {
        unsigned begin = static_cast<unsigned>(static_cast<std::uint64_t>(n) * j / used);
        unsigned end = static_cast<unsigned>(static_cast<std::uint64_t>(n) * (j + 1) / used);
        pool.emplace_back(fill_columns, begin, end);
    }
    for (auto &t : pool) t.join();
}

}  // namespace

std::size_t f_oracle::table_bytes(unsigned n, dp_variant variant) {
    switch (variant) {
        case dp_variant::slow:
            return static_cast<std::size_t>(n) * n * sizeof(crossing_t);
        case dp_variant::fast:
            return (std::size_t{1} << n) * n * sizeof(crossing_t);
        case dp_variant::mitm: {
            unsigned half = n / 2;
            std::size_t lo = (std::size_t{1} << half) * n * sizeof(crossing_t);
            std::size_t hi = (std::size_t{1} << (n - half)) * n * sizeof(crossing_t);
            return lo + hi;
        }
    }
    return 0;
}

f_oracle f_oracle::build(const crossing_matrix &c, dp_variant variant,
                         std::size_t memory_budget, unsigned threads) {
    f_oracle f;
    f.variant_ = variant;
    f.n_ = c.n;
    const unsigned n = c.n;

    std::size_t need = table_bytes(n, variant);
    if (need > memory_budget) {
        std::string msg = std::string(dp_variant_name(variant)) + " F table needs " +
                          std::to_string(need) + " bytes, budget is " +
                          std::to_string(memory_budget);
        if (variant == dp_variant::fast) {
            msg += "; mitm-dp fits the same instances in O(2^(n/2) n) memory";
        }
        throw capacity_error(msg);
    }

    switch (variant) {
        case dp_variant::slow:
            // Column access pattern; keep C transposed so the set-bit walk
            // reads one contiguous row.
            f.transposed_.assign(static_cast<std::size_t>(n) * n, 0);
            for (unsigned x = 0; x < n; ++x) {
                for (unsigned y = 0; y < n; ++y) {
                    f.transposed_[static_cast<std::size_t>(x) * n + y] = c(y, x);
                }
            }
            break;
        case dp_variant::fast:
            fill_half_table(f.table_, c, n, 0, n, threads);
            break;
        case dp_variant::mitm:
            f.half_ = n / 2;
            f.lo_mask_ = (std::uint64_t{1} << f.half_) - 1;
            fill_half_table(f.lo_, c, n, 0, f.half_, threads);
            fill_half_table(f.hi_, c, n, f.half_, n - f.half_, threads);
            break;
    }
    return f;
}

}  // namespace oscm
