#include "precedence.hpp"

#include <bit>
#include <queue>

namespace oscm {

std::uint64_t bit_matrix::count_edges() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

std::optional<std::vector<vertex_t>> topological_order(const bit_matrix &d) {
    const unsigned n = d.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t *row = d.row(i);
        for (unsigned w = 0; w < d.words_per_row(); ++w) {
            std::uint64_t bits = row[w];
            while (bits != 0) {
                unsigned j = (w << 6) + static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                ++indegree[j];
            }
        }
    }

    std::priority_queue<vertex_t, std::vector<vertex_t>, std::greater<>> ready;
    for (unsigned v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }

    std::vector<vertex_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        vertex_t v = ready.top();
        ready.pop();
        order.push_back(v);
        const std::uint64_t *row = d.row(v);
        for (unsigned w = 0; w < d.words_per_row(); ++w) {
            std::uint64_t bits = row[w];
            while (bits != 0) {
                unsigned j = (w << 6) + static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                if (--indegree[j] == 0) ready.push(j);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

bool transitive_closure(bit_matrix &d) {
    auto sorted = topological_order(d);
    if (!sorted) return false;
    const std::vector<vertex_t> &srt = *sorted;
    const unsigned n = d.size();
    if (n < 2) return true;
    // Positions walked backwards; every successor row is already closed when
    // it gets OR-ed in.
    for (unsigned i = n - 1; i-- > 0;) {
        for (unsigned j = i + 1; j < n; ++j) {
            if (d.get(srt[i], srt[j])) {
                d.or_row(srt[i], srt[j]);
            }
        }
    }
    return true;
}

}  // namespace oscm
