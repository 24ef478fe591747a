#ifndef OSCM_PRECEDENCE_HPP
#define OSCM_PRECEDENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "types.hpp"

namespace oscm {

// Square boolean matrix with 64-bit packed rows; get(i,j) reads "i comes
// before j".
class bit_matrix {
  public:
    bit_matrix() = default;
    explicit bit_matrix(unsigned n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    unsigned size() const { return n_; }
    unsigned words_per_row() const { return words_; }

    bool get(unsigned i, unsigned j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(unsigned i, unsigned j) {
        bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }

    std::uint64_t *row(unsigned i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    const std::uint64_t *row(unsigned i) const {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }

    // dst |= src, word-wise.
    void or_row(unsigned dst, unsigned src) {
        std::uint64_t *d = row(dst);
        const std::uint64_t *s = row(src);
        for (unsigned w = 0; w < words_; ++w) d[w] |= s[w];
    }

    std::uint64_t count_edges() const;

    bool operator==(const bit_matrix &) const = default;

  private:
    unsigned n_ = 0;
    unsigned words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Kahn's algorithm with an index min-heap: among the currently available
// vertices the smallest index goes first, which both fixes ties
// deterministically and yields the lexicographically smallest completion.
// Empty optional when d has a cycle.
std::optional<std::vector<vertex_t>> topological_order(const bit_matrix &d);

// Reachability closure in place: vertices in reverse topological order,
// OR-ing successor rows word-wise. Returns false (d untouched beyond partial
// work) when d has a cycle.
bool transitive_closure(bit_matrix &d);

}  // namespace oscm

#endif
