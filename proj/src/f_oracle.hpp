#ifndef OSCM_F_ORACLE_HPP
#define OSCM_F_ORACLE_HPP

#include <bit>
#include <cstddef>

#include "crossing.hpp"
#include "types.hpp"

namespace oscm {

enum class dp_variant { slow, fast, mitm };

const char *dp_variant_name(dp_variant v);

// Answers F(Y, x) = sum of C_yx over y in Y. Three interchangeable backends:
//   slow — no table, O(n) walk over the set bits of Y;
//   fast — full table of 2^n * n entries, O(1) lookup;
//   mitm — two half-universe tables of 2^(n/2) * n entries whose values sum
//          to the full answer, O(1) lookup.
class f_oracle {
  public:
    static f_oracle build(const crossing_matrix &c, dp_variant variant,
                          std::size_t memory_budget, unsigned threads);

    // Table bytes the variant needs for a given n (excludes the dp array).
    static std::size_t table_bytes(unsigned n, dp_variant variant);

    crossing_t operator()(std::uint64_t y_mask, unsigned x) const {
        switch (variant_) {
            case dp_variant::fast:
                return table_[y_mask * n_ + x];
            case dp_variant::mitm:
                return lo_[(y_mask & lo_mask_) * n_ + x] + hi_[(y_mask >> half_) * n_ + x];
            case dp_variant::slow:
            default: {
                crossing_t total = 0;
                const crossing_t *row = transposed_.data() + static_cast<std::size_t>(x) * n_;
                while (y_mask != 0) {
                    unsigned y = static_cast<unsigned>(std::countr_zero(y_mask));
                    y_mask &= y_mask - 1;
                    total += row[y];
                }
                return total;
            }
        }
    }

    dp_variant variant() const { return variant_; }
    unsigned size() const { return n_; }

  private:
    dp_variant variant_ = dp_variant::slow;
    unsigned n_ = 0;
    unsigned half_ = 0;
    std::uint64_t lo_mask_ = 0;
    std::vector<crossing_t> transposed_;
    std::vector<crossing_t> table_;
    std::vector<crossing_t> lo_;
    std::vector<crossing_t> hi_;
};

}  // namespace oscm

#endif
