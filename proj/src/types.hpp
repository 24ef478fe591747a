#ifndef OSCM_TYPES_HPP
#define OSCM_TYPES_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscm {

using vertex_t = std::uint32_t;
using crossing_t = std::uint64_t;

inline constexpr crossing_t crossing_inf = std::numeric_limits<crossing_t>::max();

// Ordering of the free layer. order[i] is the vertex drawn at position i,
// inverse[v] the position of vertex v.
struct permutation {
    std::vector<vertex_t> order;
    std::vector<vertex_t> inverse;

    // Validates that `order` is a bijection on {0..n-1}; throws
    // invalid_solution_error otherwise.
    static permutation from_order(std::vector<vertex_t> order);

    std::size_t size() const { return order.size(); }
    bool operator==(const permutation &) const = default;
};

struct solve_result {
    permutation perm;
    crossing_t crossings = 0;
};

class parse_error : public std::runtime_error {
  public:
    parse_error(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

class capacity_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class not_found_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class invalid_solution_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class timeout_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cooperative wall-clock cutoff handed down to the solvers. Default-constructed
// deadlines never expire.
class deadline {
  public:
    deadline() = default;

    static deadline after(double seconds) {
        deadline d;
        d.enabled_ = true;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
        return d;
    }

    bool enabled() const { return enabled_; }

    bool expired() const {
        return enabled_ && std::chrono::steady_clock::now() >= at_;
    }

  private:
    std::chrono::steady_clock::time_point at_{};
    bool enabled_ = false;
};

}  // namespace oscm

#endif
