#ifndef OSCM_BENCH_HPP
#define OSCM_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"
#include "solver.hpp"
#include "types.hpp"

namespace oscm {

struct filter_criteria {
    std::optional<unsigned> max_width;
    std::optional<std::uint32_t> max_n_free;
    std::optional<std::uint64_t> max_edges;
};

struct bench_config {
    algorithm_id algo = algorithm_id::slow_dp;
    std::vector<unsigned> thread_counts{1};  // ascending, first entry 1
    unsigned repetitions = 3;
    unsigned warmup = 1;
    double timeout_seconds = 0;  // per run; 0 = none
    std::vector<std::string> instances;
    filter_criteria filter;
    std::string output;  // report path
    std::string format = "csv";
    std::uint64_t max_k = std::uint64_t{1} << 20;
    unsigned width_cap = 30;
    std::size_t memory_budget = 0;
};

bench_config load_bench_config(const std::string &path);

struct bench_record {
    std::string instance_id;
    std::string algo;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t edges = 0;
    unsigned threads = 1;
    std::uint64_t time_ns = 0;  // median of the repetitions
    crossing_t crossings = 0;
    double speedup = 0.0;  // T_1 / T_p against the same instance's 1-thread median
    std::string status = "ok";  // ok | timeout | capacity-error

    bool operator==(const bench_record &) const = default;
};

// Order-insensitive median; even sizes average the two middle values.
std::uint64_t median_ns(std::vector<std::uint64_t> samples);

// Per-instance characteristics measured for filtering.
struct instance_characteristics {
    std::string id;
    std::uint32_t n_free = 0;
    std::uint64_t edges = 0;
    unsigned max_width = 0;
    bool kept = false;
};

std::vector<std::size_t> filter_dataset(const std::vector<bipartite_instance> &instances,
                                        const filter_criteria &criteria,
                                        std::vector<instance_characteristics> *report = nullptr);

// Throws when a solver returned different crossing counts for different
// thread counts of the same instance.
void enforce_cross_thread_consistency(const std::vector<bench_record> &records);

// Warmups + timed repetitions per (instance, thread count); flushes the
// report after every record so an aborted sweep loses nothing. Timeouts and
// capacity errors become per-record statuses, never aborts.
std::vector<bench_record> run_benchmark(const bench_config &cfg,
                                        std::ostream *progress = nullptr);

void emit_report(const std::vector<bench_record> &records, const std::string &format,
                 std::ostream &out);
std::vector<bench_record> parse_json_report(const std::string &text);

}  // namespace oscm

#endif
