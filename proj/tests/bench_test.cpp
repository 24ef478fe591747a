#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bench.hpp"
#include "interval_system.hpp"
#include "test_util.hpp"

using namespace oscm;

namespace {

struct temp_dir {
    std::filesystem::path path;
    temp_dir() {
        path = std::filesystem::temp_directory_path() /
               ("oscm_bench_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~temp_dir() { std::filesystem::remove_all(path); }

    std::string file(const std::string &name) const { return (path / name).string(); }
};

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("auto selection prefers the sweep, then the dp, then golden") {
    solver_options opts;
    auto narrow = generate_random_instance(20, 20, 0.15, 12);
    if (characterize_instance(narrow).max_width <= opts.width_cap) {
        CHECK(select_algorithm(narrow, opts) == algorithm_id::subexpo);
    }

    // a window cap below the measured width pushes auto off the sweep
    auto dense = generate_random_instance(16, 10, 0.9, 13);
    REQUIRE(characterize_instance(dense).max_width > 4);
    solver_options capped = opts;
    capped.width_cap = 4;
    CHECK(select_algorithm(dense, capped) == algorithm_id::mitm_dp);

    // and past the dp size cap only golden remains
    bipartite_instance big;
    big.n_fixed = 2;
    big.adjacency.assign(40, {0, 1});
    big.edge_count = 80;
    CHECK(select_algorithm(big, capped) == algorithm_id::golden);

    solver_options fixed = opts;
    fixed.algo = algorithm_id::slow_dp;
    CHECK(select_algorithm(dense, fixed) == algorithm_id::slow_dp);
}

TEST_CASE("solve dispatch honors the requested algorithm and thread floor") {
    auto inst = generate_random_instance(7, 7, 0.5, 21);
    solver_options opts;
    opts.algo = algorithm_id::brute;
    crossing_t expected = solve(inst, opts).crossings;
    for (algorithm_id id : {algorithm_id::slow_dp, algorithm_id::fast_dp, algorithm_id::mitm_dp,
                            algorithm_id::golden, algorithm_id::subexpo,
                            algorithm_id::auto_select}) {
        solver_options o;
        o.algo = id;
        o.threads = 2;
        CHECK(solve(inst, o).crossings == expected);
    }
    solver_options bad;
    bad.threads = 0;
    CHECK_THROWS_AS(solve(inst, bad), std::invalid_argument);

    CHECK(parse_algorithm("mitm-dp") == algorithm_id::mitm_dp);
    CHECK(parse_algorithm(algorithm_name(algorithm_id::golden)) == algorithm_id::golden);
    CHECK_THROWS_AS(parse_algorithm("nope"), std::invalid_argument);
}

TEST_CASE("median is order-insensitive") {
    std::vector<std::uint64_t> samples{50, 10, 30};
    CHECK(median_ns(samples) == 30);
    CHECK(median_ns({30, 50, 10}) == 30);
    CHECK(median_ns({10, 20, 30, 40}) == 25);
    CHECK(median_ns({7}) == 7);

    test::rng r(3);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::uint64_t> v;
        for (int i = 0; i < 9; ++i) v.push_back(r.below(1000));
        std::uint64_t expect = median_ns(v);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[r.below(i)]);
            CHECK(median_ns(v) == expect);
        }
    }
}

TEST_CASE("config loading validates fields") {
    temp_dir dir;
    std::string cfg_path = dir.file("cfg.json");

    write_file(cfg_path, R"({
        "algorithm": "mitm-dp",
        "threads": [1, 2],
        "repetitions": 3,
        "warmup": 0,
        "instances": ["a.gr"],
        "output": "out.csv",
        "format": "csv",
        "filter": {"max_n_free": 12}
    })");
    bench_config cfg = load_bench_config(cfg_path);
    CHECK(cfg.algo == algorithm_id::mitm_dp);
    CHECK(cfg.thread_counts == std::vector<unsigned>{1, 2});
    CHECK(cfg.filter.max_n_free == 12u);
    CHECK(!cfg.filter.max_width);

    write_file(cfg_path, R"({"algorithm": "mitm-dp", "threads": [2, 4], "instances": []})");
    CHECK_THROWS(load_bench_config(cfg_path));
    write_file(cfg_path, R"({"algorithm": "mitm-dp", "repetitions": 0, "instances": []})");
    CHECK_THROWS(load_bench_config(cfg_path));
    write_file(cfg_path, R"({"algorithm": "nope", "instances": []})");
    CHECK_THROWS(load_bench_config(cfg_path));
}

TEST_CASE("filter_dataset applies each criterion") {
    std::vector<bipartite_instance> set;
    set.push_back(generate_random_instance(4, 4, 0.9, 1));
    set.push_back(generate_random_instance(12, 6, 0.8, 2));
    set.push_back(generate_random_instance(8, 8, 0.1, 3));

    filter_criteria none;
    CHECK(filter_dataset(set, none).size() == 3);

    filter_criteria small_n;
    small_n.max_n_free = 9;
    auto kept = filter_dataset(set, small_n);
    CHECK(kept == std::vector<std::size_t>{0, 2});

    filter_criteria narrow;
    narrow.max_width = 4;
    std::vector<instance_characteristics> report;
    kept = filter_dataset(set, narrow, &report);
    REQUIRE(report.size() == 3);
    for (std::size_t i = 0; i < set.size(); ++i) {
        CHECK(report[i].max_width == characterize_instance(set[i]).max_width);
        CHECK(report[i].kept == (report[i].max_width <= 4));
    }

    filter_criteria sparse;
    sparse.max_edges = 20;
    for (std::size_t idx : filter_dataset(set, sparse)) {
        CHECK(set[idx].edge_count <= 20);
    }
}

TEST_CASE("cross-thread consistency guard") {
    std::vector<bench_record> records(2);
    records[0].instance_id = "a";
    records[0].crossings = 10;
    records[1].instance_id = "a";
    records[1].threads = 2;
    records[1].crossings = 10;
    CHECK_NOTHROW(enforce_cross_thread_consistency(records));

    records[1].crossings = 11;
    CHECK_THROWS(enforce_cross_thread_consistency(records));

    records[1].status = "timeout";  // non-ok rows are exempt
    CHECK_NOTHROW(enforce_cross_thread_consistency(records));
}

TEST_CASE("run_benchmark produces consistent records and reports") {
    temp_dir dir;
    for (int i = 0; i < 2; ++i) {
        auto inst = generate_random_instance(10, 8, 0.5, 100 + i);
        write_file(dir.file("inst" + std::to_string(i) + ".gr"), serialize_instance(inst));
    }
    std::string report_path = dir.file("report.csv");
    bench_config cfg;
    cfg.algo = algorithm_id::mitm_dp;
    cfg.thread_counts = {1, 2};
    cfg.repetitions = 3;
    cfg.warmup = 1;
    cfg.instances = {dir.file("inst0.gr"), dir.file("inst1.gr")};
    cfg.output = report_path;
    cfg.format = "csv";

    std::vector<bench_record> records = run_benchmark(cfg);
    REQUIRE(records.size() == 4);
    for (const bench_record &r : records) {
        CHECK(r.status == "ok");
        CHECK(r.speedup > 0.0);
        if (r.threads == 1) CHECK(r.speedup == 1.0);
        CHECK(r.n == 10);
        CHECK(r.m == 8);
    }
    CHECK(records[0].crossings == records[1].crossings);

    std::string csv = slurp(report_path);
    CHECK(csv.rfind("instance,algo,n,m,edges,threads,time_ns,crossings,speedup,status\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows

    // json report round-trips
    std::ostringstream json_out;
    emit_report(records, "json", json_out);
    CHECK(parse_json_report(json_out.str()) == records);
}

TEST_CASE("capacity misses become per-record statuses, not aborts") {
    temp_dir dir;
    auto big = generate_random_instance(24, 6, 0.5, 7);   // over the fast-dp budget below
    auto ok = generate_random_instance(6, 6, 0.5, 8);
    write_file(dir.file("big.gr"), serialize_instance(big));
    write_file(dir.file("ok.gr"), serialize_instance(ok));

    bench_config cfg;
    cfg.algo = algorithm_id::fast_dp;
    cfg.thread_counts = {1};
    cfg.repetitions = 1;
    cfg.warmup = 0;
    cfg.memory_budget = 4u << 20;
    cfg.instances = {dir.file("big.gr"), dir.file("ok.gr")};

    std::vector<bench_record> records = run_benchmark(cfg);
    REQUIRE(records.size() == 2);
    CHECK(records[0].status == "capacity-error");
    CHECK(records[1].status == "ok");
}

TEST_CASE("runs past the timeout are recorded and the sweep continues") {
    temp_dir dir;
    auto slow = generate_random_instance(20, 10, 0.5, 9);
    auto quick = generate_random_instance(4, 4, 0.5, 10);
    write_file(dir.file("slow.gr"), serialize_instance(slow));
    write_file(dir.file("quick.gr"), serialize_instance(quick));

    bench_config cfg;
    cfg.algo = algorithm_id::slow_dp;
    cfg.thread_counts = {1};
    cfg.repetitions = 1;
    cfg.warmup = 0;
    cfg.timeout_seconds = 1e-6;
    cfg.instances = {dir.file("slow.gr"), dir.file("quick.gr")};

    std::vector<bench_record> records = run_benchmark(cfg);
    REQUIRE(records.size() == 2);
    CHECK(records[0].status == "timeout");
    // the tiny instance finishes before its first deadline check
    CHECK(records[1].status == "ok");
}
