// End-to-end checks of the installed CLI binary: exit codes per the
// documented taxonomy and pipeline composition (gen -> solve -> verify).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "crossing.hpp"
#include "golden_solver.hpp"
#include "instance.hpp"

using namespace oscm;

namespace {

struct command_result {
    int exit_code = -1;
    std::string output;  // stdout only
};

command_result run_cli(const std::string &args) {
    std::string cmd = std::string(OSCM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    command_result result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct temp_dir {
    std::filesystem::path path;
    temp_dir() {
        path = std::filesystem::temp_directory_path() /
               ("oscm_cli_test_" + std::to_string(::getpid()));
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

// A small instance whose optimum (9) exceeds the pairwise lower bound (8),
// so golden needs k > 0 to close it.
bipartite_instance positive_gap_instance() {
    bipartite_instance inst =
        parse_instance("p ocr 6 3 8\n2 7\n3 7\n6 7\n1 8\n4 8\n5 8\n3 9\n4 9\n");
    crossing_matrix c = compute_crossing_matrix(inst);
    REQUIRE(brute_force_solve(inst).crossings >
            residual_costs::compute(c).lower_bound);
    return inst;
}

}  // namespace

TEST_CASE("gen -> solve -> verify pipeline") {
    temp_dir dir;
    std::string inst_path = dir.file("inst.gr");
    std::string sol_path = dir.file("inst.sol");

    command_result gen = run_cli("gen --n 8 --m 7 --p 0.5 --seed 11 --out " + inst_path);
    CHECK(gen.exit_code == 0);

    for (const std::string algo :
         {"auto", "slow-dp", "fast-dp", "mitm-dp", "golden", "subexpo", "brute"}) {
        command_result solve =
            run_cli("solve " + inst_path + " --algo " + algo + " --threads 2 --out " + sol_path);
        REQUIRE(solve.exit_code == 0);
        CHECK(solve.output.find("c crossings ") != std::string::npos);

        command_result verify = run_cli("verify " + inst_path + " " + sol_path);
        REQUIRE(verify.exit_code == 0);

        // the crossings comment must equal what verify recounts
        std::string tail = solve.output.substr(solve.output.find("c crossings ") + 12);
        CHECK(std::stoull(tail) == std::stoull(verify.output));
    }
}

TEST_CASE("gen is deterministic in its seed") {
    temp_dir dir;
    command_result a = run_cli("gen --n 7 --m 6 --p 0.4 --seed 3");
    command_result b = run_cli("gen --n 7 --m 6 --p 0.4 --seed 3");
    command_result c = run_cli("gen --n 7 --m 6 --p 0.4 --seed 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output != c.output);
}

TEST_CASE("solvers agree on the crossings value across algorithms") {
    temp_dir dir;
    std::string inst_path = dir.file("inst.gr");
    run_cli("gen --n 9 --m 8 --p 0.6 --seed 21 --out " + inst_path);
    std::string expected;
    for (const std::string algo : {"brute", "slow-dp", "mitm-dp", "golden", "subexpo"}) {
        command_result solve = run_cli("solve " + inst_path + " --algo " + algo);
        REQUIRE(solve.exit_code == 0);
        std::string value = solve.output.substr(solve.output.find("c crossings "));
        if (expected.empty()) {
            expected = value;
        } else {
            CHECK(value == expected);
        }
    }
}

TEST_CASE("exit code 2 on parse errors") {
    temp_dir dir;
    std::string bad = dir.file("bad.gr");
    write_file(bad, "p ocr 2 2 1\n7 7\n");
    CHECK(run_cli("solve " + bad).exit_code == 2);
    CHECK(run_cli("characterize " + bad).exit_code == 2);
}

TEST_CASE("exit code 3 on capacity misses") {
    temp_dir dir;
    std::string inst_path = dir.file("wide.gr");
    run_cli("gen --n 20 --m 6 --p 0.9 --seed 2 --out " + inst_path);
    command_result res =
        run_cli("solve " + inst_path + " --algo fast-dp --mem-budget 1048576");
    CHECK(res.exit_code == 3);
    command_result sweep =
        run_cli("solve " + inst_path + " --algo subexpo --width-cap 4");
    CHECK(sweep.exit_code == 3);
}

TEST_CASE("exit code 4 when golden exhausts max-k") {
    temp_dir dir;
    std::string inst_path = dir.file("gap.gr");
    write_file(inst_path, serialize_instance(positive_gap_instance()));
    command_result res = run_cli("solve " + inst_path + " --algo golden --max-k 0");
    CHECK(res.exit_code == 4);
}

TEST_CASE("exit code 5 on invalid solutions") {
    temp_dir dir;
    std::string inst_path = dir.file("inst.gr");
    run_cli("gen --n 4 --m 4 --p 0.8 --seed 9 --out " + inst_path);
    std::string sol = dir.file("bad.sol");
    write_file(sol, "5\n5\n6\n7\n");
    CHECK(run_cli("verify " + inst_path + " " + sol).exit_code == 5);
    write_file(sol, "5\n");
    CHECK(run_cli("verify " + inst_path + " " + sol).exit_code == 5);
}

TEST_CASE("characterize prints the width histogram") {
    temp_dir dir;
    std::string inst_path = dir.file("inst.gr");
    write_file(inst_path, "p ocr 3 3 3\n1 4\n2 5\n3 6\n");
    command_result res = run_cli("characterize " + inst_path);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("max-width 1") != std::string::npos);
    CHECK(res.output.find("positions 6") != std::string::npos);
    CHECK(res.output.find("width 1 3") != std::string::npos);

    std::string empty = dir.file("empty.gr");
    write_file(empty, "p ocr 2 3 0\n");
    command_result none = run_cli("characterize " + empty);
    REQUIRE(none.exit_code == 0);
    CHECK(none.output.find("max-width 0") != std::string::npos);
}

TEST_CASE("bench subcommand writes the configured report") {
    temp_dir dir;
    std::string inst_path = dir.file("inst.gr");
    run_cli("gen --n 8 --m 8 --p 0.5 --seed 30 --out " + inst_path);
    std::string report = dir.file("report.csv");
    std::ostringstream cfg;
    cfg << "{\n"
        << "  \"algorithm\": \"mitm-dp\",\n"
        << "  \"threads\": [1, 2],\n"
        << "  \"repetitions\": 1,\n"
        << "  \"warmup\": 0,\n"
        << "  \"instances\": [\"" << inst_path << "\"],\n"
        << "  \"output\": \"" << report << "\",\n"
        << "  \"format\": \"csv\"\n"
        << "}\n";
    std::string cfg_path = dir.file("cfg.json");
    write_file(cfg_path, cfg.str());

    command_result res = run_cli("bench " + cfg_path + " --quiet");
    REQUIRE(res.exit_code == 0);
    std::ifstream in(report);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "instance,algo,n,m,edges,threads,time_ns,crossings,speedup,status");
    std::string row;
    int rows = 0;
    while (std::getline(in, row)) {
        if (!row.empty()) ++rows;
    }
    CHECK(rows == 2);
}

TEST_CASE("missing instance file exits with the io code") {
    CHECK(run_cli("solve /nonexistent.gr").exit_code == 6);
}
