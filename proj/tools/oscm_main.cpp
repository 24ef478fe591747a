// oscm command line: solve / verify / gen / characterize / bench over the
// shared-library C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oscm/oscm.h"

namespace {

int fail(oscm_status status) {
    std::cerr << "error: " << oscm_last_error() << '\n';
    return static_cast<int>(status);
}

std::string read_file(const std::string &path, bool &ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = true;
    return buf.str();
}

struct instance_handle {
    oscm_instance *ptr = nullptr;
    ~instance_handle() { oscm_instance_free(ptr); }
};

struct result_handle {
    oscm_result *ptr = nullptr;
    ~result_handle() { oscm_result_free(ptr); }
};

struct profile_handle {
    oscm_profile *ptr = nullptr;
    ~profile_handle() { oscm_profile_free(ptr); }
};

struct text_handle {
    char *ptr = nullptr;
    ~text_handle() { oscm_text_free(ptr); }
};

oscm_algorithm algorithm_from_name(const std::string &name) {
    if (name == "auto") return OSCM_ALGO_AUTO;
    if (name == "slow-dp") return OSCM_ALGO_SLOW_DP;
    if (name == "fast-dp") return OSCM_ALGO_FAST_DP;
    if (name == "mitm-dp") return OSCM_ALGO_MITM_DP;
    if (name == "golden") return OSCM_ALGO_GOLDEN;
    if (name == "subexpo") return OSCM_ALGO_SUBEXPO;
    if (name == "brute") return OSCM_ALGO_BRUTE;
    throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"one-sided crossing minimization solvers"};
    app.require_subcommand(1);

    // solve
    std::string solve_path;
    std::string solve_algo = "auto";
    unsigned solve_threads = 1;
    std::uint64_t solve_max_k = std::uint64_t{1} << 20;
    std::uint32_t solve_width_cap = 30;
    std::uint64_t solve_mem_budget = 0;
    std::string solve_out;
    CLI::App *solve = app.add_subcommand("solve", "solve an instance and print the order");
    solve->add_option("instance", solve_path, "PACE instance file")->required();
    solve->add_option("--algo", solve_algo,
                      "auto | slow-dp | fast-dp | mitm-dp | golden | subexpo | brute");
    solve->add_option("--threads", solve_threads, "worker threads (default 1)");
    solve->add_option("--max-k", solve_max_k, "golden: cap for the k-doubling schedule");
    solve->add_option("--width-cap", solve_width_cap, "subexpo: max window width");
    solve->add_option("--mem-budget", solve_mem_budget,
                      "memory budget in bytes (default: 75% of RAM)");
    solve->add_option("--out", solve_out, "also write the solution lines to this file");

    // verify
    std::string verify_instance;
    std::string verify_solution;
    CLI::App *verify = app.add_subcommand("verify", "count the crossings of a solution file");
    verify->add_option("instance", verify_instance, "PACE instance file")->required();
    verify->add_option("solution", verify_solution, "solution file")->required();

    // gen
    std::uint32_t gen_n = 0;
    std::uint32_t gen_m = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App *gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_n, "free-layer size")->required();
    gen->add_option("--m", gen_m, "fixed-layer size")->required();
    gen->add_option("--p", gen_p, "edge probability in [0,1]");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // characterize
    std::string characterize_path;
    CLI::App *characterize =
        app.add_subcommand("characterize", "report the interval-window widths of an instance");
    characterize->add_option("instance", characterize_path, "PACE instance file")->required();

    // bench
    std::string bench_config;
    std::string bench_out;
    std::string bench_format;
    bool bench_quiet = false;
    CLI::App *bench = app.add_subcommand("bench", "run the benchmark described by a config file");
    bench->add_option("config", bench_config, "JSON benchmark config")->required();
    bench->add_option("--out", bench_out, "override the config's report path");
    bench->add_option("--format", bench_format, "override the report format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_flag("--quiet", bench_quiet, "suppress per-run progress on stderr");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        instance_handle inst;
        oscm_status status = oscm_instance_read_file(solve_path.c_str(), &inst.ptr);
        if (status != OSCM_OK) return fail(status);

        oscm_solve_options opts;
        oscm_solve_options_init(&opts);
        opts.algorithm = algorithm_from_name(solve_algo);
        opts.threads = solve_threads;
        opts.max_k = solve_max_k;
        opts.width_cap = solve_width_cap;
        opts.memory_budget = solve_mem_budget;

        result_handle result;
        status = oscm_solve(inst.ptr, &opts, &result.ptr);
        if (status != OSCM_OK) return fail(status);

        text_handle text;
        status = oscm_result_solution_text(inst.ptr, result.ptr, &text.ptr);
        if (status != OSCM_OK) return fail(status);
        std::cout << text.ptr;
        std::cout << "c crossings " << oscm_result_crossings(result.ptr) << '\n';
        if (!solve_out.empty()) {
            std::ofstream out(solve_out, std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write " << solve_out << '\n';
                return OSCM_ERR_IO;
            }
            out << text.ptr;
        }
        return 0;
    }

    if (verify->parsed()) {
        instance_handle inst;
        oscm_status status = oscm_instance_read_file(verify_instance.c_str(), &inst.ptr);
        if (status != OSCM_OK) return fail(status);
        bool ok = false;
        std::string text = read_file(verify_solution, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << verify_solution << '\n';
            return OSCM_ERR_IO;
        }
        std::uint64_t crossings = 0;
        status = oscm_verify_solution_text(inst.ptr, text.c_str(), text.size(), &crossings);
        if (status != OSCM_OK) return fail(status);
        std::cout << crossings << '\n';
        return 0;
    }

    if (gen->parsed()) {
        instance_handle inst;
        oscm_status status = oscm_instance_generate(gen_n, gen_m, gen_p, gen_seed, &inst.ptr);
        if (status != OSCM_OK) return fail(status);
        text_handle text;
        status = oscm_instance_serialize(inst.ptr, &text.ptr);
        if (status != OSCM_OK) return fail(status);
        if (gen_out.empty()) {
            std::cout << text.ptr;
        } else {
            std::ofstream out(gen_out, std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write " << gen_out << '\n';
                return OSCM_ERR_IO;
            }
            out << text.ptr;
        }
        return 0;
    }

    if (characterize->parsed()) {
        instance_handle inst;
        oscm_status status = oscm_instance_read_file(characterize_path.c_str(), &inst.ptr);
        if (status != OSCM_OK) return fail(status);
        profile_handle profile;
        status = oscm_characterize(inst.ptr, &profile.ptr);
        if (status != OSCM_OK) return fail(status);
        std::uint32_t max_width = oscm_profile_max_width(profile.ptr);
        std::cout << "max-width " << max_width << '\n';
        std::cout << "positions " << oscm_profile_positions(profile.ptr) << '\n';
        for (std::uint32_t w = 0; w <= max_width; ++w) {
            std::cout << "width " << w << ' ' << oscm_profile_width_count(profile.ptr, w) << '\n';
        }
        return 0;
    }

    if (bench->parsed()) {
        oscm_status status =
            oscm_bench_run(bench_config.c_str(), bench_out.empty() ? nullptr : bench_out.c_str(),
                           bench_format.empty() ? nullptr : bench_format.c_str(),
                           bench_quiet ? 0 : 1);
        if (status != OSCM_OK) return fail(status);
        return 0;
    }

    return 1;
}
