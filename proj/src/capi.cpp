#include "oscm/oscm.h"

#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "bench.hpp"
#include "crossing.hpp"
#include "instance.hpp"
#include "interval_system.hpp"
#include "solver.hpp"
#include "types.hpp"

struct oscm_instance {
    oscm::bipartite_instance impl;
};

struct oscm_result {
    oscm::solve_result impl;
};

struct oscm_profile {
    oscm::width_profile impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
oscm_status guarded(Fn &&fn) {
    try {
        fn();
        return OSCM_OK;
    } catch (const oscm::parse_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_PARSE;
    } catch (const oscm::capacity_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_CAPACITY;
    } catch (const oscm::not_found_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_NOT_FOUND;
    } catch (const oscm::invalid_solution_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_INVALID_SOLUTION;
    } catch (const oscm::timeout_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_TIMEOUT;
    } catch (const std::invalid_argument &e) {
        g_last_error = e.what();
        return OSCM_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return OSCM_ERR_CAPACITY;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return OSCM_ERROR;
    }
}

char *copy_text(const std::string &text) {
    char *out = new char[text.size() + 1];
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

oscm::algorithm_id to_algorithm(oscm_algorithm algo) {
    switch (algo) {
        case OSCM_ALGO_AUTO: return oscm::algorithm_id::auto_select;
        case OSCM_ALGO_SLOW_DP: return oscm::algorithm_id::slow_dp;
        case OSCM_ALGO_FAST_DP: return oscm::algorithm_id::fast_dp;
        case OSCM_ALGO_MITM_DP: return oscm::algorithm_id::mitm_dp;
        case OSCM_ALGO_GOLDEN: return oscm::algorithm_id::golden;
        case OSCM_ALGO_SUBEXPO: return oscm::algorithm_id::subexpo;
        case OSCM_ALGO_BRUTE: return oscm::algorithm_id::brute;
    }
    throw std::invalid_argument("unknown algorithm enum value");
}

}  // namespace

extern "C" {

const char *oscm_version(void) { return "0.1.0"; }

const char *oscm_last_error(void) { return g_last_error.c_str(); }

oscm_status oscm_instance_parse(const char *text, size_t len, oscm_instance **out) {
    if (text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto inst = std::make_unique<oscm_instance>();
        inst->impl = oscm::parse_instance(std::string_view(text, len));
        *out = inst.release();
    });
}

oscm_status oscm_instance_read_file(const char *path, oscm_instance **out) {
    if (path == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    try {
        auto inst = std::make_unique<oscm_instance>();
        inst->impl = oscm::read_instance_file(path);
        *out = inst.release();
        return OSCM_OK;
    } catch (const oscm::parse_error &e) {
        g_last_error = e.what();
        return OSCM_ERR_PARSE;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return OSCM_ERR_IO;
    }
}

oscm_status oscm_instance_generate(uint32_t n_free, uint32_t n_fixed, double edge_probability,
                                   uint64_t seed, oscm_instance **out) {
    if (out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto inst = std::make_unique<oscm_instance>();
        inst->impl = oscm::generate_random_instance(n_free, n_fixed, edge_probability, seed);
        *out = inst.release();
    });
}

void oscm_instance_free(oscm_instance *inst) { delete inst; }

uint32_t oscm_instance_n_free(const oscm_instance *inst) { return inst->impl.n_free(); }
uint32_t oscm_instance_n_fixed(const oscm_instance *inst) { return inst->impl.n_fixed; }
uint64_t oscm_instance_edge_count(const oscm_instance *inst) { return inst->impl.edge_count; }

oscm_status oscm_instance_serialize(const oscm_instance *inst, char **out_text) {
    if (inst == nullptr || out_text == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out_text = copy_text(oscm::serialize_instance(inst->impl)); });
}

void oscm_text_free(char *text) { delete[] text; }

void oscm_solve_options_init(oscm_solve_options *opts) {
    if (opts == nullptr) return;
    opts->algorithm = OSCM_ALGO_AUTO;
    opts->threads = 1;
    opts->max_k = uint64_t{1} << 20;
    opts->width_cap = 30;
    opts->memory_budget = 0;
    opts->brute_cap = 9;
    opts->timeout_seconds = 0.0;
}

oscm_status oscm_solve(const oscm_instance *inst, const oscm_solve_options *opts,
                       oscm_result **out) {
    if (inst == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        oscm_solve_options defaults;
        oscm_solve_options_init(&defaults);
        const oscm_solve_options &o = opts ? *opts : defaults;

        oscm::solver_options so;
        so.algo = to_algorithm(o.algorithm);
        so.threads = o.threads;
        so.max_k = o.max_k;
        so.width_cap = o.width_cap;
        so.memory_budget = o.memory_budget;
        so.brute_cap = o.brute_cap;
        so.timeout_seconds = o.timeout_seconds;

        auto result = std::make_unique<oscm_result>();
        result->impl = oscm::solve(inst->impl, so);
        *out = result.release();
    });
}

void oscm_result_free(oscm_result *result) { delete result; }

uint64_t oscm_result_crossings(const oscm_result *result) { return result->impl.crossings; }

uint32_t oscm_result_size(const oscm_result *result) {
    return static_cast<uint32_t>(result->impl.perm.size());
}

oscm_status oscm_result_order(const oscm_result *result, uint32_t *buffer, size_t buffer_len) {
    if (result == nullptr || (buffer == nullptr && buffer_len > 0)) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    if (buffer_len < result->impl.perm.size()) {
        g_last_error = "buffer too small";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    for (std::size_t i = 0; i < result->impl.perm.size(); ++i) {
        buffer[i] = result->impl.perm.order[i];
    }
    return OSCM_OK;
}

oscm_status oscm_result_solution_text(const oscm_instance *inst, const oscm_result *result,
                                      char **out_text) {
    if (inst == nullptr || result == nullptr || out_text == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded(
        [&] { *out_text = copy_text(oscm::serialize_solution(inst->impl, result->impl.perm)); });
}

oscm_status oscm_count_crossings(const oscm_instance *inst, const uint32_t *order, size_t len,
                                 uint64_t *out) {
    if (inst == nullptr || (order == nullptr && len > 0) || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<oscm::vertex_t> vec(order, order + len);
        *out = oscm::count_crossings_order(inst->impl, vec);
    });
}

oscm_status oscm_verify_solution_text(const oscm_instance *inst, const char *text, size_t len,
                                      uint64_t *out) {
    if (inst == nullptr || text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        oscm::permutation p = oscm::parse_solution(inst->impl, std::string_view(text, len));
        *out = oscm::count_crossings(inst->impl, p);
    });
}

oscm_status oscm_characterize(const oscm_instance *inst, oscm_profile **out) {
    if (inst == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto profile = std::make_unique<oscm_profile>();
        profile->impl = oscm::characterize_instance(inst->impl);
        *out = profile.release();
    });
}

void oscm_profile_free(oscm_profile *profile) { delete profile; }

uint32_t oscm_profile_max_width(const oscm_profile *profile) { return profile->impl.max_width; }

uint32_t oscm_profile_positions(const oscm_profile *profile) {
    return static_cast<uint32_t>(profile->impl.widths.size());
}

uint32_t oscm_profile_width_at(const oscm_profile *profile, uint32_t t) {
    if (t >= profile->impl.widths.size()) return 0;
    return profile->impl.widths[t];
}

uint64_t oscm_profile_width_count(const oscm_profile *profile, uint32_t width) {
    if (width >= profile->impl.histogram.size()) return 0;
    return profile->impl.histogram[width];
}

oscm_status oscm_bench_run(const char *config_path, const char *output_override,
                           const char *format_override, int verbose) {
    if (config_path == nullptr) {
        g_last_error = "null argument";
        return OSCM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        oscm::bench_config cfg = oscm::load_bench_config(config_path);
        if (output_override != nullptr) cfg.output = output_override;
        if (format_override != nullptr) {
            cfg.format = format_override;
            if (cfg.format != "csv" && cfg.format != "json") {
                throw std::invalid_argument("report format must be csv or json");
            }
        }
        oscm::run_benchmark(cfg, verbose ? &std::cerr : nullptr);
    });
}

}  // extern "C"
