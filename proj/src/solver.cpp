#include "solver.hpp"

#include "bitmask_solver.hpp"
#include "crossing.hpp"
#include "golden_solver.hpp"
#include "interval_system.hpp"
#include "sweep_solver.hpp"
#include "sysinfo.hpp"

namespace oscm {

algorithm_id parse_algorithm(std::string_view name) {
    if (name == "auto") return algorithm_id::auto_select;
    if (name == "slow-dp") return algorithm_id::slow_dp;
    if (name == "fast-dp") return algorithm_id::fast_dp;
    if (name == "mitm-dp") return algorithm_id::mitm_dp;
    if (name == "golden") return algorithm_id::golden;
    if (name == "subexpo") return algorithm_id::subexpo;
    if (name == "brute") return algorithm_id::brute;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

const char *algorithm_name(algorithm_id id) {
    switch (id) {
        case algorithm_id::auto_select: return "auto";
        case algorithm_id::slow_dp: return "slow-dp";
        case algorithm_id::fast_dp: return "fast-dp";
        case algorithm_id::mitm_dp: return "mitm-dp";
        case algorithm_id::golden: return "golden";
        case algorithm_id::subexpo: return "subexpo";
        case algorithm_id::brute: return "brute";
    }
    return "?";
}

algorithm_id select_algorithm(const bipartite_instance &inst, const solver_options &opts) {
    if (opts.algo != algorithm_id::auto_select) return opts.algo;
    width_profile profile = characterize_instance(inst);
    if (profile.max_width <= opts.width_cap) return algorithm_id::subexpo;
    bitmask_options mask_opts;
    std::size_t budget = opts.memory_budget ? opts.memory_budget : default_memory_budget();
    std::size_t need = inst.n_free() >= 64
                           ? std::numeric_limits<std::size_t>::max()
                           : (std::size_t{1} << inst.n_free()) * sizeof(crossing_t) +
                                 f_oracle::table_bytes(inst.n_free(), dp_variant::mitm);
    if (inst.n_free() <= mask_opts.cap_mitm && need <= budget) return algorithm_id::mitm_dp;
    return algorithm_id::golden;
}

solve_result solve(const bipartite_instance &inst, const solver_options &opts) {
    if (opts.threads < 1) {
        throw std::invalid_argument("threads must be >= 1");
    }
    deadline limit =
        opts.timeout_seconds > 0 ? deadline::after(opts.timeout_seconds) : deadline{};

    switch (select_algorithm(inst, opts)) {
        case algorithm_id::brute:
            return brute_force_solve(inst, opts.brute_cap);
        case algorithm_id::slow_dp:
        case algorithm_id::fast_dp:
        case algorithm_id::mitm_dp: {
            bitmask_options mask_opts;
            algorithm_id id = select_algorithm(inst, opts);
            mask_opts.variant = id == algorithm_id::slow_dp  ? dp_variant::slow
                                : id == algorithm_id::fast_dp ? dp_variant::fast
                                                              : dp_variant::mitm;
            mask_opts.threads = opts.threads;
            mask_opts.memory_budget = opts.memory_budget;
            mask_opts.limit = limit;
            return solve_bitmask(inst, mask_opts);
        }
        case algorithm_id::golden: {
            golden_options g;
            g.threads = opts.threads;
            g.max_k = opts.max_k;
            g.limit = limit;
            return solve_golden(inst, g);
        }
        case algorithm_id::subexpo: {
            sweep_options s;
            s.threads = opts.threads;
            s.width_cap = opts.width_cap;
            s.memory_budget = opts.memory_budget;
            s.limit = limit;
            return solve_sweep(inst, s);
        }
        case algorithm_id::auto_select:
            break;  // unreachable, select_algorithm resolved it
    }
    throw std::logic_error("unresolved algorithm selection");
}

}  // namespace oscm
