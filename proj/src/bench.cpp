#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "interval_system.hpp"

namespace oscm {

namespace {

using nlohmann::json;

std::string file_stem(const std::string &path) {
    return std::filesystem::path(path).stem().string();
}

void write_report_file(const std::vector<bench_record> &records, const bench_config &cfg) {
    if (cfg.output.empty()) return;
    std::ofstream out(cfg.output, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write report: " + cfg.output);
    }
    emit_report(records, cfg.format, out);
    out.flush();
}

}  // namespace

bench_config load_bench_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open bench config: " + path);
    }
    json doc = json::parse(in);

    bench_config cfg;
    cfg.algo = parse_algorithm(doc.at("algorithm").get<std::string>());
    if (doc.contains("threads")) {
        cfg.thread_counts = doc.at("threads").get<std::vector<unsigned>>();
    }
    if (cfg.thread_counts.empty() || cfg.thread_counts.front() != 1 ||
        !std::is_sorted(cfg.thread_counts.begin(), cfg.thread_counts.end())) {
        throw std::runtime_error("bench config: threads must be ascending and start at 1");
    }
    cfg.repetitions = doc.value("repetitions", 3u);
    if (cfg.repetitions < 1) {
        throw std::runtime_error("bench config: repetitions must be >= 1");
    }
    cfg.warmup = doc.value("warmup", 1u);
    cfg.timeout_seconds = doc.value("timeout_seconds", 0.0);
    cfg.instances = doc.at("instances").get<std::vector<std::string>>();
    if (doc.contains("filter")) {
        const json &f = doc.at("filter");
        if (f.contains("max_width")) cfg.filter.max_width = f.at("max_width").get<unsigned>();
        if (f.contains("max_n_free"))
            cfg.filter.max_n_free = f.at("max_n_free").get<std::uint32_t>();
        if (f.contains("max_edges")) cfg.filter.max_edges = f.at("max_edges").get<std::uint64_t>();
    }
    cfg.output = doc.value("output", std::string{});
    cfg.format = doc.value("format", std::string{"csv"});
    if (cfg.format != "csv" && cfg.format != "json") {
        throw std::runtime_error("bench config: format must be csv or json");
    }
    cfg.max_k = doc.value("max_k", std::uint64_t{1} << 20);
    cfg.width_cap = doc.value("width_cap", 30u);
    cfg.memory_budget = doc.value("memory_budget", std::size_t{0});
    return cfg;
}

std::uint64_t median_ns(std::vector<std::uint64_t> samples) {
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return (samples[mid - 1] + samples[mid]) / 2;
}

std::vector<std::size_t> filter_dataset(const std::vector<bipartite_instance> &instances,
                                        const filter_criteria &criteria,
                                        std::vector<instance_characteristics> *report) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const bipartite_instance &inst = instances[i];
        instance_characteristics ch;
        ch.id = std::to_string(i);
        ch.n_free = inst.n_free();
        ch.edges = inst.edge_count;
        ch.max_width = characterize_instance(inst).max_width;
        ch.kept = (!criteria.max_width || ch.max_width <= *criteria.max_width) &&
                  (!criteria.max_n_free || ch.n_free <= *criteria.max_n_free) &&
                  (!criteria.max_edges || ch.edges <= *criteria.max_edges);
        if (ch.kept) kept.push_back(i);
        if (report) report->push_back(ch);
    }
    return kept;
}

void enforce_cross_thread_consistency(const std::vector<bench_record> &records) {
    std::map<std::string, crossing_t> seen;
    for (const bench_record &r : records) {
        if (r.status != "ok") continue;
        auto [it, inserted] = seen.emplace(r.instance_id, r.crossings);
        if (!inserted && it->second != r.crossings) {
            throw std::runtime_error("crossing-count mismatch across thread counts on instance " +
                                     r.instance_id + ": " + std::to_string(it->second) + " vs " +
                                     std::to_string(r.crossings));
        }
    }
}

std::vector<bench_record> run_benchmark(const bench_config &cfg, std::ostream *progress) {
    std::vector<bipartite_instance> instances;
    std::vector<std::string> ids;
    for (const std::string &path : cfg.instances) {
        instances.push_back(read_instance_file(path));
        ids.push_back(file_stem(path));
    }
    std::vector<std::size_t> kept = filter_dataset(instances, cfg.filter);

    solver_options base;
    base.algo = cfg.algo;
    base.max_k = cfg.max_k;
    base.width_cap = cfg.width_cap;
    base.memory_budget = cfg.memory_budget;
    base.timeout_seconds = cfg.timeout_seconds;

    std::vector<bench_record> records;
    for (std::size_t idx : kept) {
        const bipartite_instance &inst = instances[idx];
        std::uint64_t t1_median = 0;
        for (unsigned p : cfg.thread_counts) {
            bench_record rec;
            rec.instance_id = ids[idx];
            rec.algo = algorithm_name(cfg.algo);
            rec.n = inst.n_free();
            rec.m = inst.n_fixed;
            rec.edges = inst.edge_count;
            rec.threads = p;

            solver_options opts = base;
            opts.threads = p;
            try {
                for (unsigned wu = 0; wu < cfg.warmup; ++wu) {
                    (void)solve(inst, opts);
                }
                std::vector<std::uint64_t> samples;
                samples.reserve(cfg.repetitions);
                crossing_t crossings = 0;
                for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
                    auto begin = std::chrono::steady_clock::now();
                    solve_result res = solve(inst, opts);
                    auto end = std::chrono::steady_clock::now();
                    samples.push_back(static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin)
                            .count()));
                    // Never trust the solver's count: re-verify the order.
                    crossing_t checked = count_crossings(inst, res.perm);
                    if (checked != res.crossings) {
                        throw std::runtime_error("solver reported " +
                                                 std::to_string(res.crossings) +
                                                 " crossings but its order verifies to " +
                                                 std::to_string(checked));
                    }
                    crossings = res.crossings;
                }
                rec.time_ns = median_ns(samples);
                rec.crossings = crossings;
                if (p == 1) t1_median = rec.time_ns;
                rec.speedup = (t1_median > 0 && rec.time_ns > 0)
                                  ? static_cast<double>(t1_median) / static_cast<double>(rec.time_ns)
                                  : 0.0;
                rec.status = "ok";
            } catch (const timeout_error &) {
                rec.status = "timeout";
            } catch (const capacity_error &) {
                rec.status = "capacity-error";
            }
            records.push_back(rec);
            write_report_file(records, cfg);
            if (progress) {
                *progress << rec.instance_id << " p=" << rec.threads << " status=" << rec.status
                          << " time_ns=" << rec.time_ns << " crossings=" << rec.crossings
                          << " speedup=" << rec.speedup << '\n';
            }
        }
    }
    enforce_cross_thread_consistency(records);
    return records;
}

void emit_report(const std::vector<bench_record> &records, const std::string &format,
                 std::ostream &out) {
    if (format == "csv") {
        out << "instance,algo,n,m,edges,threads,time_ns,crossings,speedup,status\n";
        for (const bench_record &r : records) {
            out << r.instance_id << ',' << r.algo << ',' << r.n << ',' << r.m << ',' << r.edges
                << ',' << r.threads << ',' << r.time_ns << ',' << r.crossings << ','
                << r.speedup << ',' << r.status << '\n';
        }
        return;
    }
    if (format == "json") {
        json arr = json::array();
        for (const bench_record &r : records) {
            arr.push_back({{"instance", r.instance_id},
                           {"algo", r.algo},
                           {"n", r.n},
                           {"m", r.m},
                           {"edges", r.edges},
                           {"threads", r.threads},
                           {"time_ns", r.time_ns},
                           {"crossings", r.crossings},
                           {"speedup", r.speedup},
                           {"status", r.status}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    throw std::invalid_argument("report format must be csv or json");
}

std::vector<bench_record> parse_json_report(const std::string &text) {
    json arr = json::parse(text);
    std::vector<bench_record> records;
    for (const json &item : arr) {
        bench_record r;
        r.instance_id = item.at("instance").get<std::string>();
        r.algo = item.at("algo").get<std::string>();
        r.n = item.at("n").get<std::uint32_t>();
        r.m = item.at("m").get<std::uint32_t>();
        r.edges = item.at("edges").get<std::uint64_t>();
        r.threads = item.at("threads").get<unsigned>();
        r.time_ns = item.at("time_ns").get<std::uint64_t>();
        r.crossings = item.at("crossings").get<crossing_t>();
        r.speedup = item.at("speedup").get<double>();
        r.status = item.at("status").get<std::string>();
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace oscm
