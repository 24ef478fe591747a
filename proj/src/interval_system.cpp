#include "interval_system.hpp"

#include <algorithm>

namespace oscm {

interval_system build_interval_system(const bipartite_instance &inst) {
    const std::uint32_t n = inst.n_free();
    interval_system sys;
    sys.open_pos.assign(n, interval_system::npos);
    sys.close_pos.assign(n, interval_system::npos);

    // Bucket the open/close endpoints per fixed vertex, in free-vertex order.
    struct endpoint {
        vertex_t v;
        bool close;
    };
    std::vector<std::vector<endpoint>> buckets(inst.n_fixed);
    for (vertex_t a = 0; a < n; ++a) {
        const auto &neigh = inst.adjacency[a];
        if (neigh.empty()) {
            sys.isolated.push_back(a);
            continue;
        }
        buckets[neigh.front()].push_back({a, false});
        buckets[neigh.back()].push_back({a, true});
    }

    sys.events.reserve(2 * (n - sys.isolated.size()));
    auto emit = [&](vertex_t v, bool open) {
        std::uint32_t pos = static_cast<std::uint32_t>(sys.events.size());
        (open ? sys.open_pos : sys.close_pos)[v] = pos;
        sys.events.push_back({v, open});
    };
    for (const auto &bucket : buckets) {
        for (const endpoint &e : bucket) {
            if (e.close && inst.degree(e.v) > 1) emit(e.v, false);
        }
        for (const endpoint &e : bucket) {
            if (inst.degree(e.v) == 1) emit(e.v, !e.close);
        }
        for (const endpoint &e : bucket) {
            if (!e.close && inst.degree(e.v) > 1) emit(e.v, true);
        }
    }
    return sys;
}

width_profile characterize_instance(const bipartite_instance &inst) {
    interval_system sys = build_interval_system(inst);
    width_profile profile;
    profile.widths.reserve(sys.events.size());
    unsigned active = 0;
    for (const auto &e : sys.events) {
        active += e.open ? 1 : -1;
        profile.widths.push_back(active);
        profile.max_width = std::max(profile.max_width, active);
    }
    profile.histogram.assign(profile.max_width + 1, 0);
    for (unsigned w : profile.widths) ++profile.histogram[w];
    if (profile.widths.empty()) profile.histogram.clear();
    return profile;
}

}  // namespace oscm
