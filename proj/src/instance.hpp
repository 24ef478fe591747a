#ifndef OSCM_INSTANCE_HPP
#define OSCM_INSTANCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace oscm {

// A two-layer graph: the fixed layer keeps its given left-to-right order,
// the free layer is the one we permute. Neighbor lists are sorted fixed-layer
// indices; instances are immutable after construction and safe to share
// across threads.
struct bipartite_instance {
    std::uint32_t n_fixed = 0;
    std::vector<std::vector<vertex_t>> adjacency;
    std::uint64_t edge_count = 0;

    std::uint32_t n_free() const { return static_cast<std::uint32_t>(adjacency.size()); }
    std::uint32_t degree(vertex_t a) const { return static_cast<std::uint32_t>(adjacency[a].size()); }
    bool operator==(const bipartite_instance &) const = default;
};

// PACE OCR text: comment lines start with 'c'; header
// `p ocr <n_fixed> <n_free> <edges>`; one edge per line `<fixed_id> <free_id>`
// with fixed ids 1..n_fixed and free ids n_fixed+1..n_fixed+n_free.
// Malformed input (bad header, endpoint out of range, duplicate edge, edge
// count mismatch) raises parse_error carrying the offending line number.
bipartite_instance parse_instance(std::string_view text);
bipartite_instance read_instance_file(const std::string &path);

std::string serialize_instance(const bipartite_instance &inst);

// Solution text: the free vertices' original 1-based ids, one per line, in
// the chosen order.
std::string serialize_solution(const bipartite_instance &inst, const permutation &p);
permutation parse_solution(const bipartite_instance &inst, std::string_view text);

// Each (free, fixed) pair becomes an edge independently with the given
// probability. Draws come from std::mt19937_64 seeded with `seed`, one draw
// per pair in row-major (free-major) order; a pair is kept iff the draw's top
// 53 bits fall below round(probability * 2^53). The mt19937_64 output
// sequence is pinned by the C++ standard, so equal seeds reproduce equal
// instances on any implementation.
bipartite_instance generate_random_instance(std::uint32_t n_free, std::uint32_t n_fixed,
                                            double edge_probability, std::uint64_t seed);

// Number of edge pairs ((a,b),(c,d)) with a drawn before c and b > d.
// Deliberately routed through an inversion count over the fixed layer, not
// through the crossing matrix, so the two can cross-check each other.
crossing_t count_crossings(const bipartite_instance &inst, const permutation &p);

// Same count for a raw order; validates that `order` is a permutation of the
// free vertices.
crossing_t count_crossings_order(const bipartite_instance &inst,
                                 const std::vector<vertex_t> &order);

}  // namespace oscm

#endif
