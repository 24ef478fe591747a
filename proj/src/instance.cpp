#include "instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace oscm {

permutation permutation::from_order(std::vector<vertex_t> order) {
    const std::size_t n = order.size();
    std::vector<vertex_t> inverse(n, static_cast<vertex_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        vertex_t v = order[i];
        if (v >= n) {
            throw invalid_solution_error("vertex id " + std::to_string(v) + " out of range");
        }
        if (inverse[v] != static_cast<vertex_t>(n)) {
            throw invalid_solution_error("vertex " + std::to_string(v) + " appears twice");
        }
        inverse[v] = static_cast<vertex_t>(i);
    }
    permutation p;
    p.order = std::move(order);
    p.inverse = std::move(inverse);
    return p;
}

namespace {

struct token_line {
    std::vector<std::string_view> tokens;
    std::size_t number = 0;
};

// Splits `text` into whitespace-tokenized lines, dropping blank and comment
// lines but remembering 1-based line numbers.
std::vector<token_line> tokenize(std::string_view text) {
    std::vector<token_line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        token_line tl;
        tl.number = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) tl.tokens.push_back(line.substr(start, i - start));
        }
        if (tl.tokens.empty()) continue;
        if (tl.tokens[0] == "c") continue;
        lines.push_back(std::move(tl));
        if (end == text.size()) break;
    }
    return lines;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no, const char *what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error(line_no, std::string("expected ") + what + ", got '" +
                                       std::string(token) + "'");
    }
    return value;
}

}  // namespace

bipartite_instance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        throw parse_error(1, "missing 'p ocr' header");
    }

    const token_line &header = lines[0];
    if (header.tokens.size() != 5 || header.tokens[0] != "p" || header.tokens[1] != "ocr") {
        throw parse_error(header.number, "malformed header, expected 'p ocr <n_fixed> <n_free> <edges>'");
    }
    std::uint64_t n_fixed = parse_number(header.tokens[2], header.number, "fixed-vertex count");
    std::uint64_t n_free = parse_number(header.tokens[3], header.number, "free-vertex count");
    std::uint64_t edges = parse_number(header.tokens[4], header.number, "edge count");
    if (n_fixed > 0xffffffffull || n_free > 0xffffffffull) {
        throw parse_error(header.number, "vertex count does not fit 32 bits");
    }
    if (edges > n_fixed * n_free) {
        throw parse_error(header.number, "edge count " + std::to_string(edges) +
                                             " exceeds the " + std::to_string(n_fixed * n_free) +
                                             " possible simple edges");
    }

    bipartite_instance inst;
    inst.n_fixed = static_cast<std::uint32_t>(n_fixed);
    inst.adjacency.resize(n_free);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges * 2);
    std::size_t next = 1;
    for (std::uint64_t e = 0; e < edges; ++e) {
        if (next >= lines.size()) {
            std::size_t last = lines.empty() ? 1 : lines.back().number;
            throw parse_error(last, "declared " + std::to_string(edges) + " edges, found " +
                                        std::to_string(e));
        }
        const token_line &tl = lines[next++];
        if (tl.tokens.size() != 2) {
            throw parse_error(tl.number, "expected '<fixed_id> <free_id>'");
        }
        std::uint64_t fixed_id = parse_number(tl.tokens[0], tl.number, "fixed id");
        std::uint64_t free_id = parse_number(tl.tokens[1], tl.number, "free id");
        if (fixed_id < 1 || fixed_id > n_fixed) {
            throw parse_error(tl.number, "fixed endpoint " + std::to_string(fixed_id) +
                                             " out of range 1.." + std::to_string(n_fixed));
        }
        if (free_id < n_fixed + 1 || free_id > n_fixed + n_free) {
            throw parse_error(tl.number, "free endpoint " + std::to_string(free_id) +
                                             " out of range " + std::to_string(n_fixed + 1) +
                                             ".." + std::to_string(n_fixed + n_free));
        }
        vertex_t b = static_cast<vertex_t>(fixed_id - 1);
        vertex_t a = static_cast<vertex_t>(free_id - n_fixed - 1);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (!seen.insert(key).second) {
            throw parse_error(tl.number, "duplicate edge");
        }
        inst.adjacency[a].push_back(b);
    }
    if (next < lines.size()) {
        throw parse_error(lines[next].number, "content after last declared edge");
    }

    for (auto &list : inst.adjacency) {
        std::sort(list.begin(), list.end());
    }
    inst.edge_count = edges;
    return inst;
}

bipartite_instance read_instance_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const bipartite_instance &inst) {
    std::ostringstream out;
    out << "p ocr " << inst.n_fixed << ' ' << inst.n_free() << ' ' << inst.edge_count << '\n';
    for (vertex_t a = 0; a < inst.n_free(); ++a) {
        for (vertex_t b : inst.adjacency[a]) {
            out << (b + 1) << ' ' << (inst.n_fixed + a + 1) << '\n';
        }
    }
    return out.str();
}

std::string serialize_solution(const bipartite_instance &inst, const permutation &p) {
    if (p.size() != inst.n_free()) {
        throw invalid_solution_error("solution size does not match instance");
    }
    std::ostringstream out;
    for (vertex_t a : p.order) {
        out << (inst.n_fixed + a + 1) << '\n';
    }
    return out.str();
}

permutation parse_solution(const bipartite_instance &inst, std::string_view text) {
    auto lines = tokenize(text);
    std::vector<vertex_t> order;
    order.reserve(lines.size());
    for (const token_line &tl : lines) {
        if (tl.tokens.size() != 1) {
            throw parse_error(tl.number, "expected one vertex id per line");
        }
        std::uint64_t id = parse_number(tl.tokens[0], tl.number, "free id");
        if (id < inst.n_fixed + 1ull || id > inst.n_fixed + static_cast<std::uint64_t>(inst.n_free())) {
            throw invalid_solution_error("id " + std::to_string(id) + " is not a free vertex");
        }
        order.push_back(static_cast<vertex_t>(id - inst.n_fixed - 1));
    }
    if (order.size() != inst.n_free()) {
        throw invalid_solution_error("solution lists " + std::to_string(order.size()) +
                                     " vertices, instance has " + std::to_string(inst.n_free()));
    }
    return permutation::from_order(std::move(order));
}

bipartite_instance generate_random_instance(std::uint32_t n_free, std::uint32_t n_fixed,
                                            double edge_probability, std::uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("edge probability must be in [0, 1]");
    }
    // Threshold over the top 53 bits of each draw; p = 1 maps to 2^53 which
    // every draw is below.
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(edge_probability * 9007199254740992.0);

    bipartite_instance inst;
    inst.n_fixed = n_fixed;
    inst.adjacency.resize(n_free);

    std::mt19937_64 rng(seed);
    for (vertex_t a = 0; a < n_free; ++a) {
        for (vertex_t b = 0; b < n_fixed; ++b) {
            if ((rng() >> 11) < threshold) {
                inst.adjacency[a].push_back(b);
                ++inst.edge_count;
            }
        }
    }
    return inst;
}

crossing_t count_crossings_order(const bipartite_instance &inst,
                                 const std::vector<vertex_t> &order) {
    const std::uint32_t n = inst.n_free();
    if (order.size() != n) {
        throw invalid_solution_error("order size does not match instance");
    }
    {
        std::vector<bool> seen(n, false);
        for (vertex_t v : order) {
            if (v >= n || seen[v]) {
                throw invalid_solution_error("order is not a permutation of the free layer");
            }
            seen[v] = true;
        }
    }
    if (inst.n_fixed == 0 || inst.edge_count == 0) return 0;

    // Fenwick tree over fixed positions: for each newly placed vertex, edges
    // already placed with a strictly larger fixed endpoint each cross it.
    std::vector<std::uint64_t> tree(inst.n_fixed + 1, 0);
    auto add = [&](std::uint32_t b) {
        for (std::uint32_t i = b + 1; i <= inst.n_fixed; i += i & (~i + 1)) ++tree[i];
    };
    auto count_le = [&](std::uint32_t b) {
        std::uint64_t s = 0;
        for (std::uint32_t i = b + 1; i > 0; i -= i & (~i + 1)) s += tree[i];
        return s;
    };

    crossing_t crossings = 0;
    std::uint64_t placed = 0;
    for (vertex_t v : order) {
        for (vertex_t b : inst.adjacency[v]) {
            crossings += placed - count_le(b);
        }
        for (vertex_t b : inst.adjacency[v]) {
            add(b);
        }
        placed += inst.adjacency[v].size();
    }
    return crossings;
}

crossing_t count_crossings(const bipartite_instance &inst, const permutation &p) {
    return count_crossings_order(inst, p.order);
}

}  // namespace oscm
