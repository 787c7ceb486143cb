#include "hlspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hlspec {

namespace {

std::vector<std::vector<int>> neighbor_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const EdgeRecord& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

}  // namespace

Graph from_edge_list(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.vertex_count = vertex_count;
    g.edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u == v)
            throw std::invalid_argument("loop edge " + std::to_string(u) + " " + std::to_string(v) +
                                        " is not allowed");
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        g.edges.push_back({u, v});
    }
    return g;
}

bool is_simple(const Graph& g) {
    std::map<std::pair<int, int>, int> seen;
    for (const EdgeRecord& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        if (++seen[{key.first, key.second}] > 1) return false;
    }
    return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const auto adj = neighbor_lists(g);
    std::vector<int> color(g.vertex_count, -1);
    for (int root = 0; root < g.vertex_count; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bip;
    for (int v = 0; v < g.vertex_count; ++v)
        (color[v] == 0 ? bip.u : bip.w).push_back(v);
    return bip;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats stats;
    stats.sequence.assign(g.vertex_count, 0);
    for (const EdgeRecord& e : g.edges) {
        ++stats.sequence[e.u];
        ++stats.sequence[e.v];
    }
    if (g.vertex_count > 0) {
        stats.max_degree = *std::max_element(stats.sequence.begin(), stats.sequence.end());
        stats.min_degree = *std::min_element(stats.sequence.begin(), stats.sequence.end());
    }
    return stats;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const auto adj = neighbor_lists(g);
    std::vector<bool> visited(g.vertex_count, false);
    std::vector<std::vector<int>> components;
    for (int root = 0; root < g.vertex_count; ++root) {
        if (visited[root]) continue;
        std::vector<int> comp;
        std::deque<int> queue{root};
        visited[root] = true;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (int y : adj[x]) {
                if (!visited[y]) {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

std::optional<int> girth(const Graph& g) {
    std::map<std::pair<int, int>, int> mult;
    for (const EdgeRecord& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        ++mult[{key.first, key.second}];
    }
    for (const auto& [pair, count] : mult)
        if (count >= 2) return 2;

    // Simple graph from here on: the shortest cycle through an edge {u,v} is
    // 1 + dist(u, v) in the graph with that edge removed.
    const auto adj = neighbor_lists(g);
    std::optional<int> best;
    std::vector<int> dist(g.vertex_count);
    for (const auto& [pair, count] : mult) {
        const auto [u, v] = pair;
        std::fill(dist.begin(), dist.end(), -1);
        dist[u] = 0;
        std::deque<int> queue{u};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            if (best && dist[x] + 1 >= *best) break;  // cannot improve
            for (int y : adj[x]) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v] >= 0) {
            const int cycle = dist[v] + 1;
            if (!best || cycle < *best) best = cycle;
        }
    }
    return best;
}

RealSymmetricMatrix adjacency_matrix(const Graph& g) {
    RealSymmetricMatrix a(g.vertex_count);
    for (const EdgeRecord& e : g.edges) {
        a.set(e.u, e.v, a(e.u, e.v) + 1.0);
    }
    return a;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("graph file line " + std::to_string(line) + ": " + what);
}

}  // namespace

ParsedGraph parse_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_vertex_count = false;
    long long vertex_count = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<long long> voltages;

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank

        if (tag == "v") {
            if (have_vertex_count) parse_fail(lineno, "duplicate vertex-count line");
            if (!(ss >> vertex_count) || vertex_count < 0)
                parse_fail(lineno, "expected `v <n>` with nonnegative n");
            have_vertex_count = true;
        } else if (tag == "e") {
            if (!have_vertex_count) parse_fail(lineno, "edge line before the vertex-count line");
            long long u, v;
            if (!(ss >> u >> v)) parse_fail(lineno, "expected `e <u> <v> [<k>]`");
            long long k = 0;
            if (!(ss >> k)) {
                k = 0;
                ss.clear();  // optional voltage absent; surface non-numeric trailers below
            }
            if (u == v) parse_fail(lineno, "loop edge " + std::to_string(u) + " " + std::to_string(v));
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                parse_fail(lineno, "vertex out of range 0.." + std::to_string(vertex_count - 1));
            pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
            voltages.push_back(k);
        } else {
            parse_fail(lineno, "unknown directive `" + tag + "`");
        }
        std::string rest;
        if (ss >> rest) parse_fail(lineno, "trailing token `" + rest + "`");
    }
    if (!have_vertex_count) throw std::invalid_argument("graph file: missing `v <n>` line");

    ParsedGraph parsed;
    parsed.graph = from_edge_list(static_cast<int>(vertex_count), pairs);
    parsed.voltages = std::move(voltages);
    return parsed;
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g, const std::vector<long long>& voltages) {
    if (!voltages.empty() && voltages.size() != g.edges.size())
        throw std::invalid_argument("voltage list length does not match edge count");
    out << "v " << g.vertex_count << "\n";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        out << "e " << g.edges[i].u << " " << g.edges[i].v;
        if (!voltages.empty() && voltages[i] != 0) out << " " << voltages[i];
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const Graph& g, const std::vector<long long>& voltages) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_graph_text(out, g, voltages);
    if (!out) throw std::runtime_error("failed writing graph file: " + path);
}

}  // namespace hlspec
