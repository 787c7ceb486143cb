#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlspec/linalg.hpp"

namespace hlspec {

// One parallel edge, endpoints kept in the orientation they were supplied.
// The position of a record in Graph::edges is its stable edge id.
struct EdgeRecord {
    int u = 0;
    int v = 0;
};

// Loop-free multigraph on vertices 0..n-1. Parallel edges are separate
// records; the adjacency entry a_uv is the number of records joining u, v.
struct Graph {
    int vertex_count = 0;
    std::vector<EdgeRecord> edges;

    int edge_multiplicity_total() const { return static_cast<int>(edges.size()); }
};

// A record traversed in a chosen direction. Reversal keeps the edge id.
struct OrientedEdge {
    int edge_id = 0;
    int tail = 0;
    int head = 0;

    OrientedEdge reversed() const { return {edge_id, head, tail}; }
    bool operator==(const OrientedEdge&) const = default;
};

struct Bipartition {
    std::vector<int> u;  // sorted ascending; holds the root of every component
    std::vector<int> w;  // sorted ascending
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> sequence;  // indexed by vertex, counts multiplicity
};

// Builds a graph, rejecting loops and out-of-range endpoints. Repeated pairs
// accumulate multiplicity as separate records.
Graph from_edge_list(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

// True when no two records join the same pair of vertices.
bool is_simple(const Graph& g);

// Two-coloring by breadth-first layering when one exists. Component roots are
// the lowest-index vertices of their components and always land in U.
std::optional<Bipartition> bipartition(const Graph& g);

DegreeStats degree_stats(const Graph& g);

// Vertex partition into connected components, each sorted ascending, ordered
// by smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Length of a shortest cycle; 2 for a doubled edge, absent for forests.
std::optional<int> girth(const Graph& g);

RealSymmetricMatrix adjacency_matrix(const Graph& g);

// --- graph text format ---------------------------------------------------
//
//   # comment to end of line, blank lines ignored
//   v <n>            exactly one, first non-comment line
//   e <u> <v> [<k>]  one oriented edge record; optional k is the voltage of
//                    (u -> v), default 0; repeated lines accumulate
//                    multiplicity

struct ParsedGraph {
    Graph graph;
    std::vector<long long> voltages;  // one per edge record, as written
};

// Parses the text format above. Errors carry the offending line number.
ParsedGraph parse_graph_text(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);

// Writes the text format; a zero voltage is omitted from its `e` line.
// Pass an empty voltage list to emit all-zero voltages.
void write_graph_text(std::ostream& out, const Graph& g, const std::vector<long long>& voltages = {});
void write_graph_file(const std::string& path, const Graph& g, const std::vector<long long>& voltages = {});

}  // namespace hlspec
