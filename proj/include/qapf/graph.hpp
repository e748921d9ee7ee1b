#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qapf {

inline constexpr int kDefaultCliqueCap = 20;

/// Simple undirected graph on vertices 1..n, n <= 64, stored as adjacency bitmasks.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    /// Bit v-1 is set for every neighbour v of u.
    std::uint64_t neighbours(int u) const { return adj_[static_cast<std::size_t>(u - 1)]; }
    std::size_t edge_count() const;
    /// Canonical (u < v) edge list in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    bool complete() const;
    /// Same edges on `total` >= n vertices; the extra vertices are isolated.
    Graph with_isolated_vertices(int total) const;
    bool is_clique(const std::vector<int>& vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

    static Graph complete_graph(int n);
    static Graph cycle(int n);
    static Graph petersen();

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

/// Reads DIMACS ("c" comments, "p edge N M", "e u v") or plain "u v" lines.
/// Plain lists may start with a single-integer line giving the vertex count;
/// otherwise the largest index seen is used. Errors name the source and line.
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
std::string to_dimacs(const Graph& g);

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;  // sorted vertices
};

/// Exact maximum clique by branch and bound with a greedy colouring bound.
/// Throws std::invalid_argument when n exceeds the cap.
CliqueResult max_clique_bruteforce(const Graph& g, int cap = kDefaultCliqueCap);

/// Largest clique of size at most `limit`, by exhaustive extension; O(n^limit).
int largest_clique_up_to(const Graph& g, int limit);

/// One representative per isomorphism class of graphs on n vertices, 1 <= n <= 6,
/// ordered by their canonical edge codes. Counts for n = 1..6: 1, 2, 4, 11, 34, 156.
std::vector<Graph> nonisomorphic_graphs(int n);

/// G(n, p) with a caller-owned generator.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace qapf
