#include "qapf/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qapf {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    if (n < 0 || n > 64) throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
}

void Graph::add_edge(int u, int v)
{
    if (u < 1 || u > n_ || v < 1 || v > n_) {
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside [1," +
                                    std::to_string(n_) + "]");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
}

bool Graph::has_edge(int u, int v) const
{
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return (adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1U;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (auto mask : adj_) total += static_cast<std::size_t>(std::popcount(mask));
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::complete() const { return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

Graph Graph::with_isolated_vertices(int total) const
{
    if (total < n_) throw std::invalid_argument("cannot pad a graph to fewer vertices");
    Graph g(total);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
}

bool Graph::is_clique(const std::vector<int>& vertices) const
{
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (!has_edge(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

Graph Graph::complete_graph(int n)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u) g.add_edge(u, u % n + 1);
    return g;
}

Graph Graph::petersen()
{
    Graph g(10);
    for (int r = 0; r < 5; ++r) {
        g.add_edge(r + 1, (r + 1) % 5 + 1);          // outer cycle
        g.add_edge(r + 1, r + 6);                    // spokes
        g.add_edge(r + 6, (r + 2) % 5 + 6);          // inner pentagram
    }
    return g;
}

namespace {

[[noreturn]] void parse_error(const std::string& source, int line, const std::string& what)
{
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + what);
}

int read_vertex(std::istringstream& in, const std::string& source, int line)
{
    long long v = 0;
    if (!(in >> v)) parse_error(source, line, "expected a vertex index");
    if (v < 1 || v > 64) parse_error(source, line, "vertex index " + std::to_string(v) + " outside [1, 64]");
    return static_cast<int>(v);
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source)
{
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    int largest = 0;
    std::string text;
    int line = 0;
    bool seen_content = false;
    while (std::getline(in, text)) {
        ++line;
        std::istringstream tokens(text);
        std::string head;
        if (!(tokens >> head) || head[0] == '#' || head == "c") continue;
        if (head == "p") {
            std::string kind;
            long long n = 0;
            long long m = 0;
            if (!(tokens >> kind >> n >> m)) parse_error(source, line, "malformed problem line, expected 'p edge N M'");
            if (n < 0 || n > 64) parse_error(source, line, "vertex count " + std::to_string(n) + " outside [0, 64]");
            declared = static_cast<int>(n);
        } else if (head == "e") {
            const int u = read_vertex(tokens, source, line);
            const int v = read_vertex(tokens, source, line);
            edges.emplace_back(u, v);
        } else {
            std::istringstream whole(text);
            long long first = 0;
            if (!(whole >> first)) parse_error(source, line, "unrecognised line '" + text + "'");
            long long second = 0;
            if (!(whole >> second)) {
                if (seen_content) parse_error(source, line, "expected two vertex indices");
                if (first < 0 || first > 64) parse_error(source, line, "vertex count outside [0, 64]");
                declared = static_cast<int>(first);
            } else {
                if (first < 1 || first > 64 || second < 1 || second > 64) {
                    parse_error(source, line, "vertex index outside [1, 64]");
                }
                edges.emplace_back(static_cast<int>(first), static_cast<int>(second));
            }
            std::string rest;
            if (whole >> rest) parse_error(source, line, "trailing token '" + rest + "'");
        }
        seen_content = true;
        if (!edges.empty()) largest = std::max({largest, edges.back().first, edges.back().second});
    }
    const int n = declared >= 0 ? declared : largest;
    if (largest > n) parse_error(source, line, "edge endpoint " + std::to_string(largest) + " exceeds vertex count " + std::to_string(n));
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) parse_error(source, line, "self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file " + path);
    return parse_graph(in, path);
}

std::string to_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    CliqueResult run()
    {
        const std::uint64_t all = g_.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.n()) - 1;
        expand(all);
        CliqueResult r;
        r.size = static_cast<int>(best_.size());
        r.witness = best_;
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }

private:
    // Greedy colouring of the candidate set; vertices come out in nondecreasing colour.
    void colour(std::uint64_t candidates, std::vector<int>& order, std::vector<int>& bound) const
    {
        int c = 0;
        while (candidates) {
            ++c;
            std::uint64_t available = candidates;
            while (available) {
                const int v = std::countr_zero(available);
                available &= ~(std::uint64_t{1} << v);
                available &= ~g_.neighbours(v + 1);
                candidates &= ~(std::uint64_t{1} << v);
                order.push_back(v + 1);
                bound.push_back(c);
            }
        }
    }

    void expand(std::uint64_t candidates)
    {
        std::vector<int> order;
        std::vector<int> bound;
        colour(candidates, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[idx]) <= best_.size()) return;
            const int v = order[idx];
            current_.push_back(v);
            const std::uint64_t next = candidates & g_.neighbours(v);
            if (next == 0) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            candidates &= ~(std::uint64_t{1} << (v - 1));
        }
    }

    const Graph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
};

int extend_up_to(const Graph& g, std::uint64_t candidates, int size, int limit)
{
    if (size == limit || candidates == 0) return size;
    int best = size;
    while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= ~(std::uint64_t{1} << v);
        best = std::max(best, extend_up_to(g, candidates & g.neighbours(v + 1), size + 1, limit));
        if (best == limit) break;
    }
    return best;
}

}  // namespace

CliqueResult max_clique_bruteforce(const Graph& g, int cap)
{
    if (g.n() > cap) {
        throw std::invalid_argument("exact clique search capped at n = " + std::to_string(cap) + ", got " +
                                    std::to_string(g.n()));
    }
    return CliqueSearch(g).run();
}

int largest_clique_up_to(const Graph& g, int limit)
{
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    return extend_up_to(g, all, 0, limit);
}

std::vector<Graph> nonisomorphic_graphs(int n)
{
    if (n < 1 || n > 6) throw std::invalid_argument("isomorphism-class enumeration supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    }
    // slot_of[u][v] is the bit of edge {u, v}.
    std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1));
    for (std::size_t s = 0; s < slots.size(); ++s) {
        slot_of[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = static_cast<int>(s);
        slot_of[static_cast<std::size_t>(slots[s].second)][static_cast<std::size_t>(slots[s].first)] = static_cast<int>(s);
    }
    std::vector<std::vector<int>> relabel;  // relabel[p][s]: image slot of s under permutation p
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> image;
        for (auto [u, v] : slots) {
            image.push_back(slot_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(u - 1)])]
                                   [static_cast<std::size_t>(perm[static_cast<std::size_t>(v - 1)])]);
        }
        relabel.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canonical;
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t code = 0; code < total; ++code) {
        std::uint32_t least = code;
        for (const auto& image : relabel) {
            std::uint32_t mapped = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if ((code >> s) & 1U) mapped |= std::uint32_t{1} << image[s];
            }
            least = std::min(least, mapped);
            if (least < code) break;
        }
        if (least == code) canonical.insert(code);
    }
    std::vector<Graph> out;
    for (std::uint32_t code : canonical) {
        Graph g(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((code >> s) & 1U) g.add_edge(slots[s].first, slots[s].second);
        }
        out.push_back(std::move(g));
    }
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace qapf
