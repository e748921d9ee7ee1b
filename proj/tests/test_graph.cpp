#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qapf/graph.hpp"

using namespace qapf;

namespace {

Graph parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in, "mem");
}

std::string parse_error(const std::string& text)
{
    try {
        parse(text);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("clique-reductions")
{
    TEST_CASE("exact clique numbers of named graphs")
    {
        CHECK(max_clique_bruteforce(Graph::complete_graph(5)).size == 5);
        CHECK(max_clique_bruteforce(Graph::cycle(5)).size == 2);
        const auto p = max_clique_bruteforce(Graph::petersen());
        CHECK(p.size == 2);
        CHECK(oracle::clique_by_subsets(Graph::petersen()) == 2);
        CHECK(Graph::petersen().edge_count() == 15);
        CHECK(Graph::petersen().is_clique(p.witness));
        CHECK(max_clique_bruteforce(Graph(3)).size == 1);
        CHECK_THROWS_AS(max_clique_bruteforce(Graph(21)), std::invalid_argument);
    }

    TEST_CASE("branch and bound agrees with subset enumeration on random graphs")
    {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + trial % 12;
            const auto g = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
            const auto r = max_clique_bruteforce(g);
            REQUIRE(r.size == oracle::clique_by_subsets(g));
            REQUIRE(static_cast<int>(r.witness.size()) == r.size);
            REQUIRE(g.is_clique(r.witness));
            REQUIRE(largest_clique_up_to(g, 4) == std::min(r.size, 4));
        }
    }

    TEST_CASE("DIMACS and plain edge lists")
    {
        const auto d = parse("c comment\np edge 4 2\ne 1 2\ne 3 4\n");
        CHECK(d.n() == 4);
        CHECK(d.has_edge(2, 1));
        CHECK(d.has_edge(3, 4));
        CHECK_FALSE(d.has_edge(1, 3));

        const auto plain = parse("# header\n6\n1 2\n2 3\n");
        CHECK(plain.n() == 6);
        CHECK(plain.edge_count() == 2);
        CHECK(parse("1 5\n").n() == 5);

        CHECK(parse(to_dimacs(Graph::petersen())) == Graph::petersen());
    }

    TEST_CASE("parse errors carry the line number")
    {
        CHECK(parse_error("p edge 3 1\ne 1 4\n").find("mem:2") == 0);
        CHECK(parse_error("1 2\n2 x\n").find("mem:2") == 0);
        CHECK(parse_error("1 2\n\n3 3\n").find("mem:3") == 0);
        CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.col"), std::invalid_argument);
    }

    TEST_CASE("padding keeps edges and adds isolated vertices")
    {
        const auto g = Graph::cycle(5).with_isolated_vertices(7);
        CHECK(g.n() == 7);
        CHECK(g.edge_count() == 5);
        CHECK(g.neighbours(6) == 0);
        CHECK_THROWS_AS(g.with_isolated_vertices(6), std::invalid_argument);
        CHECK(Graph::complete_graph(4).complete());
        CHECK_FALSE(g.complete());
    }

    TEST_CASE("isomorphism class counts")
    {
        const std::vector<std::size_t> want{1, 2, 4, 11, 34, 156};
        for (int n = 1; n <= 6; ++n) CHECK(nonisomorphic_graphs(n).size() == want[static_cast<std::size_t>(n - 1)]);
        CHECK_THROWS_AS(nonisomorphic_graphs(7), std::invalid_argument);
    }
}
