#pragma once

// Reference computations written straight from the definitions, sharing no code with
// the library beyond its value types. Tests compare library results against these.

#include <cstdint>
#include <vector>

#include "qapf/family_params.hpp"
#include "qapf/graph.hpp"
#include "qapf/permutation.hpp"
#include "qapf/rational.hpp"
#include "qapf/ypoint.hpp"

namespace oracle {

/// Full n^2 x n^2 matrix over flat indices 1..n^2, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<qapf::Rational> cells;

    qapf::Rational& at(int f, int g) { return cells[static_cast<std::size_t>((f - 1) * n * n + (g - 1))]; }
    const qapf::Rational& at(int f, int g) const
    {
        return cells[static_cast<std::size_t>((f - 1) * n * n + (g - 1))];
    }
    qapf::Rational y(qapf::PairIndex a, qapf::PairIndex b) const
    {
        return at(n * (a.i - 1) + a.j, n * (b.i - 1) + b.j);
    }
};

/// vec(P_sigma) vec(P_sigma)^T.
DenseMatrix outer_product_vertex(const qapf::Permutation& sigma);
DenseMatrix dense_point(const qapf::YPoint& y);

/// Slack of the family's inequality at Y, from the displayed sums:
/// rhs - lhs for <= families, lhs - rhs for >= families.
qapf::Rational family_slack(const qapf::FamilyParams& params, const DenseMatrix& y);

/// Largest clique by checking every vertex subset.
int clique_by_subsets(const qapf::Graph& g);

/// Canonical QAP1 parameter sets with pattern length m, counted by nested loops.
std::uint64_t count_qap1_direct(int n, int m);

}  // namespace oracle
