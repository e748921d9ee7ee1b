#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qapf/rational.hpp"
#include "qapf/vertex.hpp"

namespace qapf {

/// Candidate point for membership testing: a symmetric n^2 x n^2 matrix with exact
/// rational entries. Symmetry is structural since cells are unordered.
class YPoint {
public:
    explicit YPoint(int n, std::string provenance = {});

    static YPoint from_vertex(const QapVertex& vertex);

    int n() const { return n_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string text) { provenance_ = std::move(text); }

    void set(UPair cell, Rational value);
    void set(PairIndex x, PairIndex y, Rational value);
    Rational value(UPair cell) const;
    Rational value(PairIndex x, PairIndex y) const;

    /// Nonzero cells only.
    const std::map<UPair, Rational>& values() const { return values_; }

private:
    int n_;
    std::string provenance_;
    std::map<UPair, Rational> values_;
};

/// A YPoint rescaled to integers over the upper-triangular coordinates:
/// value(c) == numerators[c] / denominator.
struct DenseYPoint {
    int n = 0;
    std::int64_t denominator = 1;
    std::vector<std::int64_t> numerators;
};

/// Throws std::overflow_error when the common denominator or a numerator leaves int64.
DenseYPoint densify(const YPoint& y);

}  // namespace qapf
