#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qapf/family_params.hpp"
#include "qapf/rational.hpp"
#include "qapf/vertex.hpp"
#include "qapf/ypoint.hpp"

namespace qapf {

enum class Sense { LessEqual, GreaterEqual };

std::string_view to_string(Sense sense);

/// One inequality  (sum of coefficients * Y  <sense>  rhs) / scale  over symmetric Y.
///
/// Coefficients are integers with the denominator cleared into `scale`. An off-diagonal
/// coefficient applies once to the unordered cell {(ij),(kl)}, i.e. to the symmetric
/// value Y_{ij,kl} = Y_{kl,ij}.
class LinearForm {
public:
    struct DiagTerm {
        int flat;
        std::int64_t coef;
    };
    struct OffDiagTerm {
        UPair cell;
        std::int64_t coef;
    };

    int n() const { return n_; }
    Sense sense() const { return sense_; }
    std::int64_t rhs() const { return rhs_; }
    int scale() const { return scale_; }
    const std::vector<DiagTerm>& diag() const { return diag_; }
    const std::vector<OffDiagTerm>& offdiag() const { return offdiag_; }
    const std::optional<FamilyParams>& params() const { return params_; }
    std::optional<Family> family() const;

    std::int64_t coefficient(UPair cell) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b);

private:
    friend class LinearFormBuilder;

    int n_ = 0;
    Sense sense_ = Sense::LessEqual;
    std::int64_t rhs_ = 0;
    int scale_ = 1;
    std::vector<DiagTerm> diag_;
    std::vector<OffDiagTerm> offdiag_;
    std::optional<FamilyParams> params_;
};

class LinearFormBuilder {
public:
    explicit LinearFormBuilder(int n);

    LinearFormBuilder& add_diag(PairIndex p, std::int64_t coef);
    /// Rejects x == y; use add_diag for diagonal cells.
    LinearFormBuilder& add_offdiag(PairIndex x, PairIndex y, std::int64_t coef);

    LinearForm build(Sense sense, std::int64_t rhs, int scale = 1,
                     std::optional<FamilyParams> params = std::nullopt) const;

private:
    int n_;
    std::map<int, std::int64_t> diag_;
    std::map<UPair, std::int64_t> offdiag_;
};

/// Scaled left-hand side at the vertex of sigma.
std::int64_t lhs_at_vertex(const LinearForm& form, const Permutation& sigma);

/// Slack at the vertex of sigma on the unscaled inequality: rhs-lhs for <=, lhs-rhs for >=.
Rational slack_at_vertex(const LinearForm& form, const Permutation& sigma);

struct Evaluation {
    Rational lhs;  // scaled: coefficients * Y
    Rational rhs;  // scaled
    Rational slack;  // unscaled; negative iff violated
    bool satisfied = false;
};

/// Throws std::invalid_argument on dimension mismatch.
Evaluation evaluate(const LinearForm& form, const YPoint& y);

/// Integer evaluation against a densified point; `lhs_numerator / y.denominator` is the
/// scaled left-hand side.
struct DenseEvaluation {
    std::int64_t lhs_numerator = 0;
    bool satisfied = false;
};
DenseEvaluation evaluate_dense(const LinearForm& form, const DenseYPoint& y);

}  // namespace qapf
