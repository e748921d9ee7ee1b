#pragma once

// Hot loops of the toolkit. Each kernel has a serial reference implementation that
// follows the definitions directly, and an OpenMP implementation over blocked,
// vectorizable loops. Both must agree exactly; tests and bench/ compare them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qapf/family_params.hpp"
#include "qapf/linear_form.hpp"
#include "qapf/permutation.hpp"
#include "qapf/ypoint.hpp"

namespace qapf {

/// All n! permutations in lexicographic order together with a matched-pair table:
/// matched(flat)[v] == 1 iff permutation v maps i to j, flat = n(i-1)+j.
class VertexTable {
public:
    explicit VertexTable(int n, int cap = kDefaultEnumerationCap);

    int n() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    const Permutation& permutation(std::size_t v) const { return perms_[v]; }
    const std::vector<Permutation>& permutations() const { return perms_; }
    std::span<const std::uint8_t> matched(int flat) const;

private:
    int n_;
    std::vector<Permutation> perms_;
    std::vector<std::uint8_t> matched_;  // n^2 rows of size() bytes
};

/// Forms packed for membership sweeps: terms are (upper-triangular coordinate,
/// coefficient) pairs, 8 bytes each, with per-form offsets, rhs and sense.
class FormBatch {
public:
    explicit FormBatch(int n) : n_(n) {}

    void add(const LinearForm& form);

    int n() const { return n_; }
    std::size_t size() const { return rhs_.size(); }
    std::size_t term_count() const { return coords_.size(); }

    /// Integer evaluation of form f at a densified point.
    DenseEvaluation evaluate(std::size_t f, const DenseYPoint& y) const;

private:
    int n_;
    std::vector<std::uint32_t> coords_;
    std::vector<std::int32_t> coefs_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::int64_t> rhs_;
    std::vector<std::uint8_t> less_equal_;
};

enum class KernelMode { Serial, Parallel };

/// Index of the lowest violated form, with its scaled left-hand side numerator.
struct ViolationHit {
    std::size_t index = 0;
    std::int64_t lhs_numerator = 0;
};

namespace serial {

/// out[v] = scaled lhs of `form` at vertex v.
void lhs_over_vertices(const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out);
/// out[v] = twice the closed-form slack of `params` at vertex v.
void closed_slack_over_vertices(const FamilyParams& params, const VertexTable& table,
                                std::span<std::int64_t> out);
std::optional<ViolationHit> first_violation(std::span<const LinearForm> forms,
                                            const DenseYPoint& y);

}  // namespace serial

namespace parallel {

void lhs_over_vertices(const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out);
void closed_slack_over_vertices(const FamilyParams& params, const VertexTable& table,
                                std::span<std::int64_t> out);
/// Deterministic: the lowest violating index wins regardless of thread timing.
std::optional<ViolationHit> first_violation(const FormBatch& forms, const DenseYPoint& y);

}  // namespace parallel

void lhs_over_vertices(KernelMode mode, const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out);
void closed_slack_over_vertices(KernelMode mode, const FamilyParams& params,
                                const VertexTable& table, std::span<std::int64_t> out);

/// Sets the OpenMP worker count; k <= 0 restores the runtime default.
void set_worker_count(int k);
int worker_count();

}  // namespace qapf
