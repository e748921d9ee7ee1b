#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "qapf/families.hpp"
#include "qapf/kernels.hpp"

namespace qapf {

/// A (form, vertex) pair where a check failed. Slacks are doubled so they stay integral.
struct SweepFailure {
    std::uint64_t form_id = 0;
    Permutation sigma = Permutation::identity(1);
    std::int64_t evaluated_doubled = 0;
    std::int64_t closed_doubled = 0;
};

struct SweepReport {
    int n = 0;
    Family family = Family::Qap1;
    std::uint64_t forms = 0;
    std::uint64_t vertices = 0;
    std::uint64_t violations = 0;        // evaluated slack < 0
    std::uint64_t slack_mismatches = 0;  // evaluated slack != closed form
    std::optional<SweepFailure> first_violation;
    std::optional<SweepFailure> first_mismatch;
    std::string note;

    bool passed() const { return violations == 0 && slack_mismatches == 0; }
};

/// Called once per form with the doubled evaluated slack at every vertex of the table.
using SweepObserver =
    std::function<void(std::uint64_t form_id, const LinearForm& form, std::span<const std::int64_t>)>;

/// Enumerates the family at table.n() and checks every form against every vertex:
/// validity (slack >= 0) and agreement of the evaluated slack with the closed form.
SweepReport sweep_family(const VertexTable& table, Family family, const EnumerationBounds& bounds,
                         KernelMode mode, const SweepObserver& observer = {});

/// Doubled slack from a scaled lhs, i.e. 2 * slack of the unscaled inequality.
std::int64_t doubled_slack_from_lhs(const LinearForm& form, std::int64_t scaled_lhs);

/// CSV rows "form_id,sigma,q,q1,q2,s,kl,slack" for one form over the whole table.
void write_slack_csv_header(std::ostream& out);
void write_slack_csv_rows(std::ostream& out, std::uint64_t form_id, const LinearForm& form,
                          const VertexTable& table, std::span<const std::int64_t> doubled);

}  // namespace qapf
