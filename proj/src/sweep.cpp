#include "qapf/sweep.hpp"

#include <stdexcept>
#include <vector>

namespace qapf {

std::int64_t doubled_slack_from_lhs(const LinearForm& form, std::int64_t scaled_lhs)
{
    const std::int64_t gap =
        form.sense() == Sense::LessEqual ? form.rhs() - scaled_lhs : scaled_lhs - form.rhs();
    if ((2 * gap) % form.scale() != 0) {
        throw std::logic_error("doubled slack is not integral for scale " + std::to_string(form.scale()));
    }
    return 2 * gap / form.scale();
}

SweepReport sweep_family(const VertexTable& table, Family family, const EnumerationBounds& bounds,
                         KernelMode mode, const SweepObserver& observer)
{
    SweepReport report;
    report.n = table.n();
    report.family = family;
    report.vertices = table.size();

    std::vector<std::int64_t> lhs(table.size());
    std::vector<std::int64_t> closed(table.size());
    std::vector<std::int64_t> evaluated(table.size());

    const EnumerationSummary summary = enumerate_family(table.n(), family, bounds, [&](LinearForm&& form) {
        const std::uint64_t id = report.forms++;
        lhs_over_vertices(mode, form, table, lhs);
        closed_slack_over_vertices(mode, *form.params(), table, closed);
        for (std::size_t v = 0; v < table.size(); ++v) {
            evaluated[v] = doubled_slack_from_lhs(form, lhs[v]);
            if (evaluated[v] < 0) {
                if (report.violations++ == 0) {
                    report.first_violation = SweepFailure{id, table.permutation(v), evaluated[v], closed[v]};
                }
            }
            if (evaluated[v] != closed[v]) {
                if (report.slack_mismatches++ == 0) {
                    report.first_mismatch = SweepFailure{id, table.permutation(v), evaluated[v], closed[v]};
                }
            }
        }
        if (observer) observer(id, form, evaluated);
        return true;
    });
    report.note = summary.note;
    return report;
}

void write_slack_csv_header(std::ostream& out)
{
    out << "form_id,sigma,q,q1,q2,s,kl,slack\n";
}

void write_slack_csv_rows(std::ostream& out, std::uint64_t form_id, const LinearForm& form,
                          const VertexTable& table, std::span<const std::int64_t> doubled)
{
    for (std::size_t v = 0; v < table.size(); ++v) {
        const QStats st = qstats(*form.params(), table.permutation(v));
        out << form_id << ',' << table.permutation(v).to_string() << ',' << st.q << ',' << st.q1 << ','
            << st.q2 << ',' << st.s << ',' << st.kl << ',' << to_string(Rational(doubled[v], 2)) << '\n';
    }
}

}  // namespace qapf
