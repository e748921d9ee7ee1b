#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qapf/family_params.hpp"
#include "qapf/linear_form.hpp"
#include "qapf/rational.hpp"

namespace qapf {

// Parameter validation. Each throws std::invalid_argument naming the violated condition.
void validate(const Qap1Params& p);
void validate(const Qap2Params& p);
/// Returns the branch of the |Q| lower-bound condition that admitted the parameters.
Qap3QBranch validate(const Qap3Params& p);
void validate(const Qap4Params& p);
void validate(const Qap5Params& p);
void validate_params(const FamilyParams& params);

LinearForm build_qap1(const Qap1Params& p);
LinearForm build_qap2(const Qap2Params& p);
LinearForm build_qap3(const Qap3Params& p);
LinearForm build_qap4(const Qap4Params& p);
LinearForm build_qap5(const Qap5Params& p);
LinearForm build_form(const FamilyParams& params);

/// Matched-pair counts of a permutation against one parameter set.
///   QAP1: q over (i_r, j_r), kl = P_sigma(k,l)
///   QAP2: q over P x Q           QAP3: q1 over P1 x Q, q2 over P2 x Q
///   QAP4: q over (i_r, j_r)      QAP5: s = sum_i n_{i, sigma(i)}
struct QStats {
    std::int64_t q = 0;
    std::int64_t q1 = 0;
    std::int64_t q2 = 0;
    std::int64_t s = 0;
    std::int64_t kl = 0;
};

QStats qstats(const FamilyParams& params, const Permutation& sigma);

/// Twice the closed-form slack of each family, from its matched-pair counts.
namespace doubled_slack {
constexpr std::int64_t qap1(std::int64_t q, std::int64_t kl) { return 2 * binom2(q - kl); }
constexpr std::int64_t qap2(std::int64_t q, std::int64_t beta) { return 2 * binom2(q - (beta - 1)); }
constexpr std::int64_t qap3(std::int64_t q1, std::int64_t q2, std::int64_t beta)
{
    return 2 * binom2(q1 - (beta - 1)) + 2 * q2 * beta + q2 * (q2 - 1) - 2 * q1 * q2;
}
constexpr std::int64_t qap4(std::int64_t q) { return 2 * binom2(q - 1); }
constexpr std::int64_t qap5(std::int64_t s, std::int64_t beta) { return 2 * (s - beta) * (s - beta + 1); }
}  // namespace doubled_slack

/// Twice the closed-form slack; always an integer.
std::int64_t closed_form_slack_doubled(const FamilyParams& params, const QStats& stats);

/// Closed-form slack at the vertex of sigma:
///   QAP1 C(q - P(k,l), 2)   QAP2 C(q-(beta-1), 2)   QAP4 C(q-1, 2)
///   QAP3 C(q1-(beta-1), 2) + (2 q2 beta + q2(q2-1) - 2 q1 q2)/2
///   QAP5 (s-beta)(s-beta+1)
Rational closed_form_slack(const FamilyParams& params, const Permutation& sigma);

/// Limits for enumerate_family. The QAP5 fields are mandatory for QAP5.
struct EnumerationBounds {
    int cap = kDefaultEnumerationCap;
    std::optional<int> m_min;  // QAP1 / QAP4 pattern length
    std::optional<int> m_max;
    std::optional<int> beta_min;  // QAP5
    std::optional<int> beta_max;
    std::optional<int> coeff_min;  // QAP5, inclusive
    std::optional<int> coeff_max;
    int max_support = 1;  // QAP5: number of nonzero n_ij
};

struct EnumerationSummary {
    std::uint64_t count = 0;
    bool stopped_early = false;
    std::string note;  // explains an empty family
};

/// Streams every parameter-valid form of the family at size n in a deterministic order.
/// Pattern pairs are canonical (sorted by i), so no form is produced twice.
/// The sink returns false to stop the stream.
EnumerationSummary enumerate_family(int n, Family family, const EnumerationBounds& bounds,
                                    const std::function<bool(LinearForm&&)>& sink);

std::vector<LinearForm> collect_family(int n, Family family,
                                       const EnumerationBounds& bounds = {});

/// Closed-form count of canonical QAP1 forms: n^2 * sum_m C(n-1,m)^2 m!.
std::uint64_t qap1_form_count(int n, int m_min, int m_max);

}  // namespace qapf
