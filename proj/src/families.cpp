#include "qapf/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace qapf {

namespace {

using Violation = std::optional<std::string>;

std::string str(int v) { return std::to_string(v); }

Violation check_indices(const std::vector<int>& values, int n, const char* what)
{
    std::set<int> seen;
    for (int v : values) {
        if (v < 1 || v > n) return std::string(what) + " index " + str(v) + " outside [1, " + str(n) + "]";
        if (!seen.insert(v).second) return std::string(what) + " index " + str(v) + " repeats";
    }
    return std::nullopt;
}

int size(const std::vector<int>& v) { return static_cast<int>(v.size()); }

Violation check(const Qap1Params& p)
{
    if (p.n < 6) return "n >= 6 required (n = " + str(p.n) + ")";
    if (p.iSet.size() != p.jSet.size()) return "iSet and jSet lengths differ";
    if (size(p.iSet) < 3) return "m >= 3 required (m = " + str(size(p.iSet)) + ")";
    std::vector<int> is = p.iSet;
    is.push_back(p.k);
    std::vector<int> js = p.jSet;
    js.push_back(p.l);
    if (auto v = check_indices(is, p.n, "i_1..i_m,k must be distinct:")) return v;
    if (auto v = check_indices(js, p.n, "j_1..j_m,l must be distinct:")) return v;
    return std::nullopt;
}

Violation check(const Qap2Params& p)
{
    if (auto v = check_indices(p.P, p.n, "P")) return v;
    if (auto v = check_indices(p.Q, p.n, "Q")) return v;
    if (p.beta < 2) return "condition (iii) beta >= 2 violated (beta = " + str(p.beta) + ")";
    for (int s : {size(p.P), size(p.Q)}) {
        if (s < p.beta + 1 || s > p.n - 3) {
            return "condition (i) beta+1 <= |P|,|Q| <= n-3 violated (size " + str(s) + ")";
        }
    }
    if (size(p.P) + size(p.Q) > p.n - 3 + p.beta) {
        return "condition (ii) |P|+|Q| <= n-3+beta violated (" + str(size(p.P) + size(p.Q)) +
               " > " + str(p.n - 3 + p.beta) + ")";
    }
    return std::nullopt;
}

struct Qap3Check {
    Violation violation;
    Qap3QBranch branch = Qap3QBranch::NoP2;
};

Qap3Check check(const Qap3Params& p)
{
    Qap3Check out;
    auto fail = [&](std::string msg) {
        out.violation = std::move(msg);
        return out;
    };
    if (auto v = check_indices(p.P1, p.n, "P1")) return fail(*v);
    if (auto v = check_indices(p.P2, p.n, "P2")) return fail(*v);
    if (auto v = check_indices(p.Q, p.n, "Q")) return fail(*v);
    for (int x : p.P1) {
        if (std::find(p.P2.begin(), p.P2.end(), x) != p.P2.end()) {
            return fail("P1 and P2 must be disjoint (both contain " + str(x) + ")");
        }
    }
    const int q = size(p.Q), p1 = size(p.P1), p2 = size(p.P2), b = p.beta;
    if (q < 3 || q > p.n - 3) return fail("condition (i) 3 <= |Q| <= n-3 violated (|Q| = " + str(q) + ")");
    if (p1 + p2 > p.n - 3) return fail("condition (ii) |P1|+|P2| <= n-3 violated");
    if (p1 < std::min(2, b + 1)) return fail("condition (iii) |P1| >= min{2, beta+1} violated");
    if (p2 < std::min(1, -b + 2)) return fail("condition (iv) |P2| >= min{1, -beta+2} violated");
    if (std::abs(p1 - p2 - b) > p.n - q - 4) {
        return fail("condition (v) ||P1|-|P2|-beta| <= n-|Q|-4 violated");
    }
    if (p2 == 1) {
        if (q < std::min(-b + 5, b + 2)) return fail("condition (vi) |Q| >= min{-beta+5, beta+2} violated");
        out.branch = Qap3QBranch::SingleP2;
    } else if (p2 >= 2) {
        if (q >= std::min(-b + 5, b + 3)) {
            out.branch = Qap3QBranch::FirstOfTwo;
        } else if (q >= std::min(-b + 4, b + 4)) {
            out.branch = Qap3QBranch::SecondOfTwo;
        } else {
            return fail("condition (vi) for |P2| >= 2 violated by both alternatives");
        }
    }
    return out;
}

Violation check(const Qap4Params& p)
{
    if (p.iSet.size() != p.jSet.size()) return "iSet and jSet lengths differ";
    if (size(p.iSet) < 7 || p.n < 7) {
        return "m, n >= 7 required (m = " + str(size(p.iSet)) + ", n = " + str(p.n) + ")";
    }
    if (auto v = check_indices(p.iSet, p.n, "i_1..i_m must be distinct:")) return v;
    if (auto v = check_indices(p.jSet, p.n, "j_1..j_m must be distinct:")) return v;
    return std::nullopt;
}

Violation check(const Qap5Params& p)
{
    if (p.n < 1) return "n >= 1 required";
    for (const auto& [ij, c] : p.coeffs) {
        if (ij.i < 1 || ij.i > p.n || ij.j < 1 || ij.j > p.n) return "coefficient index outside [1, n]^2";
    }
    return std::nullopt;
}

void raise(const Violation& v, Family f)
{
    if (v) throw std::invalid_argument(std::string(to_string(f)) + ": " + *v);
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

LinearForm build_qap1_unchecked(const Qap1Params& p)
{
    LinearFormBuilder b(p.n);
    const PairIndex kl{p.k, p.l};
    const int m = size(p.iSet);
    for (int r = 0; r < m; ++r) {
        const PairIndex pr{p.iSet[static_cast<std::size_t>(r)], p.jSet[static_cast<std::size_t>(r)]};
        b.add_offdiag(pr, kl, 1);
        for (int s = r + 1; s < m; ++s) {
            b.add_offdiag(pr, {p.iSet[static_cast<std::size_t>(s)], p.jSet[static_cast<std::size_t>(s)]}, -1);
        }
    }
    b.add_diag(kl, -1);
    return b.build(Sense::LessEqual, 0, 1, p);
}

LinearForm build_qap2_unchecked(Qap2Params p)
{
    p.P = sorted(p.P);
    p.Q = sorted(p.Q);
    LinearFormBuilder b(p.n);
    for (int i : p.P) {
        for (int j : p.Q) {
            b.add_diag({i, j}, 2 * (p.beta - 1));
            for (int k : p.P) {
                if (k <= i) continue;
                for (int l : p.Q) b.add_offdiag({i, j}, {k, l}, -2);
            }
        }
    }
    const std::int64_t beta = p.beta;
    return b.build(Sense::LessEqual, beta * beta - beta, 2, p);
}

LinearForm build_qap3_unchecked(Qap3Params p)
{
    p.P1 = sorted(p.P1);
    p.P2 = sorted(p.P2);
    p.Q = sorted(p.Q);
    LinearFormBuilder b(p.n);
    const std::int64_t beta = p.beta;
    auto within = [&](const std::vector<int>& rows, std::int64_t coef) {
        for (int i : rows) {
            for (int j : p.Q) {
                for (int k : rows) {
                    if (k <= i) continue;
                    for (int l : p.Q) b.add_offdiag({i, j}, {k, l}, coef);
                }
            }
        }
    };
    for (int i : p.P1) {
        for (int j : p.Q) b.add_diag({i, j}, -2 * (beta - 1));
    }
    for (int i : p.P2) {
        for (int j : p.Q) b.add_diag({i, j}, 2 * beta);
    }
    within(p.P1, 2);
    within(p.P2, 2);
    for (int i : p.P1) {
        for (int j : p.Q) {
            for (int k : p.P2) {
                for (int l : p.Q) b.add_offdiag({i, j}, {k, l}, -2);
            }
        }
    }
    // lhs >= (beta - beta^2)/2; this sign keeps the form valid at every vertex
    return b.build(Sense::GreaterEqual, beta - beta * beta, 2, p);
}

LinearForm build_qap4_unchecked(const Qap4Params& p)
{
    LinearFormBuilder b(p.n);
    const int m = size(p.iSet);
    for (int r = 0; r < m; ++r) {
        const PairIndex pr{p.iSet[static_cast<std::size_t>(r)], p.jSet[static_cast<std::size_t>(r)]};
        b.add_diag(pr, 1);
        for (int s = r + 1; s < m; ++s) {
            b.add_offdiag(pr, {p.iSet[static_cast<std::size_t>(s)], p.jSet[static_cast<std::size_t>(s)]}, -1);
        }
    }
    return b.build(Sense::LessEqual, 1, 1, p);
}

LinearForm build_qap5_unchecked(Qap5Params p)
{
    std::erase_if(p.coeffs, [](const auto& kv) { return kv.second == 0; });
    LinearFormBuilder b(p.n);
    const std::int64_t beta = p.beta;
    for (auto it = p.coeffs.begin(); it != p.coeffs.end(); ++it) {
        const std::int64_t c = it->second;
        b.add_diag(it->first, c * c - (2 * beta - 1) * c);
        for (auto jt = std::next(it); jt != p.coeffs.end(); ++jt) {
            b.add_offdiag(it->first, jt->first, 2 * c * jt->second);
        }
    }
    // 1/4 - (beta - 1/2)^2 == beta - beta^2
    return b.build(Sense::GreaterEqual, beta - beta * beta, 1, std::move(p));
}

}  // namespace

void validate(const Qap1Params& p) { raise(check(p), Family::Qap1); }
void validate(const Qap2Params& p) { raise(check(p), Family::Qap2); }
Qap3QBranch validate(const Qap3Params& p)
{
    const Qap3Check c = check(p);
    raise(c.violation, Family::Qap3);
    return c.branch;
}
void validate(const Qap4Params& p) { raise(check(p), Family::Qap4); }
void validate(const Qap5Params& p) { raise(check(p), Family::Qap5); }

void validate_params(const FamilyParams& params)
{
    std::visit([](const auto& p) { validate(p); }, params);
}

LinearForm build_qap1(const Qap1Params& p)
{
    validate(p);
    return build_qap1_unchecked(p);
}

LinearForm build_qap2(const Qap2Params& p)
{
    validate(p);
    return build_qap2_unchecked(p);
}

LinearForm build_qap3(const Qap3Params& p)
{
    validate(p);
    return build_qap3_unchecked(p);
}

LinearForm build_qap4(const Qap4Params& p)
{
    validate(p);
    return build_qap4_unchecked(p);
}

LinearForm build_qap5(const Qap5Params& p)
{
    validate(p);
    return build_qap5_unchecked(p);
}

LinearForm build_form(const FamilyParams& params)
{
    return std::visit(
        [](const auto& p) -> LinearForm {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Qap1Params>) return build_qap1(p);
            else if constexpr (std::is_same_v<T, Qap2Params>) return build_qap2(p);
            else if constexpr (std::is_same_v<T, Qap3Params>) return build_qap3(p);
            else if constexpr (std::is_same_v<T, Qap4Params>) return build_qap4(p);
            else return build_qap5(p);
        },
        params);
}

QStats qstats(const FamilyParams& params, const Permutation& sigma)
{
    QStats st;
    auto count_pattern = [&](const std::vector<int>& is, const std::vector<int>& js) {
        std::int64_t q = 0;
        for (std::size_t r = 0; r < is.size(); ++r) q += sigma(is[r]) == js[r] ? 1 : 0;
        return q;
    };
    auto count_block = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        std::int64_t q = 0;
        for (int i : rows) q += std::find(cols.begin(), cols.end(), sigma(i)) != cols.end() ? 1 : 0;
        return q;
    };
    if (size_of(params) != sigma.size()) throw std::invalid_argument("qstats: size mismatch");
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Qap1Params>) {
                st.q = count_pattern(p.iSet, p.jSet);
                st.kl = sigma(p.k) == p.l ? 1 : 0;
            } else if constexpr (std::is_same_v<T, Qap2Params>) {
                st.q = count_block(p.P, p.Q);
            } else if constexpr (std::is_same_v<T, Qap3Params>) {
                st.q1 = count_block(p.P1, p.Q);
                st.q2 = count_block(p.P2, p.Q);
            } else if constexpr (std::is_same_v<T, Qap4Params>) {
                st.q = count_pattern(p.iSet, p.jSet);
            } else {
                for (int i = 1; i <= sigma.size(); ++i) {
                    const auto it = p.coeffs.find(PairIndex{i, sigma(i)});
                    if (it != p.coeffs.end()) st.s += it->second;
                }
            }
        },
        params);
    return st;
}

std::int64_t closed_form_slack_doubled(const FamilyParams& params, const QStats& st)
{
    return std::visit(
        [&](const auto& p) -> std::int64_t {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Qap1Params>) return doubled_slack::qap1(st.q, st.kl);
            else if constexpr (std::is_same_v<T, Qap2Params>) return doubled_slack::qap2(st.q, p.beta);
            else if constexpr (std::is_same_v<T, Qap3Params>) return doubled_slack::qap3(st.q1, st.q2, p.beta);
            else if constexpr (std::is_same_v<T, Qap4Params>) return doubled_slack::qap4(st.q);
            else return doubled_slack::qap5(st.s, p.beta);
        },
        params);
}

Rational closed_form_slack(const FamilyParams& params, const Permutation& sigma)
{
    validate_params(params);
    return Rational(closed_form_slack_doubled(params, qstats(params, sigma)), 2);
}

namespace {

// Lexicographic k-subsets of `pool` (pool sorted ascending).
bool for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<bool(const std::vector<int>&)>& visit)
{
    const int n = size(pool);
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
    std::vector<int> chosen(static_cast<std::size_t>(k));
    while (true) {
        for (int t = 0; t < k; ++t) chosen[static_cast<std::size_t>(t)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
        if (!visit(chosen)) return false;
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
        if (t < 0) return true;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
}

// Lexicographic ordered k-tuples of distinct elements of `pool`.
bool for_each_arrangement(const std::vector<int>& pool, int k,
                          const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> current;
    std::vector<char> used(pool.size(), 0);
    std::function<bool()> rec = [&]() -> bool {
        if (size(current) == k) return visit(current);
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (used[t]) continue;
            used[t] = 1;
            current.push_back(pool[t]);
            const bool go_on = rec();
            current.pop_back();
            used[t] = 0;
            if (!go_on) return false;
        }
        return true;
    };
    if (k < 0 || k > size(pool)) return true;
    return rec();
}

std::vector<int> range_without(int n, const std::vector<int>& excluded)
{
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
    }
    return out;
}

}  // namespace

EnumerationSummary enumerate_family(int n, Family family, const EnumerationBounds& bounds,
                                    const std::function<bool(LinearForm&&)>& sink)
{
    check_enumeration_cap(n, bounds.cap);
    EnumerationSummary summary;
    auto emit = [&](LinearForm&& form) {
        ++summary.count;
        if (!sink(std::move(form))) {
            summary.stopped_early = true;
            return false;
        }
        return true;
    };
    const std::vector<int> all = range_without(n, {});

    switch (family) {
    case Family::Qap1: {
        const int m_lo = std::max(3, bounds.m_min.value_or(3));
        const int m_hi = std::min(n - 1, bounds.m_max.value_or(n - 1));
        if (n < 6) break;
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                const auto rows = range_without(n, {k});
                const auto cols = range_without(n, {l});
                for (int m = m_lo; m <= m_hi; ++m) {
                    const bool go_on = for_each_subset(rows, m, [&](const std::vector<int>& is) {
                        return for_each_arrangement(cols, m, [&](const std::vector<int>& js) {
                            return emit(build_qap1_unchecked({n, is, js, k, l}));
                        });
                    });
                    if (!go_on) return summary;
                }
            }
        }
        break;
    }
    case Family::Qap2: {
        // (i) forces beta + 1 <= n - 3
        for (int beta = 2; beta <= n - 4; ++beta) {
            for (int sp = beta + 1; sp <= n - 3; ++sp) {
                for (int sq = beta + 1; sq <= n - 3; ++sq) {
                    if (sp + sq > n - 3 + beta) continue;
                    const bool go_on = for_each_subset(all, sp, [&](const std::vector<int>& P) {
                        return for_each_subset(all, sq, [&](const std::vector<int>& Q) {
                            return emit(build_qap2_unchecked({n, P, Q, beta}));
                        });
                    });
                    if (!go_on) return summary;
                }
            }
        }
        break;
    }
    case Family::Qap3: {
        for (int sq = 3; sq <= n - 3; ++sq) {
            const int slack_v = n - sq - 4;
            if (slack_v < 0) continue;
            const bool go_on = for_each_subset(all, sq, [&](const std::vector<int>& Q) {
                for (int s1 = 0; s1 <= n - 3; ++s1) {
                    for (int s2 = 0; s1 + s2 <= n - 3; ++s2) {
                        // (v) pins beta to an interval around |P1| - |P2|
                        for (int beta = s1 - s2 - slack_v; beta <= s1 - s2 + slack_v; ++beta) {
                            Qap3Params probe{n, std::vector<int>(static_cast<std::size_t>(s1)),
                                             std::vector<int>(static_cast<std::size_t>(s2)), Q, beta};
                            for (int t = 0; t < s1; ++t) probe.P1[static_cast<std::size_t>(t)] = t + 1;
                            for (int t = 0; t < s2; ++t) probe.P2[static_cast<std::size_t>(t)] = s1 + t + 1;
                            if (check(probe).violation) continue;
                            const bool cont = for_each_subset(all, s1, [&](const std::vector<int>& P1) {
                                return for_each_subset(range_without(n, P1), s2, [&](const std::vector<int>& P2) {
                                    return emit(build_qap3_unchecked({n, P1, P2, Q, beta}));
                                });
                            });
                            if (!cont) return false;
                        }
                    }
                }
                return true;
            });
            if (!go_on) return summary;
        }
        break;
    }
    case Family::Qap4: {
        if (n < 7) break;
        const int m_lo = std::max(7, bounds.m_min.value_or(7));
        const int m_hi = std::min(n, bounds.m_max.value_or(n));
        for (int m = m_lo; m <= m_hi; ++m) {
            const bool go_on = for_each_subset(all, m, [&](const std::vector<int>& is) {
                return for_each_arrangement(all, m, [&](const std::vector<int>& js) {
                    return emit(build_qap4_unchecked({n, is, js}));
                });
            });
            if (!go_on) return summary;
        }
        break;
    }
    case Family::Qap5: {
        if (!bounds.beta_min || !bounds.beta_max || !bounds.coeff_min || !bounds.coeff_max) {
            throw std::invalid_argument(
                "qap5 is infinite: enumeration needs beta and coefficient bounds");
        }
        std::vector<int> values;
        for (int c = *bounds.coeff_min; c <= *bounds.coeff_max; ++c) {
            if (c != 0) values.push_back(c);
        }
        std::vector<int> flats;
        for (int f = 1; f <= n * n; ++f) flats.push_back(f);
        for (int beta = *bounds.beta_min; beta <= *bounds.beta_max; ++beta) {
            for (int support = 0; support <= bounds.max_support; ++support) {
                const bool go_on = for_each_subset(flats, support, [&](const std::vector<int>& cells) {
                    std::vector<std::size_t> pick(cells.size(), 0);
                    while (true) {
                        Qap5Params p{n, beta, {}};
                        for (std::size_t t = 0; t < cells.size(); ++t) {
                            p.coeffs[pair_from_flat(n, cells[t])] = values[pick[t]];
                        }
                        if (!emit(build_qap5_unchecked(std::move(p)))) return false;
                        std::size_t t = 0;
                        while (t < pick.size() && ++pick[t] == values.size()) pick[t++] = 0;
                        if (t == pick.size()) return true;
                    }
                });
                if (!go_on) return summary;
                if (values.empty()) break;
            }
        }
        break;
    }
    }
    if (summary.count == 0) {
        summary.note = "no parameter set satisfies the " + std::string(to_string(family)) +
                       " conditions at n = " + std::to_string(n);
        if (family == Family::Qap2 && n <= 6) {
            summary.note += " (|P|,|Q| >= 3 with |P|+|Q| <= n-3+beta and beta <= n-4 is unsatisfiable)";
        }
    }
    return summary;
}

std::vector<LinearForm> collect_family(int n, Family family, const EnumerationBounds& bounds)
{
    std::vector<LinearForm> out;
    enumerate_family(n, family, bounds, [&](LinearForm&& f) {
        out.push_back(std::move(f));
        return true;
    });
    return out;
}

std::uint64_t qap1_form_count(int n, int m_min, int m_max)
{
    if (n < 6) return 0;
    auto choose = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t t = 1; t <= b; ++t) r = r * (a - b + t) / t;
        return r;
    };
    std::uint64_t total = 0;
    for (int m = std::max(3, m_min); m <= std::min(n - 1, m_max); ++m) {
        const std::uint64_t c = choose(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(m));
        total += c * c * factorial(m);
    }
    return total * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

}  // namespace qapf
