#include "qapf/reductions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qapf {

namespace {

template <class Value>
void fill_point(YPoint& y, const Value& value_of)
{
    const int n = y.n();
    for (int a = 1; a <= n * n; ++a) {
        for (int b = a; b <= n * n; ++b) {
            const Rational v = value_of(pair_from_flat(n, a), pair_from_flat(n, b), a == b);
            if (v != 0) y.set(UPair{a, b}, v);
        }
    }
}

}  // namespace

YPoint build_point_qap1(const Graph& g, int k, int l, int t)
{
    const int n = g.n();
    if (n < 6) throw std::invalid_argument("QAP1 reduction needs n >= 6, got " + std::to_string(n));
    if (t < 2) throw std::invalid_argument("QAP1 reduction needs t >= 2, got " + std::to_string(t));
    if (k < 1 || k > n || l < 1 || l > n) throw std::invalid_argument("QAP1 reduction: k, l must lie in [n]");
    const PairIndex special{k, l};
    YPoint y(n, "qap1 k=" + std::to_string(k) + " l=" + std::to_string(l) + " t=" + std::to_string(t) +
                    " scale-to-unit=1/" + std::to_string(n * n));
    fill_point(y, [&](PairIndex x, PairIndex z, bool diagonal) -> Rational {
        if (diagonal) return x == special ? Rational(t) : Rational(n * n);
        if (x == special || z == special) {
            const PairIndex other = x == special ? z : x;
            return other.i != k && other.j != l ? Rational(1) : Rational(0);
        }
        const bool edge = x.i != z.i && g.has_edge(x.i, z.i);
        return edge ? Rational(0) : Rational(n);
    });
    return y;
}

YPoint build_point_qap2(const Graph& g, int t)
{
    const int n = g.n();
    if (t < 1 || t > n - 4) {
        throw std::invalid_argument("QAP2 reduction needs 1 <= t <= n-4, got t = " + std::to_string(t) +
                                    " at n = " + std::to_string(n));
    }
    YPoint y(n, "qap2 t=" + std::to_string(t));
    fill_point(y, [&](PairIndex x, PairIndex z, bool diagonal) -> Rational {
        if (diagonal) return x.j == 1 ? Rational(1, t) : Rational(0);
        if (x.i == z.i) return Rational(0);
        return g.has_edge(x.i, z.i) ? Rational(0) : Rational(n * n);
    });
    return y;
}

YPoint build_point_qap4(const Graph& g, int t)
{
    const int n = g.n();
    if (n < 7) throw std::invalid_argument("QAP4 reduction needs n >= 7, got " + std::to_string(n));
    if (t < 6) throw std::invalid_argument("QAP4 reduction needs t >= 6, got " + std::to_string(t));
    YPoint y(n, "qap4 t=" + std::to_string(t));
    fill_point(y, [&](PairIndex x, PairIndex z, bool diagonal) -> Rational {
        if (diagonal) return Rational(1, t);
        if (x.i == z.i) return Rational(0);
        return g.has_edge(x.i, z.i) ? Rational(0) : Rational(n, 6);
    });
    return y;
}

const FormCatalog& form_catalog(int n, Family family, const EnumerationBounds& bounds)
{
    if (family == Family::Qap5) throw std::invalid_argument("membership oracle supports QAP1..QAP4 only");
    using Key = std::tuple<int, Family, int, std::optional<int>, std::optional<int>>;
    static std::mutex guard;
    static std::map<Key, FormCatalog> cache;
    const Key key{n, family, bounds.cap, bounds.m_min, bounds.m_max};
    std::lock_guard lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FormCatalog catalog;
    catalog.family = family;
    catalog.n = n;
    catalog.batch = FormBatch(n);
    const auto summary = enumerate_family(n, family, bounds, [&](LinearForm&& form) {
        catalog.batch.add(form);
        catalog.params.push_back(*form.params());
        return true;
    });
    catalog.note = summary.note;
    return cache.emplace(key, std::move(catalog)).first->second;
}

MembershipResult brute_force_membership(const YPoint& y, Family family, const EnumerationBounds& bounds)
{
    check_enumeration_cap(y.n(), bounds.cap);
    const FormCatalog& catalog = form_catalog(y.n(), family, bounds);
    const DenseYPoint dense = densify(y);
    MembershipResult result;
    result.forms_checked = catalog.batch.size();
    const auto hit = parallel::first_violation(catalog.batch, dense);
    if (!hit) return result;
    result.member = false;
    result.witness_id = hit->index;
    result.witness = build_form(catalog.params[hit->index]);
    result.witness_evaluation = evaluate(*result.witness, y);
    if (result.witness_evaluation->satisfied) {
        throw std::logic_error("membership witness is not violated under exact evaluation");
    }
    return result;
}

int reduction_minimum_n(Family family)
{
    switch (family) {
    case Family::Qap1: return 6;
    case Family::Qap2:
    case Family::Qap4: return 7;
    default: throw std::invalid_argument("no clique reduction exists for " + std::string(to_string(family)));
    }
}

namespace {

/// Largest s >= n-3 admitting a clique, found by checking every complement of size <= 3;
/// n-4 when none exists.
int largest_clique_near_n(const Graph& g)
{
    const int n = g.n();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    for (int drop = 0; drop <= 3 && drop < n; ++drop) {
        std::vector<bool> chosen(static_cast<std::size_t>(n), false);
        std::fill(chosen.end() - drop, chosen.end(), true);
        do {
            std::vector<int> kept;
            for (int v = 1; v <= n; ++v) {
                if (!chosen[static_cast<std::size_t>(v - 1)]) kept.push_back(v);
            }
            if (g.is_clique(kept)) return n - drop;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return n - 4;
}

int direct_small(const Graph& g) { return g.edge_count() > 0 ? 2 : (g.n() > 0 ? 1 : 0); }

OracleCall run_call(const YPoint& y, Family family, int k, int l, int t, const EnumerationBounds& bounds)
{
    const MembershipResult m = brute_force_membership(y, family, bounds);
    return OracleCall{k, l, t, m.member, m.witness_id};
}

}  // namespace

OracleResult clique_via_membership_oracle(const Graph& input, Family family, const OracleOptions& options)
{
    const int minimum = reduction_minimum_n(family);
    if (options.pad_to && *options.pad_to < minimum) {
        throw std::invalid_argument("pad_to below the reduction minimum n = " + std::to_string(minimum));
    }
    if (input.n() < 1) throw std::invalid_argument("clique oracle needs at least one vertex");
    const int padded = std::max({input.n(), minimum, options.pad_to.value_or(minimum)});
    const Graph g = input.with_isolated_vertices(padded);

    OracleResult result;
    result.family = family;
    result.original_n = input.n();
    result.padded_n = padded;

    if (family == Family::Qap1) {
        if (g.complete()) throw std::invalid_argument("QAP1 reduction excludes the complete graph K_n");
        int best = 0;
        for (int k = 1; k <= padded; ++k) {
            std::optional<int> first_feasible;
            for (int t = 2; t <= padded - 1; ++t) {
                result.calls.push_back(run_call(build_point_qap1(g, k, k, t), family, k, k, t, options.bounds));
                if (result.calls.back().member && !first_feasible) first_feasible = t;
                if (first_feasible && !options.full_sweep) break;
            }
            if (!first_feasible) throw std::logic_error("QAP1 sweep found no feasible t");
            best = std::max(best, *first_feasible);
        }
        if (best >= 3) {
            result.clique_number = best;
            result.decided_by = "membership";
        } else {
            result.clique_number = direct_small(g);
            result.decided_by = "direct-small";
        }
        return result;
    }

    if (family == Family::Qap2) {
        std::optional<int> first_feasible;
        for (int t = 1; t <= padded - 4; ++t) {
            result.calls.push_back(run_call(build_point_qap2(g, t), family, 0, 0, t, options.bounds));
            if (result.calls.back().member && !first_feasible) first_feasible = t;
            if (first_feasible && !options.full_sweep) break;
        }
        if (!first_feasible) throw std::logic_error("QAP2 sweep found no feasible t up to n-4");
        if (*first_feasible <= 2) {
            result.clique_number = direct_small(g);
            result.decided_by = "direct-small";
        } else if (*first_feasible < padded - 4) {
            result.clique_number = *first_feasible;
            result.decided_by = "membership";
        } else {
            result.clique_number = largest_clique_near_n(g);
            result.decided_by = "direct-large";
        }
        return result;
    }

    std::optional<int> first_feasible;
    for (int t = 6; t <= padded; ++t) {
        result.calls.push_back(run_call(build_point_qap4(g, t), family, 0, 0, t, options.bounds));
        if (result.calls.back().member && !first_feasible) first_feasible = t;
        if (first_feasible && !options.full_sweep) break;
    }
    if (!first_feasible) throw std::logic_error("QAP4 sweep found no feasible t up to n");
    if (*first_feasible == 6) {
        result.clique_number = largest_clique_up_to(g, 6);
        result.decided_by = "direct-small";
    } else {
        result.clique_number = *first_feasible;
        result.decided_by = "membership";
    }
    return result;
}

}  // namespace qapf
