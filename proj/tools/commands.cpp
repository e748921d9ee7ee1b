#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qapf/families.hpp"
#include "qapf/geometry.hpp"
#include "qapf/graph.hpp"
#include "qapf/protocols.hpp"
#include "qapf/reductions.hpp"
#include "qapf/sweep.hpp"

namespace qapf::cli {

namespace {

std::string verdict_line(bool pass) { return pass ? "PASS" : "FAIL"; }

RankOptions rank_options(const Context& ctx)
{
    RankOptions options;
    options.certify = ctx.certify;
    return options;
}

std::vector<int> iota_set(int from, int to)
{
    std::vector<int> out;
    for (int v = from; v <= to; ++v) out.push_back(v);
    return out;
}

Json dimension_json(const std::optional<AffineDimension>& d)
{
    if (!d) return nullptr;
    Json j;
    j["dimension"] = d->dimension ? Json(*d->dimension) : Json(nullptr);
    j["rank"] = to_json(d->report);
    return j;
}

std::map<PairIndex, std::int64_t> parse_coeffs(const std::string& text)
{
    std::map<PairIndex, std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int i = 0;
        int j = 0;
        long long c = 0;
        char s1 = 0;
        char s2 = 0;
        std::istringstream parts(item);
        if (!(parts >> i >> s1 >> j >> s2 >> c) || s1 != ':' || s2 != ':') {
            throw std::invalid_argument("coefficient '" + item + "' is not of the form i:j:c");
        }
        out[{i, j}] = c;
    }
    return out;
}

FamilyParams facet_params(const FacetArgs& a)
{
    const int m = a.m.value_or(a.n);
    switch (parse_family(a.family)) {
    case Family::Qap1: {
        Qap1Params p{a.n, a.i, a.j, a.k.value_or(0), a.l.value_or(0)};
        if (p.iSet.empty()) p.iSet = iota_set(1, std::min(m, a.n - 1));
        if (p.jSet.empty()) p.jSet = p.iSet;
        if (!a.k) p.k = static_cast<int>(p.iSet.size()) + 1;
        if (!a.l) p.l = p.k;
        return p;
    }
    case Family::Qap2:
        return Qap2Params{a.n, a.P, a.Q, a.beta.value_or(2)};
    case Family::Qap3:
        return Qap3Params{a.n, a.P1, a.P2, a.Q, a.beta.value_or(2)};
    case Family::Qap4: {
        Qap4Params p{a.n, a.i, a.j};
        if (p.iSet.empty()) p.iSet = iota_set(1, m);
        if (p.jSet.empty()) p.jSet = p.iSet;
        return p;
    }
    case Family::Qap5:
        return Qap5Params{a.n, a.beta.value_or(0), parse_coeffs(a.coeffs)};
    }
    throw std::invalid_argument("unknown family");
}

Graph graph_without(const Graph& g, int removed)
{
    Graph out(g.n());
    for (auto [u, v] : g.edges()) {
        if (u != removed && v != removed) out.add_edge(u, v);
    }
    return out;
}

BitVector bits(const std::string& text, const char* name)
{
    if (text.empty()) throw std::invalid_argument(std::string("--") + name + " is required");
    return BitVector::parse(text);
}

Json outcomes_json(const ExactReport& r)
{
    Json out = Json::array();
    for (const auto& o : r.outcomes) {
        out.push_back({{"bits", o.transcriptBits}, {"output", to_string(o.output)}, {"probability", to_string(o.probability)}});
    }
    return out;
}

}  // namespace

RunReport verify_facet(const Context& ctx, const FacetArgs& args)
{
    RunReport report;
    report.command = "verify-facet";
    if (args.expect != "facet" && args.expect != "valid-only") {
        throw std::invalid_argument("--expect must be facet or valid-only");
    }
    check_enumeration_cap(args.n, ctx.caps.enumeration);
    const FamilyParams params = facet_params(args);
    report.parameters = {{"family", args.family}, {"n", args.n}, {"params", to_json(params)},
                         {"expect", args.expect}, {"certify", ctx.certify}};
    validate_params(params);
    const LinearForm form = build_form(params);

    const VertexTable table(args.n, ctx.caps.enumeration);
    const FacetVerdict verdict = verify_facet(form, table, rank_options(ctx));
    Json r;
    r["form"] = to_json(form);
    r["label"] = verdict.label();
    r["valid"] = verdict.valid;
    r["violating"] = verdict.violating ? to_json(*verdict.violating) : Json(nullptr);
    r["tight_vertices"] = verdict.tight_count;
    r["tight"] = dimension_json(verdict.tight);
    r["polytope"] = dimension_json(verdict.polytope);
    report.add("valid", verdict.valid, verdict.valid ? "" : "violated at " + verdict.violating->to_string());
    if (args.expect == "facet") report.add("facet", verdict.facet, verdict.label());

    std::cout << "family " << args.family << " n=" << args.n << ": " << verdict.label() << " (tight " << verdict.tight_count;
    if (verdict.tight && verdict.tight->dimension && verdict.polytope && verdict.polytope->dimension) {
        std::cout << ", dim " << *verdict.tight->dimension << " vs polytope " << *verdict.polytope->dimension;
    }
    std::cout << ")\n";

    if (const auto* q4 = std::get_if<Qap4Params>(&params)) {
        const auto eq = check_equality_set(*q4, table);
        Json rows = Json::array();
        for (const auto& row : eq.rows) {
            rows.push_back({{"k", row.k}, {"vertices", row.vertices}, {"tight", row.tight},
                            {"min_slack", to_string(row.min_slack)}, {"max_slack", to_string(row.max_slack)}});
            std::cout << "  S_" << row.k << ": " << row.vertices << " vertices, " << row.tight << " tight";
            if (row.vertices > 0) std::cout << ", slack " << to_string(row.min_slack) << ".." << to_string(row.max_slack);
            std::cout << '\n';
        }
        r["equality_set"] = {{"rows", rows}, {"mismatches", eq.mismatches}};
        report.add("tight set is S_1 and S_2", eq.passed(), std::to_string(eq.mismatches) + " mismatches");
    }
    report.results = r;
    return report;
}

RunReport verify_lemmas(const Context& ctx, const LemmaArgs& args)
{
    static const std::vector<std::string> known = {"identity1", "identity2", "szeroconn", "skasnxt4",
                                                   "s3ss0",     "szeroins",  "s1s2eqn"};
    if (args.which != "all" && std::find(known.begin(), known.end(), args.which) == known.end()) {
        throw std::invalid_argument("unknown lemma selector '" + args.which + "'");
    }
    check_enumeration_cap(args.n, ctx.caps.enumeration);
    const int m = args.m.value_or(args.n);
    if (m < 1 || m > args.n) throw std::invalid_argument("--m must lie in [1, n]");
    auto wanted = [&](const std::string& name) { return args.which == "all" || args.which == name; };

    RunReport report;
    report.command = "verify-lemmas";
    report.parameters = {{"which", args.which}, {"n", args.n}, {"m", m}, {"samples", args.samples}, {"certify", ctx.certify}};
    report.seeds["seed"] = ctx.seed;
    Json results;
    std::mt19937_64 rng(ctx.seed);
    const int n = args.n;

    if (wanted("identity1")) {
        if (n < 5) throw std::invalid_argument("identity1 needs n >= 5");
        std::size_t zero = 0;
        for (std::size_t s = 0; s < args.samples; ++s) {
            std::vector<int> image(static_cast<std::size_t>(n));
            std::iota(image.begin(), image.end(), 1);
            std::shuffle(image.begin(), image.end(), rng);
            std::vector<int> positions = image;  // a random ordering of [n]
            std::shuffle(positions.begin(), positions.end(), rng);
            std::array<int, 3> moved{positions[0], positions[1], positions[2]};
            std::sort(moved.begin(), moved.end());
            const auto sigmas = identity1_family(Permutation(image), moved);
            if (check_identity1(sigmas, positions[3], positions[4]).zero()) ++zero;
        }
        results["identity1"] = {{"samples", args.samples}, {"zero", zero}};
        report.add("identity1 sums to zero", zero == args.samples, std::to_string(zero) + "/" + std::to_string(args.samples));
        std::cout << "identity1: " << zero << "/" << args.samples << " zero sums\n";
    }
    if (wanted("identity2")) {
        if (n < 4) throw std::invalid_argument("identity2 needs n >= 4");
        std::size_t exact = 0;
        std::map<std::size_t, std::size_t> histogram;
        for (std::size_t s = 0; s < args.samples; ++s) {
            std::vector<int> image(static_cast<std::size_t>(n));
            std::iota(image.begin(), image.end(), 1);
            std::shuffle(image.begin(), image.end(), rng);
            std::vector<int> positions(static_cast<std::size_t>(n));
            std::iota(positions.begin(), positions.end(), 1);
            std::shuffle(positions.begin(), positions.end(), rng);
            const int i = positions[0], j = positions[1], ip = positions[2], jp = positions[3];
            const auto rep = check_identity2(identity2_chain(Permutation(image), i, j, ip, jp), i, j, ip, jp);
            ++histogram[rep.nonzeros];
            if (rep.nonzeros == 32 && rep.positive == 16 && rep.negative == 16) ++exact;
        }
        Json h = Json::object();
        for (auto [count, times] : histogram) h[std::to_string(count)] = times;
        results["identity2"] = {{"samples", args.samples}, {"exact", exact}, {"nonzero_histogram", h}};
        report.add("identity2 has 32 nonzeros, 16 of each sign", exact == args.samples,
                   std::to_string(exact) + "/" + std::to_string(args.samples));
        std::cout << "identity2: " << exact << "/" << args.samples << " chains with 32 nonzeros (16+, 16-)\n";
    }

    const bool needs_table = wanted("szeroconn") || wanted("skasnxt4") || wanted("s3ss0") || wanted("szeroins") ||
                             wanted("s1s2eqn");
    if (!needs_table) {
        report.results = results;
        return report;
    }
    const VertexTable table(n, ctx.caps.enumeration);
    const Pattern pattern = diagonal_pattern(m);
    const RankOptions options = rank_options(ctx);

    auto span_json = [](const SpanLemmaReport& r) {
        Json f = Json::array();
        for (const auto& p : r.failures) f.push_back(to_json(p));
        return Json{{"lemma", r.lemma}, {"k", r.k ? Json(*r.k) : Json(nullptr)}, {"seed", r.seed},
                    {"samples", r.samples}, {"distinct_targets", r.distinct_targets}, {"members", r.members},
                    {"non_members", r.non_members}, {"inconclusive", r.inconclusive}, {"generators", r.generators},
                    {"generator_rank", to_json(r.generator_rank)}, {"failures", f}};
    };
    auto record_span = [&](const SpanLemmaReport& r, const std::string& name) {
        // An empty sampled layer makes the lemma hold vacuously.
        report.add(name, r.passed(),
                   r.vacuous() ? "vacuous, sampled layer is empty"
                               : std::to_string(r.members) + "/" + std::to_string(r.samples) + " members");
        std::cout << name << ": " << r.members << "/" << r.samples << " members against " << r.generators
                  << " generators\n";
    };

    if (wanted("s1s2eqn")) {
        const auto eq = check_equality_set(Qap4Params{n, iota_set(1, m), iota_set(1, m)}, table);
        results["s1s2eqn"] = {{"mismatches", eq.mismatches}};
        report.add("tight set is S_1 and S_2", eq.passed(), std::to_string(eq.mismatches) + " mismatches");
        std::cout << "s1s2eqn: " << eq.mismatches << " mismatches\n";
    }
    if (wanted("szeroconn")) {
        const auto c = check_s0_connectivity(table, pattern);
        results["szeroconn"] = {{"s0_size", c.s0_size}, {"edges", c.edges}, {"components", c.components}};
        report.add("S_0 connected", c.connected(), "|S_0| = " + std::to_string(c.s0_size));
        std::cout << "szeroconn: |S_0| = " << c.s0_size << ", " << c.components << " component(s)\n";
    }
    if (wanted("skasnxt4")) {
        Json list = Json::array();
        for (int k = 4; k <= m; ++k) {
            const auto r = check_lemma_high_layers(table, pattern, k, args.samples, ctx.seed + static_cast<std::uint64_t>(k), options);
            list.push_back(span_json(r));
            record_span(r, "skasnxt4 k=" + std::to_string(k));
        }
        results["skasnxt4"] = list;
    }
    if (wanted("s3ss0")) {
        const auto r = check_lemma_third_layer(table, pattern, args.samples, ctx.seed, options);
        results["s3ss0"] = span_json(r);
        record_span(r, "s3ss0");
    }
    if (wanted("szeroins")) {
        const auto r = check_lemma_s0_differences(table, pattern, args.samples, ctx.seed, options);
        results["szeroins"] = span_json(r);
        record_span(r, "szeroins");
    }
    report.results = results;
    return report;
}

RunReport verify_slack(const Context& ctx, const SlackArgs& args)
{
    RunReport report;
    report.command = "verify-slack";
    const Family family = parse_family(args.family);
    check_enumeration_cap(args.n, ctx.caps.enumeration);
    EnumerationBounds bounds;
    bounds.cap = ctx.caps.enumeration;
    bounds.m_min = args.m_min;
    bounds.m_max = args.m_max;
    report.parameters = {{"family", args.family}, {"n", args.n}, {"kernel", args.serial ? "serial" : "parallel"}};
    if (args.m_min) report.parameters["m_min"] = *args.m_min;
    if (args.m_max) report.parameters["m_max"] = *args.m_max;

    const VertexTable table(args.n, ctx.caps.enumeration);
    std::ofstream csv;
    SweepObserver observer;
    if (!args.csv.empty()) {
        csv.open(args.csv);
        if (!csv) throw std::invalid_argument("cannot write " + args.csv);
        write_slack_csv_header(csv);
        observer = [&](std::uint64_t id, const LinearForm& form, std::span<const std::int64_t> doubled) {
            write_slack_csv_rows(csv, id, form, table, doubled);
        };
    }
    const auto sweep = sweep_family(table, family, bounds, args.serial ? KernelMode::Serial : KernelMode::Parallel, observer);
    Json r{{"forms", sweep.forms}, {"vertices", sweep.vertices}, {"violations", sweep.violations},
           {"slack_mismatches", sweep.slack_mismatches}, {"note", sweep.note}};
    auto failure_json = [](const std::optional<SweepFailure>& f) -> Json {
        if (!f) return nullptr;
        return {{"form_id", f->form_id}, {"sigma", to_json(f->sigma)}, {"evaluated_doubled", f->evaluated_doubled},
                {"closed_doubled", f->closed_doubled}};
    };
    r["first_violation"] = failure_json(sweep.first_violation);
    r["first_mismatch"] = failure_json(sweep.first_mismatch);
    report.results = r;
    report.add("valid at every vertex", sweep.violations == 0, std::to_string(sweep.violations) + " violations");
    report.add("slack matches closed form", sweep.slack_mismatches == 0,
               std::to_string(sweep.slack_mismatches) + " mismatches");
    std::cout << args.family << " n=" << args.n << ": " << sweep.forms << " forms x " << sweep.vertices << " vertices, "
              << sweep.violations << " violations, " << sweep.slack_mismatches << " slack mismatches\n";
    if (!sweep.note.empty()) std::cout << "  " << sweep.note << '\n';
    return report;
}

RunReport reduce(const Context& ctx, const ReduceArgs& args)
{
    RunReport report;
    report.command = "reduce";
    const Family family = parse_family(args.family);
    const Graph g = read_graph_file(args.graph);
    check_enumeration_cap(g.n(), ctx.caps.enumeration);
    report.parameters = {{"family", args.family}, {"graph", args.graph}, {"n", g.n()}, {"t", args.t}};

    std::optional<YPoint> y;
    std::optional<bool> predicted;  // feasibility implied by the clique number
    const int omega = max_clique_bruteforce(g, ctx.caps.clique).size;
    switch (family) {
    case Family::Qap1: {
        const int k = args.k.value_or(g.n());
        const int l = args.l.value_or(k);
        report.parameters["k"] = k;
        report.parameters["l"] = l;
        y = build_point_qap1(g, k, l, args.t);
        if (k == l) predicted = max_clique_bruteforce(graph_without(g, k), ctx.caps.clique).size <= args.t;
        break;
    }
    case Family::Qap2:
        y = build_point_qap2(g, args.t);
        predicted = std::min(omega, g.n() - 4) < std::max(3, args.t + 1);
        break;
    case Family::Qap4:
        y = build_point_qap4(g, args.t);
        predicted = omega < args.t + 1;
        break;
    default:
        throw std::invalid_argument("reduce supports qap1, qap2 and qap4");
    }
    EnumerationBounds bounds;
    bounds.cap = ctx.caps.enumeration;
    const auto membership = brute_force_membership(*y, family, bounds);
    Json r{{"clique_number", omega}, {"member", membership.member}, {"forms_checked", membership.forms_checked},
           {"point", to_json(*y)}};
    r["predicted_member"] = predicted ? Json(*predicted) : Json(nullptr);
    if (membership.witness) {
        r["witness_id"] = *membership.witness_id;
        r["witness"] = to_json(*membership.witness);
        r["witness_slack"] = to_string(membership.witness_evaluation->slack);
    }
    report.results = r;
    if (membership.witness) {
        report.add("witness confirmed exactly", !membership.witness_evaluation->satisfied);
    }
    if (predicted) {
        report.add("membership matches clique number", *predicted == membership.member,
                   "omega = " + std::to_string(omega));
    }
    std::cout << args.family << " t=" << args.t << ": ";
    if (membership.member) {
        std::cout << "Y satisfies all " << membership.forms_checked << " forms";
    } else {
        std::cout << "Y violates form " << *membership.witness_id << " of " << membership.forms_checked;
    }
    std::cout << "; clique number " << omega << '\n';
    return report;
}

RunReport clique_oracle(const Context& ctx, const OracleArgs& args)
{
    RunReport report;
    report.command = "clique-oracle";
    const Family family = parse_family(args.family);
    const Graph g = read_graph_file(args.graph);
    report.parameters = {{"family", args.family}, {"graph", args.graph}, {"n", g.n()}, {"full_sweep", args.full_sweep}};
    if (args.pad) report.parameters["pad"] = *args.pad;
    const int padded = std::max(g.n(), args.pad.value_or(reduction_minimum_n(family)));
    check_enumeration_cap(padded, ctx.caps.enumeration);

    const auto exact = max_clique_bruteforce(g, ctx.caps.clique);
    OracleOptions options;
    options.pad_to = args.pad;
    options.full_sweep = args.full_sweep;
    options.bounds.cap = ctx.caps.enumeration;
    const auto oracle = clique_via_membership_oracle(g, family, options);
    Json calls = Json::array();
    for (const auto& c : oracle.calls) {
        calls.push_back({{"k", c.k}, {"l", c.l}, {"t", c.t}, {"member", c.member},
                         {"witness_id", c.witness_id ? Json(*c.witness_id) : Json(nullptr)}});
    }
    report.results = {{"oracle", oracle.clique_number}, {"exact", exact.size}, {"witness", exact.witness},
                      {"padded_n", oracle.padded_n}, {"decided_by", oracle.decided_by}, {"calls", calls}};
    report.add("oracle agrees with exact solver", oracle.clique_number == exact.size,
               std::to_string(oracle.clique_number) + " vs " + std::to_string(exact.size));
    std::cout << "membership oracle (" << args.family << ", " << oracle.decided_by << "): " << oracle.clique_number
              << ", exact: " << exact.size << " -> " << verdict_line(oracle.clique_number == exact.size) << '\n';
    return report;
}

RunReport protocol_n0(const Context& ctx, const ProtocolArgs& args)
{
    RunReport report;
    report.command = "protocol n0";
    const auto a = bits(args.a, "a");
    const auto b = bits(args.b, "b");
    report.parameters = {{"a", args.a}, {"b", args.b}, {"samples", args.samples}};
    const auto exact = protocol_n0_exact(a, b);
    const HardMatrixSpec spec{HardKind::N, 0, a.size()};
    const auto target = hard_matrix_entry(spec, a, b);
    const int bound = 2 * index_bits(a.size());
    Json r{{"expectation", to_string(exact.expectation)}, {"matrix_entry", target}, {"max_bits", exact.max_bits},
           {"bit_bound", bound}, {"outcomes", outcomes_json(exact)}};
    report.add("expectation equals N^0 entry", exact.expectation == target);
    report.add("bits within 2 ceil(log2 n)", exact.max_bits <= bound);
    std::cout << "N^0: exact expectation " << to_string(exact.expectation) << " vs entry " << target << ", max bits "
              << exact.max_bits << " (bound " << bound << ")\n";
    if (args.samples > 0) {
        report.seeds["seed"] = ctx.seed;
        const auto s = protocol_n0_sample(a, b, args.samples, ctx.seed);
        const double z = s.standard_error > 0 ? std::abs(s.mean - static_cast<double>(target)) / s.standard_error : 0.0;
        const bool within = s.standard_error > 0 ? z <= 4.0 : s.mean == static_cast<double>(target);
        r["sample"] = {{"seed", s.seed}, {"samples", s.samples}, {"mean", s.mean}, {"standard_error", s.standard_error}};
        report.add("sample mean within 4 standard errors", within);
        std::cout << "  sampled mean " << s.mean << " +- " << s.standard_error << " over " << s.samples << " rounds\n";
    }
    report.results = r;
    return report;
}

RunReport protocol_m1(const Context&, const ProtocolArgs& args)
{
    RunReport report;
    report.command = "protocol m1";
    const auto a = bits(args.a, "a");
    const auto b = bits(args.b, "b");
    report.parameters = {{"a", args.a}, {"b", args.b}};
    const auto oracle = send_vector_n1_oracle(a.size());
    const auto composed = protocol_m1_composed(a, b, oracle);
    const auto target = hard_matrix_entry({HardKind::M, 1, a.size()}, a, b);
    const int bound = 1 + std::max(2 * index_bits(a.size()), oracle.bits);
    report.results = {{"expectation", to_string(composed.expectation)}, {"matrix_entry", target},
                      {"max_bits", composed.max_bits}, {"bit_bound", bound}, {"n1_protocol", oracle.name},
                      {"outcomes", outcomes_json(composed)}};
    report.add("expectation equals M^1 entry", composed.expectation == target);
    report.add("bits within 1 + max(2 ceil(log2 n), c)", composed.max_bits <= bound);
    std::cout << "M^1: expectation " << to_string(composed.expectation) << " vs entry " << target << ", max bits "
              << composed.max_bits << " (bound " << bound << ")\n";
    return report;
}

RunReport protocol_slack(const Context&, const ProtocolArgs& args)
{
    RunReport report;
    report.command = "protocol slack";
    const auto a = bits(args.a, "a");
    const auto b = bits(args.b, "b");
    report.parameters = {{"family", args.family}, {"a", args.a}, {"b", args.b}};
    const auto r = slack_protocol(parse_family(args.family), a, b);
    Json j{{"short_circuit", r.short_circuit}, {"reason", r.reason}, {"extra_bits", r.extra_bits},
           {"target", to_string(r.target)}, {"output", to_string(r.output)}, {"matrix_entry", to_string(r.exact)}};
    if (!r.short_circuit) {
        j["qap_n"] = r.embedding_n;
        j["alice_form"] = to_json(*r.alice_form);
        j["bob_permutation"] = to_json(*r.bob_permutation);
        j["bob_vertex"] = to_json(QapVertex(*r.bob_permutation));
        j["slack"] = to_string(r.slack);
        j["closed_slack"] = to_string(r.closed_slack);
    }
    report.results = j;
    report.add(r.short_circuit ? "short-circuit output equals N^1 entry" : "slack equals half the N^1 entry", r.agrees());
    if (r.short_circuit) {
        std::cout << args.family << ": short-circuit (" << r.reason << "), output " << to_string(r.output) << ", "
                  << r.extra_bits << " bits\n";
    } else {
        std::cout << args.family << " at n=" << r.embedding_n << ": sigma_b = " << r.bob_permutation->to_string()
                  << ", slack " << to_string(r.slack) << ", N^1/2 = " << to_string(r.target) << '\n';
    }
    return report;
}

RunReport protocol_embedding(const Context&, const ProtocolArgs& args)
{
    RunReport report;
    report.command = "protocol embedding";
    report.parameters = {{"n", args.n}};
    Json rows = Json::array();
    for (int k = 2; k <= args.n - 1; ++k) {
        const auto e = embedding_check(k, args.n);
        rows.push_back({{"k", k}, {"pairs", e.pairs}, {"mismatches", e.mismatches}});
        report.add("embedding k=" + std::to_string(k), e.passed(), std::to_string(e.mismatches) + " mismatches");
        std::cout << "N^1 into N^" << k << " at n=" << args.n << ": " << e.pairs << " pairs, " << e.mismatches
                  << " mismatches\n";
    }
    report.results = {{"checks", rows}};
    return report;
}

}  // namespace qapf::cli
