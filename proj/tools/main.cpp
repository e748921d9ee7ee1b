#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qapf/kernels.hpp"

using namespace qapf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification toolkit for QAP polytope inequalities, reductions and protocols"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    std::string json_path;
    std::string config_path;
    bool acknowledge = false;
    int workers = 0;
    cli::Context ctx;
    app.add_option("--json", json_path, "Write the JSON run report to FILE");
    app.add_option("--seed", ctx.seed, "Seed for every randomized step")->capture_default_str();
    app.add_option("--workers", workers, "Worker threads (0 = all execution units)")->check(CLI::NonNegativeNumber);
    app.add_flag("--certify", ctx.certify, "Confirm modular ranks with exact rational elimination");
    app.add_option("--config", config_path, "key=value caps file")->check(CLI::ExistingFile);
    app.add_flag("--acknowledge-caps", acknowledge, "Allow a config to raise caps above their defaults");

    std::function<RunReport()> run;

    cli::FacetArgs facet;
    auto* f = app.add_subcommand("verify-facet", "Validity, facet dimension and equality-set checks for one form");
    f->add_option("--family", facet.family)->capture_default_str();
    f->add_option("--n", facet.n)->capture_default_str();
    f->add_option("--m", facet.m, "Pattern length for qap1/qap4 (pairs (1,1)..(m,m))");
    f->add_option("--beta", facet.beta);
    f->add_option("--i", facet.i)->delimiter(',');
    f->add_option("--j", facet.j)->delimiter(',');
    f->add_option("--k", facet.k);
    f->add_option("--l", facet.l);
    f->add_option("--P", facet.P)->delimiter(',');
    f->add_option("--Q", facet.Q)->delimiter(',');
    f->add_option("--P1", facet.P1)->delimiter(',');
    f->add_option("--P2", facet.P2)->delimiter(',');
    f->add_option("--coeffs", facet.coeffs, "qap5 coefficients as i:j:c,...");
    f->add_option("--expect", facet.expect, "facet | valid-only")->capture_default_str();
    f->callback([&] { run = [&] { return cli::verify_facet(ctx, facet); }; });

    cli::LemmaArgs lemma;
    auto* l = app.add_subcommand("verify-lemmas", "Sampled and exhaustive checks of the facet-proof lemmas");
    l->add_option("--which", lemma.which, "identity1|identity2|szeroconn|skasnxt4|s3ss0|szeroins|s1s2eqn|all")
        ->capture_default_str();
    l->add_option("--n", lemma.n)->capture_default_str();
    l->add_option("--m", lemma.m, "Pattern length (default n)");
    l->add_option("--samples", lemma.samples)->capture_default_str();
    l->callback([&] { run = [&] { return cli::verify_lemmas(ctx, lemma); }; });

    cli::SlackArgs slack;
    auto* s = app.add_subcommand("verify-slack", "Sweep a family for validity and closed-form slack");
    s->add_option("--family", slack.family)->capture_default_str();
    s->add_option("--n", slack.n)->capture_default_str();
    s->add_option("--m-min", slack.m_min);
    s->add_option("--m-max", slack.m_max);
    s->add_option("--csv", slack.csv, "Write per-vertex slack rows to FILE");
    s->add_flag("--serial", slack.serial, "Use the serial reference kernels");
    s->callback([&] { run = [&] { return cli::verify_slack(ctx, slack); }; });

    cli::ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "Build a reduction point and test its membership");
    r->add_option("--family", red.family)->required();
    r->add_option("--graph", red.graph)->required()->check(CLI::ExistingFile);
    r->add_option("--t", red.t)->required();
    r->add_option("--k", red.k);
    r->add_option("--l", red.l);
    r->callback([&] { run = [&] { return cli::reduce(ctx, red); }; });

    cli::OracleArgs oracle;
    auto* o = app.add_subcommand("clique-oracle", "Clique number through membership sweeps vs the exact solver");
    o->add_option("--family", oracle.family)->required();
    o->add_option("--graph", oracle.graph)->required()->check(CLI::ExistingFile);
    o->add_option("--pad", oracle.pad, "Pad with isolated vertices to this size");
    o->add_flag("--full-sweep", oracle.full_sweep, "Evaluate every t");
    o->callback([&] { run = [&] { return cli::clique_oracle(ctx, oracle); }; });

    cli::ProtocolArgs proto;
    auto* p = app.add_subcommand("protocol", "Communication protocols for the hard matrices");
    p->require_subcommand(1);
    auto* n0 = p->add_subcommand("n0", "Pair-sampling protocol for N^0");
    n0->add_option("--a", proto.a)->required();
    n0->add_option("--b", proto.b)->required();
    n0->add_option("--samples", proto.samples, "Also run this many sampled rounds");
    n0->callback([&] { run = [&] { return cli::protocol_n0(ctx, proto); }; });
    auto* m1 = p->add_subcommand("m1", "Coin-composed protocol for M^1");
    m1->add_option("--a", proto.a)->required();
    m1->add_option("--b", proto.b)->required();
    m1->callback([&] { run = [&] { return cli::protocol_m1(ctx, proto); }; });
    auto* sl = p->add_subcommand("slack", "Alice's inequality and Bob's vertex reproduce N^1/2");
    sl->add_option("--family", proto.family)->capture_default_str();
    sl->add_option("--a", proto.a)->required();
    sl->add_option("--b", proto.b)->required();
    sl->callback([&] { run = [&] { return cli::protocol_slack(ctx, proto); }; });
    auto* em = p->add_subcommand("embedding", "N^1 entries embed into N^k by appending ones");
    em->add_option("--n", proto.n)->required()->check(CLI::Range(3, 10));
    em->callback([&] { run = [&] { return cli::protocol_embedding(ctx, proto); }; });

    CLI11_PARSE(app, argc, argv);

    RunReport report;
    try {
        if (!config_path.empty()) ctx.caps = read_caps_file(config_path);
        check_acknowledged(ctx.caps, acknowledge);
        set_worker_count(workers);
        const auto start = std::chrono::steady_clock::now();
        report = run();
        report.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    report.parameters["caps"] = {{"enumeration", ctx.caps.enumeration}, {"clique", ctx.caps.clique}};

    for (const auto& v : report.verdicts) {
        std::cout << (v.pass ? "PASS  " : "FAIL  ") << v.name;
        if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
        std::cout << '\n';
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            return kExitFail;
        }
        out << to_json(report).dump(2) << '\n';
    }
    return report.passed() ? 0 : kExitFail;
}
