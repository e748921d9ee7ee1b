#include "qapf/serialize.hpp"

#include <stdexcept>

#ifndef QAPF_VERSION
#define QAPF_VERSION "0.0.0"
#endif

namespace qapf {

namespace {

Json pair_json(PairIndex p) { return Json::array({p.i, p.j}); }

PairIndex pair_from(const Json& j)
{
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected an [i, j] pair, got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

Sense sense_from(const std::string& text)
{
    if (text == "<=") return Sense::LessEqual;
    if (text == ">=") return Sense::GreaterEqual;
    throw std::invalid_argument("unknown sense '" + text + "'");
}

}  // namespace

Json to_json(const Permutation& sigma) { return sigma.to_string(); }

Permutation permutation_from_json(const Json& j) { return Permutation::parse(j.get<std::string>()); }

Json to_json(const QapVertex& vertex)
{
    Json out = Json::array();
    const int n = vertex.n();
    for (UPair cell : vertex.entries()) {
        out.push_back(Json::array({pair_json(pair_from_flat(n, cell.a)), pair_json(pair_from_flat(n, cell.b))}));
    }
    return out;
}

Json to_json(const FamilyParams& params)
{
    return std::visit(
        [](const auto& p) -> Json {
            using T = std::decay_t<decltype(p)>;
            Json j;
            j["n"] = p.n;
            if constexpr (std::is_same_v<T, Qap1Params>) {
                j["i"] = p.iSet;
                j["j"] = p.jSet;
                j["k"] = p.k;
                j["l"] = p.l;
            } else if constexpr (std::is_same_v<T, Qap2Params>) {
                j["P"] = p.P;
                j["Q"] = p.Q;
                j["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, Qap3Params>) {
                j["P1"] = p.P1;
                j["P2"] = p.P2;
                j["Q"] = p.Q;
                j["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, Qap4Params>) {
                j["i"] = p.iSet;
                j["j"] = p.jSet;
            } else {
                j["beta"] = p.beta;
                Json coeffs = Json::array();
                for (const auto& [cell, c] : p.coeffs) coeffs.push_back(Json::array({cell.i, cell.j, c}));
                j["coeffs"] = coeffs;
            }
            return j;
        },
        params);
}

FamilyParams params_from_json(const Json& j)
{
    const Family family = parse_family(j.at("family").get<std::string>());
    const Json& p = j.at("params");
    const int n = p.at("n").get<int>();
    switch (family) {
    case Family::Qap1: return Qap1Params{n, ints(p.at("i")), ints(p.at("j")), p.at("k").get<int>(), p.at("l").get<int>()};
    case Family::Qap2: return Qap2Params{n, ints(p.at("P")), ints(p.at("Q")), p.at("beta").get<int>()};
    case Family::Qap3: return Qap3Params{n, ints(p.at("P1")), ints(p.at("P2")), ints(p.at("Q")), p.at("beta").get<int>()};
    case Family::Qap4: return Qap4Params{n, ints(p.at("i")), ints(p.at("j"))};
    case Family::Qap5: {
        Qap5Params q{n, p.at("beta").get<int>(), {}};
        for (const auto& entry : p.at("coeffs")) {
            q.coeffs[{entry.at(0).get<int>(), entry.at(1).get<int>()}] = entry.at(2).get<std::int64_t>();
        }
        return q;
    }
    }
    throw std::invalid_argument("unreachable family");
}

Json to_json(const LinearForm& form)
{
    Json j;
    const int n = form.n();
    if (form.params()) {
        j["family"] = std::string(to_string(family_of(*form.params())));
        j["params"] = to_json(*form.params());
    } else {
        j["family"] = nullptr;
        j["params"] = nullptr;
        j["n"] = n;
    }
    Json diag = Json::array();
    for (const auto& t : form.diag()) diag.push_back({{"cell", pair_json(pair_from_flat(n, t.flat))}, {"coef", t.coef}});
    Json off = Json::array();
    for (const auto& t : form.offdiag()) {
        off.push_back({{"cells", Json::array({pair_json(pair_from_flat(n, t.cell.a)), pair_json(pair_from_flat(n, t.cell.b))})},
                       {"coef", t.coef}});
    }
    j["diag"] = diag;
    j["offdiag"] = off;
    j["rhs"] = form.rhs();
    j["sense"] = std::string(to_string(form.sense()));
    j["scale"] = form.scale();
    return j;
}

LinearForm form_from_json(const Json& j)
{
    std::optional<FamilyParams> params;
    int n = 0;
    if (!j.at("family").is_null()) {
        params = params_from_json(j);
        n = size_of(*params);
    } else {
        n = j.at("n").get<int>();
    }
    LinearFormBuilder builder(n);
    for (const auto& t : j.at("diag")) builder.add_diag(pair_from(t.at("cell")), t.at("coef").get<std::int64_t>());
    for (const auto& t : j.at("offdiag")) {
        builder.add_offdiag(pair_from(t.at("cells").at(0)), pair_from(t.at("cells").at(1)), t.at("coef").get<std::int64_t>());
    }
    return builder.build(sense_from(j.at("sense").get<std::string>()), j.at("rhs").get<std::int64_t>(),
                         j.at("scale").get<int>(), params);
}

Json to_json(const YPoint& y)
{
    Json j;
    j["n"] = y.n();
    j["provenance"] = y.provenance();
    Json entries = Json::array();
    for (const auto& [cell, value] : y.values()) {
        entries.push_back({{"cells", Json::array({pair_json(pair_from_flat(y.n(), cell.a)), pair_json(pair_from_flat(y.n(), cell.b))})},
                           {"value", to_string(value)}});
    }
    j["entries"] = entries;
    return j;
}

YPoint ypoint_from_json(const Json& j)
{
    YPoint y(j.at("n").get<int>(), j.value("provenance", std::string{}));
    for (const auto& e : j.at("entries")) {
        y.set(pair_from(e.at("cells").at(0)), pair_from(e.at("cells").at(1)), parse_rational(e.at("value").get<std::string>()));
    }
    return y;
}

Json to_json(const RankReport& report)
{
    Json j;
    j["rows"] = report.rowCount;
    j["columns"] = report.columnDimension;
    Json ranks = Json::array();
    for (const auto& r : report.ranks) ranks.push_back({{"prime", r.prime}, {"rank", r.rank}});
    j["primes"] = ranks;
    j["consensus_rank"] = report.consensusRank ? Json(*report.consensusRank) : Json(nullptr);
    j["rational_rank"] = report.rationalRank ? Json(*report.rationalRank) : Json(nullptr);
    j["escalated"] = report.escalated;
    j["conclusive"] = report.conclusive();
    return j;
}

void RunReport::add(std::string name, bool pass, std::string detail)
{
    verdicts.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::passed() const
{
    for (const auto& v : verdicts) {
        if (!v.pass) return false;
    }
    return true;
}

std::string tool_version() { return QAPF_VERSION; }

Json to_json(const RunReport& report)
{
    Json j;
    j["command"] = report.command;
    j["toolVersion"] = tool_version();
    j["parameters"] = report.parameters;
    j["seeds"] = report.seeds;
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    j["verdicts"] = verdicts;
    j["passed"] = report.passed();
    j["results"] = report.results;
    j["timings"] = report.timings;
    return j;
}

}  // namespace qapf
