#pragma once

// JSON encodings of the toolkit's values and the run report written by the CLI.
// Rationals are "p/q" strings; permutations are "s1 s2 ... sn" strings.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qapf/family_params.hpp"
#include "qapf/linear_form.hpp"
#include "qapf/rank.hpp"
#include "qapf/vertex.hpp"
#include "qapf/ypoint.hpp"

namespace qapf {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);

/// Nonzero cells as [[i,j],[k,l]] pairs, diagonal cells included.
Json to_json(const QapVertex& vertex);

Json to_json(const FamilyParams& params);
FamilyParams params_from_json(const Json& j);

/// {family, params, diag, offdiag, rhs, sense, scale}; family and params are null for
/// forms built without parameters.
Json to_json(const LinearForm& form);
LinearForm form_from_json(const Json& j);

Json to_json(const YPoint& y);
YPoint ypoint_from_json(const Json& j);

Json to_json(const RankReport& report);

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    Json parameters = Json::object();
    std::vector<Verdict> verdicts;
    std::map<std::string, double> timings;  // seconds; the only nondeterministic part
    std::map<std::string, std::uint64_t> seeds;
    Json results = Json::object();

    void add(std::string name, bool pass, std::string detail = {});
    bool passed() const;
};

std::string tool_version();

/// Keys in a fixed order; `timings` last so deterministic comparisons can drop it.
Json to_json(const RunReport& report);

}  // namespace qapf
