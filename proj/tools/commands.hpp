#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qapf/config.hpp"
#include "qapf/serialize.hpp"

namespace qapf::cli {

struct Context {
    Caps caps;
    std::uint64_t seed = 1;
    bool certify = false;
};

struct FacetArgs {
    std::string family = "qap4";
    int n = 7;
    std::optional<int> m;
    std::optional<int> beta;
    std::vector<int> i, j, P, Q, P1, P2;
    std::optional<int> k, l;
    std::string coeffs;  // "i:j:c,..." for QAP5
    std::string expect = "facet";
};

struct LemmaArgs {
    std::string which = "all";
    int n = 7;
    std::optional<int> m;
    std::size_t samples = 200;
};

struct SlackArgs {
    std::string family = "qap4";
    int n = 7;
    std::optional<int> m_min, m_max;
    std::string csv;
    bool serial = false;
};

struct ReduceArgs {
    std::string family;
    std::string graph;
    int t = 0;
    std::optional<int> k, l;
};

struct OracleArgs {
    std::string family;
    std::string graph;
    std::optional<int> pad;
    bool full_sweep = false;
};

struct ProtocolArgs {
    std::string a, b;
    std::string family = "qap2";
    std::uint64_t samples = 0;
    int k = 2;
    int n = 0;
};

RunReport verify_facet(const Context& ctx, const FacetArgs& args);
RunReport verify_lemmas(const Context& ctx, const LemmaArgs& args);
RunReport verify_slack(const Context& ctx, const SlackArgs& args);
RunReport reduce(const Context& ctx, const ReduceArgs& args);
RunReport clique_oracle(const Context& ctx, const OracleArgs& args);
RunReport protocol_n0(const Context& ctx, const ProtocolArgs& args);
RunReport protocol_m1(const Context& ctx, const ProtocolArgs& args);
RunReport protocol_slack(const Context& ctx, const ProtocolArgs& args);
RunReport protocol_embedding(const Context& ctx, const ProtocolArgs& args);

}  // namespace qapf::cli
