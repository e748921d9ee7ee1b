#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qapf/permutation.hpp"

namespace qapf {

enum class Family { Qap1, Qap2, Qap3, Qap4, Qap5 };

std::string_view to_string(Family family);
/// Accepts "qap1".."qap5", case-insensitive.
Family parse_family(std::string_view text);

/// sum_r Y_{i_r j_r, kl} - Y_{kl,kl} - sum_{r<s} Y_{i_r j_r, i_s j_s} <= 0
struct Qap1Params {
    int n = 0;
    std::vector<int> iSet;
    std::vector<int> jSet;
    int k = 0;
    int l = 0;
};

/// (beta-1) sum_{P x Q} Y_{ij,ij} - sum_{i<k} Y_{ij,kl} <= (beta^2-beta)/2
struct Qap2Params {
    int n = 0;
    std::vector<int> P;
    std::vector<int> Q;
    int beta = 0;
};

/// Which branch of the |Q| lower-bound condition admitted a QAP3 parameter set.
enum class Qap3QBranch {
    NoP2,        // |P2| = 0, the condition does not apply
    SingleP2,    // |P2| = 1: |Q| >= min{-beta+5, beta+2}
    FirstOfTwo,  // |P2| >= 2: |Q| >= min{-beta+5, beta+3}
    SecondOfTwo  // |P2| >= 2: only |Q| >= min{-beta+4, beta+4} holds
};

std::string_view to_string(Qap3QBranch branch);

struct Qap3Params {
    int n = 0;
    std::vector<int> P1;
    std::vector<int> P2;
    std::vector<int> Q;
    int beta = 0;
};

/// sum_r Y_{i_r j_r, i_r j_r} - sum_{r<s} Y_{i_r j_r, i_s j_s} <= 1
struct Qap4Params {
    int n = 0;
    std::vector<int> iSet;
    std::vector<int> jSet;
};

/// sum n_ij n_kl Y_{ij,kl} - (2 beta - 1) sum n_ij Y_{ij,ij} >= beta - beta^2
struct Qap5Params {
    int n = 0;
    int beta = 0;
    std::map<PairIndex, std::int64_t> coeffs;  // zero entries may be omitted
};

using FamilyParams = std::variant<Qap1Params, Qap2Params, Qap3Params, Qap4Params, Qap5Params>;

Family family_of(const FamilyParams& params);
int size_of(const FamilyParams& params);

}  // namespace qapf
