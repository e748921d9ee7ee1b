#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qapf/family_params.hpp"
#include "qapf/linear_form.hpp"
#include "qapf/permutation.hpp"
#include "qapf/rational.hpp"

namespace qapf {

class BitVector {
public:
    explicit BitVector(std::vector<std::uint8_t> bits);
    /// "01101"; throws on any other character or an empty string.
    static BitVector parse(std::string_view text);
    /// Bit r (0-based) of `code` becomes position r+1.
    static BitVector from_code(int n, std::uint64_t code);

    int size() const { return static_cast<int>(bits_.size()); }
    /// 1-based access.
    int operator[](int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
    int ones() const;
    std::vector<int> support() const;
    std::string to_string() const;
    BitVector with_bit(int i, int value) const;
    BitVector append_ones(int count) const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

int dot(const BitVector& a, const BitVector& b);

/// ceil(log2 n), the bits needed to name one of n indices; 0 for n <= 1.
int index_bits(int n);

enum class HardKind { M, N };

struct HardMatrixSpec {
    HardKind kind = HardKind::N;
    int k = 0;
    int n = 0;
};

/// M: (a.b - k)^2, N: (a.b - k)(a.b - k - 1).
std::int64_t hard_matrix_entry(const HardMatrixSpec& spec, const BitVector& a, const BitVector& b);

/// One leaf of a protocol: bits exchanged, output, and probability of reaching it.
struct ProtocolOutcome {
    int transcriptBits = 0;
    Rational output;
    Rational probability;
};

struct ExactReport {
    std::vector<ProtocolOutcome> outcomes;  // merged by (bits, output)
    Rational expectation;
    Rational total_probability;
    int max_bits = 0;
};

struct SampleReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    double mean = 0;
    double standard_error = 0;
    int max_bits = 0;
};

/// Alice picks a uniform pair {i, j}; if a_i = a_j = 1 she sends both indices and Bob
/// outputs n(n-1) when b_i = b_j = 1. Requires n >= 2.
ExactReport protocol_n0_exact(const BitVector& a, const BitVector& b);
SampleReport protocol_n0_sample(const BitVector& a, const BitVector& b, std::uint64_t samples, std::uint64_t seed);

/// Expectation source for N^1 with its declared bit cost.
struct N1Oracle {
    std::string name;
    int bits = 0;
    std::function<Rational(const BitVector&, const BitVector&)> expectation;
};

/// Alice sends a in n bits and Bob outputs N^1(a, b) exactly.
N1Oracle send_vector_n1_oracle(int n);

/// One coin bit chooses N^0 (the pair protocol) or N^1 (the oracle). The expectation is
/// (N^0 + N^1)/2 = M^1.
ExactReport protocol_m1_composed(const BitVector& a, const BitVector& b, const N1Oracle& n1);

struct EmbeddingReport {
    int k = 0;
    int n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    bool passed() const { return mismatches == 0; }
};

/// Appending k-1 ones to a, b in {0,1}^(n-k+1) maps N^1 entries onto N^k entries.
/// Exhaustive; requires 2 <= k <= n-1 and n <= 10.
EmbeddingReport embedding_check(int k, int n);

struct SlackProtocolResult {
    Family family = Family::Qap1;
    bool short_circuit = false;
    std::string reason;  // why the run was short-circuited
    std::optional<LinearForm> alice_form;
    std::optional<FamilyParams> alice_params;
    std::optional<Permutation> bob_permutation;
    int embedding_n = 0;  // size of the QAP instance
    int extra_bits = 0;   // bits exchanged outside the slack protocol itself
    Rational slack;         // evaluated at Bob's vertex
    Rational closed_slack;  // closed form at Bob's vertex
    Rational target;        // N^1(a,b) / 2
    Rational output;        // twice the slack, or the short-circuit answer
    Rational exact;         // N^1(a,b)

    bool agrees() const
    {
        return short_circuit ? output == exact : slack == target && closed_slack == target && output == exact;
    }
};

/// Alice's inequality and Bob's vertex for one family, or the short-circuit answer when
/// a, b fall in a case the construction excludes.
SlackProtocolResult slack_protocol(Family family, const BitVector& a, const BitVector& b);

/// Bob's permutation for QAP2 at n = 2m+1.
Permutation qap2_bob_permutation(const BitVector& b);
/// Bob's permutation for QAP3 at n = 2m+1 with the displaced index p2.
Permutation qap3_bob_permutation(const BitVector& b, int p2);
/// Fixes every position with b_i = 1 and shifts the zero positions cyclically.
Permutation cyclic_bob_permutation(const BitVector& b);

}  // namespace qapf
