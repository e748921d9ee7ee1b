#include "qapf/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qapf/families.hpp"

namespace qapf {

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
    }
}

BitVector BitVector::parse(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty bit vector");
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit vector '" + std::string(text) + "' has a character other than 0/1");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitVector(std::move(bits));
}

BitVector BitVector::from_code(int n, std::uint64_t code)
{
    if (n < 1 || n > 64) throw std::invalid_argument("bit vector length must be in [1, 64]");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) bits[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>((code >> r) & 1U);
    return BitVector(std::move(bits));
}

int BitVector::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<int> BitVector::support() const
{
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i) {
        if ((*this)[i]) out.push_back(i);
    }
    return out;
}

std::string BitVector::to_string() const
{
    std::string out;
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

BitVector BitVector::with_bit(int i, int value) const
{
    if (i < 1 || i > size()) throw std::invalid_argument("bit index out of range");
    auto bits = bits_;
    bits[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(value != 0);
    return BitVector(std::move(bits));
}

BitVector BitVector::append_ones(int count) const
{
    auto bits = bits_;
    bits.insert(bits.end(), static_cast<std::size_t>(std::max(count, 0)), 1);
    return BitVector(std::move(bits));
}

int dot(const BitVector& a, const BitVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("bit vectors differ in length");
    int total = 0;
    for (int i = 1; i <= a.size(); ++i) total += a[i] & b[i];
    return total;
}

int index_bits(int n) { return n <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))); }

std::int64_t hard_matrix_entry(const HardMatrixSpec& spec, const BitVector& a, const BitVector& b)
{
    if (a.size() != spec.n || b.size() != spec.n) {
        throw std::invalid_argument("hard matrix of order " + std::to_string(spec.n) + " indexed by vectors of length " +
                                    std::to_string(a.size()));
    }
    const std::int64_t x = dot(a, b) - spec.k;
    return spec.kind == HardKind::M ? x * x : x * (x - 1);
}

namespace {

std::int64_t n1_entry(const BitVector& a, const BitVector& b)
{
    return hard_matrix_entry({HardKind::N, 1, a.size()}, a, b);
}

void require_pair(const BitVector& a, const BitVector& b, int min_n)
{
    if (a.size() != b.size()) throw std::invalid_argument("bit vectors differ in length");
    if (a.size() < min_n) {
        throw std::invalid_argument("protocol needs vectors of length >= " + std::to_string(min_n));
    }
}

ExactReport merge(const std::vector<ProtocolOutcome>& leaves)
{
    std::map<std::pair<int, Rational>, Rational> merged;
    for (const auto& leaf : leaves) merged[{leaf.transcriptBits, leaf.output}] += leaf.probability;
    ExactReport report;
    for (const auto& [key, probability] : merged) {
        report.outcomes.push_back({key.first, key.second, probability});
        report.expectation += key.second * probability;
        report.total_probability += probability;
        report.max_bits = std::max(report.max_bits, key.first);
    }
    return report;
}

}  // namespace

ExactReport protocol_n0_exact(const BitVector& a, const BitVector& b)
{
    require_pair(a, b, 2);
    const int n = a.size();
    const Rational each(1, binom2(n));
    const int send = 2 * index_bits(n);
    std::vector<ProtocolOutcome> leaves;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const bool alice = a[i] && a[j];
            const bool bob = alice && b[i] && b[j];
            leaves.push_back({alice ? send : 0, Rational(bob ? n * (n - 1) : 0), each});
        }
    }
    return merge(leaves);
}

SampleReport protocol_n0_sample(const BitVector& a, const BitVector& b, std::uint64_t samples, std::uint64_t seed)
{
    require_pair(a, b, 2);
    if (samples < 2) throw std::invalid_argument("sampling needs at least two rounds");
    const int n = a.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> first(1, n);
    std::uniform_int_distribution<int> second(1, n - 1);
    const double hit = static_cast<double>(n) * (n - 1);
    SampleReport report;
    report.seed = seed;
    report.samples = samples;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        // Uniform ordered pair of distinct indices; the unordered pair is uniform too.
        const int i = first(rng);
        int j = second(rng);
        if (j >= i) ++j;
        if (a[i] && a[j]) {
            report.max_bits = 2 * index_bits(n);
            if (b[i] && b[j]) ++hits;
        }
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    report.mean = hit * p;
    // Sample variance of a two-valued output {0, hit}.
    const double var = hit * hit * p * (1 - p) * static_cast<double>(samples) / static_cast<double>(samples - 1);
    report.standard_error = std::sqrt(var / static_cast<double>(samples));
    return report;
}

N1Oracle send_vector_n1_oracle(int n)
{
    return {"send-vector", n, [](const BitVector& a, const BitVector& b) { return Rational(n1_entry(a, b)); }};
}

ExactReport protocol_m1_composed(const BitVector& a, const BitVector& b, const N1Oracle& n1)
{
    const auto n0 = protocol_n0_exact(a, b);
    const Rational half(1, 2);
    std::vector<ProtocolOutcome> leaves;
    for (const auto& leaf : n0.outcomes) leaves.push_back({1 + leaf.transcriptBits, leaf.output, half * leaf.probability});
    leaves.push_back({1 + n1.bits, n1.expectation(a, b), half});
    return merge(leaves);
}

EmbeddingReport embedding_check(int k, int n)
{
    if (k < 2 || k > n - 1 || n > 10) throw std::invalid_argument("embedding check needs 2 <= k <= n-1 and n <= 10");
    const int m = n - k + 1;
    EmbeddingReport report{k, n, 0, 0};
    const std::uint64_t codes = std::uint64_t{1} << m;
    for (std::uint64_t ca = 0; ca < codes; ++ca) {
        const auto a = BitVector::from_code(m, ca);
        const auto ap = a.append_ones(k - 1);
        for (std::uint64_t cb = 0; cb < codes; ++cb) {
            const auto b = BitVector::from_code(m, cb);
            ++report.pairs;
            if (n1_entry(a, b) != hard_matrix_entry({HardKind::N, k, n}, ap, b.append_ones(k - 1))) ++report.mismatches;
        }
    }
    return report;
}

Permutation cyclic_bob_permutation(const BitVector& b)
{
    std::vector<int> image(static_cast<std::size_t>(b.size()));
    std::iota(image.begin(), image.end(), 1);
    std::vector<int> zeros;
    for (int i = 1; i <= b.size(); ++i) {
        if (!b[i]) zeros.push_back(i);
    }
    for (std::size_t r = 0; r < zeros.size(); ++r) {
        image[static_cast<std::size_t>(zeros[r] - 1)] = zeros[(r + 1) % zeros.size()];
    }
    return Permutation(std::move(image));
}

Permutation qap2_bob_permutation(const BitVector& b)
{
    const int m = b.size();
    std::vector<int> image(static_cast<std::size_t>(2 * m + 1));
    for (int i = 1; i <= 2 * m + 1; ++i) {
        int v = i;
        if (i <= m) {
            v = b[i] ? i : i + m;
        } else if (i <= 2 * m && !b[i - m]) {
            v = i - m;
        }
        image[static_cast<std::size_t>(i - 1)] = v;
    }
    return Permutation(std::move(image));
}

Permutation qap3_bob_permutation(const BitVector& b, int p2)
{
    const int m = b.size();
    if (p2 < 1 || p2 > m) throw std::invalid_argument("displaced index outside [1, m]");
    std::vector<int> image(static_cast<std::size_t>(2 * m + 1));
    for (int i = 1; i <= 2 * m + 1; ++i) {
        int v = i;
        if (i <= m) {
            v = (i != p2 && b[i]) ? i : i + m;
        } else if (i <= 2 * m && (!b[i - m] || i - m == p2)) {
            v = i - m;
        }
        image[static_cast<std::size_t>(i - 1)] = v;
    }
    return Permutation(std::move(image));
}

namespace {

SlackProtocolResult short_circuit(Family family, const BitVector& a, const BitVector& b, std::string reason, int bits)
{
    SlackProtocolResult r;
    r.family = family;
    r.short_circuit = true;
    r.reason = std::move(reason);
    r.extra_bits = bits;
    r.exact = Rational(n1_entry(a, b));
    r.target = r.exact / 2;
    r.output = r.exact;
    return r;
}

void finish(SlackProtocolResult& r, const FamilyParams& params, const Permutation& sigma, const BitVector& a,
            const BitVector& b)
{
    validate_params(params);
    r.alice_params = params;
    r.alice_form = build_form(params);
    r.embedding_n = size_of(params);
    r.bob_permutation = sigma;
    r.slack = slack_at_vertex(*r.alice_form, sigma);
    r.closed_slack = closed_form_slack(params, sigma);
    r.exact = Rational(n1_entry(a, b));
    r.target = r.exact / 2;
    r.output = 2 * r.slack;
}

SlackProtocolResult qap1_protocol(const BitVector& a, const BitVector& b)
{
    const int n = a.size();
    const int lg = index_bits(n);
    if (n < 6) return short_circuit(Family::Qap1, a, b, "n < 6: Alice sends a", n);
    if (a.ones() == 0) return short_circuit(Family::Qap1, a, b, "a = 0: a.b = 0 is known to Alice", 0);
    if (a.ones() == n) return short_circuit(Family::Qap1, a, b, "a all-one: Bob knows a.b = |b|", 1);
    int zeros_b = n - b.ones();
    if (zeros_b < 3) return short_circuit(Family::Qap1, a, b, "b has fewer than 3 zeros: Bob sends them", zeros_b * lg);
    if (a.ones() < 3) return short_circuit(Family::Qap1, a, b, "|a| < 3: Alice sends her support", a.ones() * lg);

    int p = 1;
    while (a[p]) ++p;
    Qap1Params params{n, a.support(), a.support(), p, p};
    SlackProtocolResult r;
    r.family = Family::Qap1;
    r.extra_bits = lg;  // Alice names p
    finish(r, params, cyclic_bob_permutation(b.with_bit(p, 1)), a, b);
    return r;
}

SlackProtocolResult qap2_protocol(const BitVector& a, const BitVector& b)
{
    const int m = a.size();
    if (a.ones() < 3) {
        return short_circuit(Family::Qap2, a, b, "|a| < 3: Alice sends her support", a.ones() * index_bits(m));
    }
    Qap2Params params{2 * m + 1, a.support(), a.support(), 2};
    SlackProtocolResult r;
    r.family = Family::Qap2;
    finish(r, params, qap2_bob_permutation(b), a, b);
    return r;
}

SlackProtocolResult qap3_protocol(const BitVector& a, const BitVector& b)
{
    const int m = a.size();
    if (a.ones() == m) return short_circuit(Family::Qap3, a, b, "a all-one: Bob knows a.b = |b|", 1);
    if (a.ones() < 3) {
        return short_circuit(Family::Qap3, a, b, "|a| < 3: Alice sends her support", a.ones() * index_bits(m));
    }
    int p2 = 1;
    while (a[p2]) ++p2;
    const int n = 2 * m + 1;
    Qap3Params params{n, a.support(), {p2}, a.support(), 2};
    SlackProtocolResult r;
    r.family = Family::Qap3;
    r.extra_bits = index_bits(n);  // Alice names P2
    finish(r, params, qap3_bob_permutation(b, p2), a, b);
    return r;
}

SlackProtocolResult qap4_protocol(const BitVector& a, const BitVector& b)
{
    const int n = a.size();
    const int lg = index_bits(n);
    if (n < 7) return short_circuit(Family::Qap4, a, b, "n < 7: Alice sends a", n);
    if (a.ones() < 7) return short_circuit(Family::Qap4, a, b, "|a| < 7: Alice sends her support", a.ones() * lg);
    const int zeros_b = n - b.ones();
    if (zeros_b < 2) return short_circuit(Family::Qap4, a, b, "b has fewer than 2 zeros: Bob sends them", zeros_b * lg);
    Qap4Params params{n, a.support(), a.support()};
    SlackProtocolResult r;
    r.family = Family::Qap4;
    finish(r, params, cyclic_bob_permutation(b), a, b);
    return r;
}

}  // namespace

SlackProtocolResult slack_protocol(Family family, const BitVector& a, const BitVector& b)
{
    require_pair(a, b, 1);
    switch (family) {
    case Family::Qap1: return qap1_protocol(a, b);
    case Family::Qap2: return qap2_protocol(a, b);
    case Family::Qap3: return qap3_protocol(a, b);
    case Family::Qap4: return qap4_protocol(a, b);
    case Family::Qap5: break;
    }
    throw std::invalid_argument("no slack protocol for qap5");
}

}  // namespace qapf
