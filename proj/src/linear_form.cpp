#include "qapf/linear_form.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qapf {

std::string_view to_string(Sense sense)
{
    return sense == Sense::LessEqual ? "<=" : ">=";
}

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::Qap1: return "qap1";
    case Family::Qap2: return "qap2";
    case Family::Qap3: return "qap3";
    case Family::Qap4: return "qap4";
    case Family::Qap5: return "qap5";
    }
    return "unknown";
}

Family parse_family(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Family f : {Family::Qap1, Family::Qap2, Family::Qap3, Family::Qap4, Family::Qap5}) {
        if (lower == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown inequality family '" + std::string(text) + "'");
}

std::string_view to_string(Qap3QBranch branch)
{
    switch (branch) {
    case Qap3QBranch::NoP2: return "no-P2";
    case Qap3QBranch::SingleP2: return "single-P2";
    case Qap3QBranch::FirstOfTwo: return "multi-P2-first";
    case Qap3QBranch::SecondOfTwo: return "multi-P2-second";
    }
    return "unknown";
}

Family family_of(const FamilyParams& params)
{
    return static_cast<Family>(params.index());
}

int size_of(const FamilyParams& params)
{
    return std::visit([](const auto& p) { return p.n; }, params);
}

std::optional<Family> LinearForm::family() const
{
    if (!params_) return std::nullopt;
    return family_of(*params_);
}

std::int64_t LinearForm::coefficient(UPair cell) const
{
    cell = UPair::of(cell.a, cell.b);
    if (cell.diagonal()) {
        const auto it = std::lower_bound(diag_.begin(), diag_.end(), cell.a,
                                         [](const DiagTerm& t, int f) { return t.flat < f; });
        return it != diag_.end() && it->flat == cell.a ? it->coef : 0;
    }
    const auto it =
        std::lower_bound(offdiag_.begin(), offdiag_.end(), cell,
                         [](const OffDiagTerm& t, UPair c) { return t.cell < c; });
    return it != offdiag_.end() && it->cell == cell ? it->coef : 0;
}

bool operator==(const LinearForm& a, const LinearForm& b)
{
    auto same_diag = [](const LinearForm::DiagTerm& x, const LinearForm::DiagTerm& y) {
        return x.flat == y.flat && x.coef == y.coef;
    };
    auto same_off = [](const LinearForm::OffDiagTerm& x, const LinearForm::OffDiagTerm& y) {
        return x.cell == y.cell && x.coef == y.coef;
    };
    return a.n_ == b.n_ && a.sense_ == b.sense_ && a.rhs_ == b.rhs_ && a.scale_ == b.scale_ &&
           std::equal(a.diag_.begin(), a.diag_.end(), b.diag_.begin(), b.diag_.end(), same_diag) &&
           std::equal(a.offdiag_.begin(), a.offdiag_.end(), b.offdiag_.begin(), b.offdiag_.end(),
                      same_off);
}

LinearFormBuilder::LinearFormBuilder(int n) : n_(n)
{
    if (n < 1) throw std::invalid_argument("linear form needs n >= 1");
}

namespace {

void check_pair(int n, PairIndex p)
{
    if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
        throw std::invalid_argument("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                    ") outside [1, " + std::to_string(n) + "]^2");
    }
}

}  // namespace

LinearFormBuilder& LinearFormBuilder::add_diag(PairIndex p, std::int64_t coef)
{
    check_pair(n_, p);
    diag_[flat_index(n_, p)] += coef;
    return *this;
}

LinearFormBuilder& LinearFormBuilder::add_offdiag(PairIndex x, PairIndex y, std::int64_t coef)
{
    check_pair(n_, x);
    check_pair(n_, y);
    if (x == y) throw std::invalid_argument("off-diagonal term needs two distinct pairs");
    offdiag_[UPair::of(flat_index(n_, x), flat_index(n_, y))] += coef;
    return *this;
}

LinearForm LinearFormBuilder::build(Sense sense, std::int64_t rhs, int scale,
                                    std::optional<FamilyParams> params) const
{
    if (scale < 1) throw std::invalid_argument("scale must be a positive integer");
    LinearForm form;
    form.n_ = n_;
    form.sense_ = sense;
    form.rhs_ = rhs;
    form.scale_ = scale;
    form.params_ = std::move(params);
    for (const auto& [flat, coef] : diag_) {
        if (coef != 0) form.diag_.push_back({flat, coef});
    }
    for (const auto& [cell, coef] : offdiag_) {
        if (coef != 0) form.offdiag_.push_back({cell, coef});
    }
    return form;
}

std::int64_t lhs_at_vertex(const LinearForm& form, const Permutation& sigma)
{
    const int n = form.n();
    if (sigma.size() != n) throw std::invalid_argument("form and vertex sizes differ");
    auto matched = [&](int flat) { return sigma.maps(pair_from_flat(n, flat)); };
    std::int64_t lhs = 0;
    for (const auto& t : form.diag()) {
        if (matched(t.flat)) lhs += t.coef;
    }
    for (const auto& t : form.offdiag()) {
        if (matched(t.cell.a) && matched(t.cell.b)) lhs += t.coef;
    }
    return lhs;
}

Rational slack_at_vertex(const LinearForm& form, const Permutation& sigma)
{
    const std::int64_t lhs = lhs_at_vertex(form, sigma);
    const std::int64_t scaled =
        form.sense() == Sense::LessEqual ? form.rhs() - lhs : lhs - form.rhs();
    return Rational(scaled, form.scale());
}

Evaluation evaluate(const LinearForm& form, const YPoint& y)
{
    if (form.n() != y.n()) {
        throw std::invalid_argument("dimension mismatch: form n=" + std::to_string(form.n()) +
                                    ", point n=" + std::to_string(y.n()));
    }
    Evaluation e;
    for (const auto& t : form.diag()) e.lhs += t.coef * y.value(UPair{t.flat, t.flat});
    for (const auto& t : form.offdiag()) e.lhs += t.coef * y.value(t.cell);
    e.rhs = form.rhs();
    const Rational diff = form.sense() == Sense::LessEqual ? e.rhs - e.lhs : e.lhs - e.rhs;
    e.slack = diff / form.scale();
    e.satisfied = diff >= 0;
    return e;
}

DenseEvaluation evaluate_dense(const LinearForm& form, const DenseYPoint& y)
{
    if (form.n() != y.n) throw std::invalid_argument("dimension mismatch in dense evaluation");
    const int n = form.n();
    __int128 lhs = 0;
    for (const auto& t : form.diag()) {
        lhs += static_cast<__int128>(t.coef) * y.numerators[coordinate_of(n, UPair{t.flat, t.flat})];
    }
    for (const auto& t : form.offdiag()) {
        lhs += static_cast<__int128>(t.coef) * y.numerators[coordinate_of(n, t.cell)];
    }
    const __int128 rhs = static_cast<__int128>(form.rhs()) * y.denominator;
    DenseEvaluation e;
    e.lhs_numerator = static_cast<std::int64_t>(lhs);
    e.satisfied = form.sense() == Sense::LessEqual ? lhs <= rhs : lhs >= rhs;
    return e;
}

}  // namespace qapf
