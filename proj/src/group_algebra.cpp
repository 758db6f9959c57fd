#include "pgroup/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

// -- AlgebraElement -----------------------------------------------------------

AlgebraElement::AlgebraElement(const GroupAlgebra& parent, FpVector coeffs)
    : parent_(&parent), c_(std::move(coeffs)) {
    if (c_.size() != parent.dim()) throw std::invalid_argument("coefficient vector has wrong length");
    for (auto& x : c_) x %= parent.prime();
}

bool AlgebraElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::size_t> AlgebraElement::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) s.push_back(i);
    return s;
}

namespace {

void same_parent(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.parent() != &b.parent()) throw std::invalid_argument("algebra elements from different algebras");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    same_parent(a, b);
    const std::uint32_t p = a.parent().prime();
    FpVector c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % p;
    return AlgebraElement(a.parent(), std::move(c));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    same_parent(a, b);
    const std::uint32_t p = a.parent().prime();
    FpVector c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + p - b.c_[i]) % p;
    return AlgebraElement(a.parent(), std::move(c));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return a.parent().mul(a, b); }

AlgebraElement operator*(std::uint32_t s, const AlgebraElement& a) {
    const std::uint32_t p = a.parent().prime();
    s %= p;
    FpVector c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>((std::uint64_t{s} * a.c_[i]) % p);
    return AlgebraElement(a.parent(), std::move(c));
}

AlgebraElement AlgebraElement::operator-() const { return parent().zero() - *this; }

// -- GroupAlgebra -------------------------------------------------------------

GroupAlgebra::GroupAlgebra(const Group& g, std::size_t budget)
    : g_(&g), p_(static_cast<std::uint32_t>(g.prime())), n_(g.order()) {
    if (n_ > budget) throw BudgetExceeded("group algebra", n_, budget);
    table_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) table_[a * n_ + b] = static_cast<std::uint32_t>(g.mul(a, b));

    int max_e = 0;
    for (const auto& gen : g.presentation().generators()) max_e = std::max(max_e, gen.exponent);
    unit_cap_log_ = g.order_log() + max_e;

    classes_ = conjugacy_classes(g);
    class_of_.assign(n_, 0);
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (auto x : classes_[i]) class_of_[x] = i;

    const Subgroup d = derived_subgroup(g);
    derived_coset_.assign(n_, n_);
    for (std::size_t x = 0; x < n_; ++x) {
        if (derived_coset_[x] != n_) continue;
        for (auto h : d.elements()) derived_coset_[g.mul(x, h)] = x;
    }
}

void GroupAlgebra::check_parent(const AlgebraElement& a) const {
    if (&a.parent() != this) throw std::invalid_argument("algebra element belongs to a different algebra");
}

AlgebraElement GroupAlgebra::zero() const { return AlgebraElement(*this, FpVector(n_, 0)); }

AlgebraElement GroupAlgebra::basis(std::size_t g) const {
    FpVector c(n_, 0);
    c.at(g) = 1;
    return AlgebraElement(*this, std::move(c));
}

AlgebraElement GroupAlgebra::scalar(std::uint32_t s) const {
    FpVector c(n_, 0);
    c[0] = s % p_;
    return AlgebraElement(*this, std::move(c));
}

AlgebraElement GroupAlgebra::hat(const std::vector<std::size_t>& s) const {
    FpVector c(n_, 0);
    for (auto x : s) c.at(x) = (c.at(x) + 1) % p_;
    return AlgebraElement(*this, std::move(c));
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    check_parent(a);
    check_parent(b);
    std::vector<std::pair<std::size_t, std::uint32_t>> bs;
    for (std::size_t h = 0; h < n_; ++h)
        if (b[h] != 0) bs.emplace_back(h, b[h]);
    // (p-1)^2 * |G| stays far below 2^64, so reduce once at the end
    std::vector<std::uint64_t> acc(n_, 0);
    for (std::size_t g = 0; g < n_; ++g) {
        const std::uint64_t x = a[g];
        if (x == 0) continue;
        const std::uint32_t* row = &table_[g * n_];
        for (const auto& [h, y] : bs) acc[row[h]] += x * y;
    }
    FpVector c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p_);
    return AlgebraElement(*this, std::move(c));
}

AlgebraElement GroupAlgebra::pow(const AlgebraElement& a, std::uint64_t e) const {
    AlgebraElement acc = one();
    AlgebraElement base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

AlgebraElement GroupAlgebra::ppower(const AlgebraElement& a, int l) const {
    AlgebraElement x = a;
    for (int i = 0; i < l; ++i) x = pow(x, p_);
    return x;
}

std::uint32_t GroupAlgebra::epsilon(const AlgebraElement& a) const {
    check_parent(a);
    std::uint64_t s = 0;
    for (auto x : a.coeffs()) s += x;
    return static_cast<std::uint32_t>(s % p_);
}

AlgebraElement GroupAlgebra::conjugate(const AlgebraElement& a, std::size_t g) const {
    check_parent(a);
    FpVector c(n_, 0);
    for (std::size_t h = 0; h < n_; ++h)
        if (a[h] != 0) c[g_->conjugate(h, g)] = a[h];
    return AlgebraElement(*this, std::move(c));
}

bool GroupAlgebra::is_central(const AlgebraElement& a) const {
    check_parent(a);
    for (const auto& cls : classes_)
        for (auto x : cls)
            if (a[x] != a[cls.front()]) return false;
    return true;
}

int GroupAlgebra::unit_order_log(const AlgebraElement& a) const {
    if (epsilon(a) != 1) throw std::invalid_argument("unit_order: augmentation is not 1");
    const AlgebraElement e = one();
    AlgebraElement x = a;
    for (int l = 0; l <= unit_cap_log_; ++l) {
        if (x == e) return l;
        x = pow(x, p_);
    }
    throw VerificationFailure("unit order exceeds p^" + std::to_string(unit_cap_log_));
}

AlgebraElement GroupAlgebra::normalized_inverse(const AlgebraElement& a) const {
    const int l = unit_order_log(a);
    const AlgebraElement inv = pow(a, static_cast<std::uint64_t>(ipow(p_, static_cast<unsigned>(l))) - 1);
    if (!(mul(inv, a) == one())) throw VerificationFailure("normalized_inverse: a * a^{-1} != 1");
    return inv;
}

AlgebraElement GroupAlgebra::unit_commutator(const AlgebraElement& u, const AlgebraElement& v) const {
    return mul(mul(normalized_inverse(u), normalized_inverse(v)), mul(u, v));
}

// -- DeltaBasis ---------------------------------------------------------------

DeltaBasis::DeltaBasis(const GroupAlgebra& alg, const Subgroup& h) : alg_(&alg), h_(h) {
    if (&h.parent() != &alg.group()) throw std::invalid_argument("delta_basis: subgroup of a different group");
    const Group& g = alg.group();
    coset_of_.assign(g.order(), g.order());
    for (std::size_t q = 0; q < g.order(); ++q) {
        if (coset_of_[q] != g.order()) continue;
        for (auto x : h.elements()) coset_of_[g.mul(q, x)] = reps_.size();
        reps_.push_back(q);
    }
}

std::vector<AlgebraElement> DeltaBasis::vectors() const {
    std::vector<AlgebraElement> out;
    const Group& g = alg_->group();
    for (auto q : reps_)
        for (auto x : h_.elements()) {
            if (x == Group::identity()) continue;
            out.push_back(alg_->basis(g.mul(q, x)) - alg_->basis(q));
        }
    return out;
}

bool DeltaBasis::contains(const AlgebraElement& x) const {
    alg_->check_parent(x);
    std::vector<std::uint64_t> sums(reps_.size(), 0);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) sums[coset_of_[i]] += x[i];
    return std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) { return s % alg_->prime() == 0; });
}

std::optional<FpVector> DeltaBasis::coordinates(const AlgebraElement& x) const {
    if (!contains(x)) return std::nullopt;
    // x = sum_{q, h != 1} x_{qh} q(h - 1) + sum_q (coset sum) q, and the coset sums vanish
    const Group& g = alg_->group();
    FpVector c;
    c.reserve(dimension());
    for (auto q : reps_)
        for (auto h : h_.elements())
            if (h != Group::identity()) c.push_back(x[g.mul(q, h)]);
    return c;
}

// -- Lie structure ------------------------------------------------------------

bool lie_membership(const AlgebraElement& x) {
    const auto& alg = x.parent();
    for (const auto& cls : alg.classes()) {
        std::uint64_t s = 0;
        for (auto g : cls) s += x[g];
        if (s % alg.prime() != 0) return false;
    }
    return true;
}

bool lie_ideal_membership(const AlgebraElement& x) {
    const auto& alg = x.parent();
    std::vector<std::uint64_t> sums(alg.dim(), 0);
    for (std::size_t g = 0; g < alg.dim(); ++g) sums[alg.derived_coset(g)] += x[g];
    return std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) { return s % alg.prime() == 0; });
}

bool in_class_sum_span(const AlgebraElement& x) {
    for (const auto& cls : x.parent().classes()) {
        if (cls.size() == 1) {
            if (x[cls.front()] != 0) return false;
            continue;
        }
        for (auto g : cls)
            if (x[g] != x[cls.front()]) return false;
    }
    return true;
}

FrobeniusSplit frobenius_split(const AlgebraElement& x) {
    const auto& alg = x.parent();
    const Group& g = alg.group();
    FpVector s(alg.dim(), 0);
    for (std::size_t h = 0; h < alg.dim(); ++h) s[g.pth_power(h)] = (s[g.pth_power(h)] + x[h]) % alg.prime();
    FrobeniusSplit out{AlgebraElement(alg, std::move(s)), alg.zero()};
    out.delta = alg.pow(x, alg.prime()) - out.s;
    if (!lie_membership(out.delta)) throw VerificationFailure("frobenius_split: x^p - s is not in [F_pG, F_pG]");
    if (alg.epsilon(x) == 1) {
        if (!in_class_sum_span(out.delta))
            throw VerificationFailure("frobenius_split: x^p - s is not a combination of noncentral class sums");
        if (!alg.pow(out.delta, alg.prime()).is_zero()) throw VerificationFailure("frobenius_split: delta^p != 0");
    }
    return out;
}

AbpSides abp_sides(const GroupAlgebra& alg, std::size_t a, std::size_t b) {
    const Group& g = alg.group();
    const std::size_t c = g.commutator(a, b);
    if (c == Group::identity()) throw std::invalid_argument("abp_check: a and b commute, so <a, b>' is trivial");
    std::vector<std::size_t> hd{Group::identity()};
    for (std::size_t x = c; x != Group::identity(); x = g.mul(x, c)) hd.push_back(x);
    if (hd.size() != alg.prime()) throw std::invalid_argument("abp_check: <[a, b]> does not have order p");
    if (!g.is_central(c)) throw std::invalid_argument("abp_check: [a, b] is not central");

    const AlgebraElement ea = alg.basis(a), eb = alg.basis(b);
    const std::uint32_t p = alg.prime();
    AbpSides out{alg.pow(ea + eb, p), alg.basis(g.pow(a, p)) + alg.basis(g.pow(b, p))};
    AlgebraElement corr = alg.zero();
    for (std::uint32_t r = 1; r < p; ++r) {
        const auto coef = static_cast<std::uint32_t>(binomial(p, r) / p % p);
        corr = corr + coef * alg.basis(g.mul(g.pow(a, r), g.pow(b, p - r)));
    }
    out.rhs = out.rhs + alg.mul(corr, alg.hat(hd));
    return out;
}

bool abp_check(const GroupAlgebra& alg, std::size_t a, std::size_t b) {
    const auto s = abp_sides(alg, a, b);
    return s.lhs == s.rhs;
}

// -- class sums ---------------------------------------------------------------

std::vector<AlgebraElement> center_basis(const GroupAlgebra& alg) {
    std::vector<AlgebraElement> out;
    for (const auto& cls : alg.classes()) out.push_back(alg.hat(cls));
    return out;
}

ClassSumData class_sum_data(const GroupAlgebra& alg) {
    ClassSumData d;
    for (const auto& cls : alg.classes())
        if (cls.size() > 1) {
            d.noncentral_classes.push_back(cls);
            d.class_sums.push_back(alg.hat(cls));
        }
    // classes partition G, so the supports are disjoint and the sums independent
    const auto& sums = d.class_sums;
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i; j < sums.size(); ++j)
            if (!alg.mul(sums[i], sums[j]).is_zero())
                throw VerificationFailure("class sums " + std::to_string(i) + ", " + std::to_string(j) +
                                          " have nonzero product");
    for (const auto& z : center_basis(alg))
        for (const auto& s : sums)
            if (!in_class_sum_span(alg.mul(z, s)))
                throw VerificationFailure("span of noncentral class sums is not an ideal of the center");
    return d;
}

CentralUnitSplit central_unit_decompose(const GroupAlgebra& alg, const ClassSumData& cs, const AlgebraElement& a) {
    alg.check_parent(a);
    if (alg.epsilon(a) != 1) throw std::invalid_argument("central_unit_decompose: augmentation is not 1");
    if (!alg.is_central(a)) throw std::invalid_argument("central_unit_decompose: element is not central");
    FpVector b(alg.dim(), 0);
    for (std::size_t x = 0; x < alg.dim(); ++x)
        if (alg.classes()[alg.class_of(x)].size() == 1) b[x] = a[x];
    CentralUnitSplit out{AlgebraElement(alg, std::move(b)), {}};
    // a = b (1 + b^{-1}(a - b)) and b^{-1}(a - b) lies in the class-sum ideal
    const AlgebraElement rest = alg.mul(alg.normalized_inverse(out.b), a - out.b);
    if (!in_class_sum_span(rest)) throw VerificationFailure("central_unit_decompose: remainder outside the class-sum span");
    for (const auto& cls : cs.noncentral_classes) out.exps.push_back(rest[cls.front()]);
    if (!(central_unit_compose(alg, cs, out) == a))
        throw VerificationFailure("central_unit_decompose: reconstruction differs");
    return out;
}

AlgebraElement central_unit_compose(const GroupAlgebra& alg, const ClassSumData& cs, const CentralUnitSplit& s) {
    AlgebraElement x = s.b;
    for (std::size_t i = 0; i < s.exps.size(); ++i)
        if (s.exps[i] != 0) x = alg.mul(x, alg.pow(alg.one() + cs.class_sums[i], s.exps[i]));
    return x;
}

bool gamma2_check(const GroupAlgebra& alg, const AlgebraElement& u, const AlgebraElement& v) {
    return lie_ideal_membership(alg.unit_commutator(u, v) - alg.one());
}

}  // namespace pgroup
