#include "pgroup/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

namespace {
constexpr std::size_t kTableLimit = 729;
}

Group::Group(PcPresentation pres, std::size_t budget) : pres_(std::move(pres)) {
    const std::uint64_t ord = pres_.order();
    if (ord > budget) throw BudgetExceeded("group enumeration", static_cast<std::size_t>(ord), budget);
    order_ = static_cast<std::size_t>(ord);

    const std::size_t n = pres_.size();
    weight_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;)
        weight_[i - 1] = weight_[i] * static_cast<std::size_t>(pres_.relative_order(i));

    elems_.reserve(order_);
    Exponents e(n, 0);
    for (std::size_t idx = 0; idx < order_; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = static_cast<std::int64_t>(rest / weight_[i]);
            rest %= weight_[i];
        }
        elems_.emplace_back(e);
    }

    gen_idx_.resize(n);
    for (std::size_t i = 0; i < n; ++i) gen_idx_[i] = index(pres_.generator_element(i));
    derived_idx_ = index(pres_.derived_element());

    if (order_ <= kTableLimit) {
        table_.resize(order_ * order_);
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                table_[a * order_ + b] = static_cast<std::uint32_t>(index(pres_.multiply(elems_[a], elems_[b])));
    }

    inv_.resize(order_);
    ppow_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) {
        inv_[a] = index(pres_.inverse(elems_[a]));
        ppow_[a] = index(pres_.power(elems_[a], pres_.prime()));
    }
    olog_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
        int l = 0;
        for (std::size_t x = a; x != 0; x = ppow_[x]) ++l;
        olog_[a] = l;
    }
}

std::size_t Group::index(const GroupElement& g) const {
    if (g.size() != pres_.size()) throw std::invalid_argument("element does not belong to this group");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= pres_.relative_order(i)) throw std::invalid_argument("element not in normal form");
        idx += static_cast<std::size_t>(g[i]) * weight_[i];
    }
    return idx;
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * order_ + b];
    return index(pres_.multiply(elems_[a], elems_[b]));
}

std::size_t Group::pow(std::size_t a, std::int64_t n) const {
    std::size_t base = n < 0 ? inv_[a] : a;
    std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    std::size_t acc = identity();
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

std::size_t Group::ppower(std::size_t a, int l) const {
    for (int i = 0; i < l; ++i) a = ppow_[a];
    return a;
}

std::size_t Group::commutator(std::size_t a, std::size_t b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
}

std::size_t Group::conjugate(std::size_t a, std::size_t by) const { return mul(mul(inv_[by], a), by); }

bool Group::is_central(std::size_t a) const {
    for (std::size_t g : gen_idx_)
        if (mul(a, g) != mul(g, a)) return false;
    return true;
}

// -- Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(const Group& g, std::vector<std::size_t> gens, std::vector<std::size_t> elems)
    : parent_(&g), gens_(std::move(gens)), elems_(std::move(elems)), member_(g.order(), false) {
    std::sort(elems_.begin(), elems_.end());
    for (auto e : elems_) member_[e] = true;
}

Subgroup Subgroup::generated(const Group& g, const std::vector<std::size_t>& gens) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> elems{Group::identity()};
    seen[Group::identity()] = true;
    std::deque<std::size_t> queue{Group::identity()};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (auto s : gens) {
            const std::size_t y = g.mul(x, s);
            if (!seen[y]) {
                seen[y] = true;
                elems.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return Subgroup(g, gens, std::move(elems));
}

Subgroup Subgroup::from_elements(const Group& g, std::vector<std::size_t> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subgroup_set(g, elems)) throw std::invalid_argument("element set is not a subgroup");
    // Greedy generating set in index order.
    std::vector<std::size_t> gens;
    std::vector<bool> covered(g.order(), false);
    covered[Group::identity()] = true;
    std::size_t covered_count = 1;
    for (auto e : elems) {
        if (covered[e]) continue;
        gens.push_back(e);
        const Subgroup s = generated(g, gens);
        for (auto x : s.elements()) covered[x] = true;
        covered_count = s.order();
        if (covered_count == elems.size()) break;
    }
    return Subgroup(g, std::move(gens), std::move(elems));
}

Subgroup Subgroup::whole(const Group& g) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < g.presentation().size(); ++i) gens.push_back(g.generator(i));
    return Subgroup(g, std::move(gens), std::move(all));
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g, {}, {Group::identity()}); }

int Subgroup::order_log() const { return exact_log(static_cast<std::int64_t>(order()), parent_->prime()); }

bool Subgroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (parent_->mul(gens_[i], gens_[j]) != parent_->mul(gens_[j], gens_[i])) return false;
    return true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    for (auto e : elems_)
        if (!other.contains(e)) return false;
    return true;
}

bool is_subgroup_set(const Group& g, const std::vector<std::size_t>& elems) {
    std::vector<bool> member(g.order(), false);
    for (auto e : elems) member.at(e) = true;
    if (!member[Group::identity()]) return false;
    // Finite sets closed under multiplication are subgroups.
    for (auto a : elems)
        for (auto b : elems)
            if (!member[g.mul(a, b)]) return false;
    return true;
}

}  // namespace pgroup
