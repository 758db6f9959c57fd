#include "pgroup/pc_presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

PcPresentation::PcPresentation(int prime, std::vector<Generator> gens)
    : prime_(prime), gens_(std::move(gens)) {
    const std::size_t n = gens_.size();
    rel_order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (gens_[i].exponent < 1)
            throw ConstraintError("generator " + gens_[i].name + " has relative order exponent < 1");
        rel_order_[i] = ipow(prime_, static_cast<unsigned>(gens_[i].exponent));
    }
    power_.assign(n, Exponents(n, 0));
    comm_.assign(n, std::vector<std::int64_t>(n, 0));
    derived_.assign(n, 0);
}

void PcPresentation::set_power(std::size_t i, Exponents w) {
    if (w.size() != size()) throw std::invalid_argument("set_power: wrong vector length");
    power_.at(i) = std::move(w);
}

void PcPresentation::set_commutator(std::size_t i, std::size_t j, std::int64_t value) {
    comm_.at(i).at(j) = mod(value, prime_);
    comm_.at(j).at(i) = mod(-value, prime_);
}

void PcPresentation::set_commutator_entry(std::size_t i, std::size_t j, std::int64_t value) {
    comm_.at(i).at(j) = value;
}

void PcPresentation::set_derived(Exponents c) {
    if (c.size() != size()) throw std::invalid_argument("set_derived: wrong vector length");
    derived_ = std::move(c);
}

std::optional<std::size_t> PcPresentation::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

std::size_t PcPresentation::noncentral_count() const {
    std::size_t n = 0;
    for (const auto& g : gens_)
        if (!g.central) ++n;
    return n;
}

std::uint64_t PcPresentation::order() const {
    std::uint64_t o = 1;
    for (auto r : rel_order_) o *= static_cast<std::uint64_t>(r);
    return o;
}

int PcPresentation::order_log() const {
    int l = 0;
    for (const auto& g : gens_) l += g.exponent;
    return l;
}

bool PcPresentation::is_abelian() const {
    for (const auto& row : comm_)
        for (auto v : row)
            if (mod(v, prime_) != 0) return false;
    return true;
}

GroupElement PcPresentation::generator_element(std::size_t i) const {
    Exponents e(size(), 0);
    e.at(i) = 1;
    return reduce(std::move(e));
}

GroupElement PcPresentation::derived_element() const { return reduce(derived_); }

void PcPresentation::check_element(const GroupElement& a) const {
    if (a.size() != size()) throw std::invalid_argument("element does not belong to this presentation");
}

GroupElement PcPresentation::reduce(Exponents v) const {
    if (v.size() != size()) throw std::invalid_argument("reduce: wrong vector length");
    // Overflow of g_i only feeds later central generators, so one forward pass suffices.
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t q = floor_div(v[i], rel_order_[i]);
        if (q == 0) continue;
        v[i] -= q * rel_order_[i];
        const Exponents& w = power_[i];
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (w[j] != 0) v[j] += q * w[j];
    }
    return GroupElement(std::move(v));
}

GroupElement PcPresentation::normalize(const Word& word) const {
    GroupElement acc = identity();
    for (const auto& [gen, exp] : word) {
        if (gen >= size()) throw std::out_of_range("normalize: generator index out of range");
        acc = multiply(acc, power(generator_element(gen), exp));
    }
    return acc;
}

GroupElement PcPresentation::multiply(const GroupElement& a, const GroupElement& b) const {
    check_element(a);
    check_element(b);
    const std::size_t n = size();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = a[i] + b[i];
    // Moving b's g_j past a's g_i (i > j) contributes [g_i, g_j]^{a_i b_j}.
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0 || gens_[i].central) continue;
        for (std::size_t j = 0; j < i; ++j)
            if (b[j] != 0 && comm_[i][j] != 0) s += (a[i] % prime_) * (b[j] % prime_) * comm_[i][j];
    }
    s = mod(s, prime_);
    if (s != 0)
        for (std::size_t i = 0; i < n; ++i) e[i] += s * derived_[i];
    return reduce(std::move(e));
}

GroupElement PcPresentation::inverse(const GroupElement& a) const {
    check_element(a);
    const std::size_t n = size();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = -a[i];
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0 || gens_[i].central) continue;
        for (std::size_t j = 0; j < i; ++j)
            if (a[j] != 0 && comm_[i][j] != 0) s += (a[i] % prime_) * (a[j] % prime_) * comm_[i][j];
    }
    s = mod(s, prime_);
    if (s != 0)
        for (std::size_t i = 0; i < n; ++i) e[i] += s * derived_[i];
    return reduce(std::move(e));
}

GroupElement PcPresentation::power(const GroupElement& a, std::int64_t n) const {
    GroupElement base = n < 0 ? inverse(a) : a;
    std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    GroupElement acc = identity();
    while (k > 0) {
        if (k & 1) acc = multiply(acc, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

GroupElement PcPresentation::commutator(const GroupElement& a, const GroupElement& b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool PcPresentation::commutes(const GroupElement& a, const GroupElement& b) const {
    return multiply(a, b) == multiply(b, a);
}

int PcPresentation::order_log(const GroupElement& a) const {
    int l = 0;
    GroupElement x = a;
    while (!x.is_identity()) {
        x = power(x, prime_);
        ++l;
        if (l > order_log()) throw std::logic_error("order_log: element order exceeds group order");
    }
    return l;
}

ConsistencyReport PcPresentation::consistency_check() const {
    auto fail = [](std::string w) { return ConsistencyReport{false, std::move(w)}; };
    const std::size_t n = size();

    if (prime_ < 3 || !is_prime(prime_)) return fail("prime " + std::to_string(prime_) + " is not an odd prime");
    for (std::size_t i = 0; i < n; ++i) {
        if (gens_[i].exponent < 1) return fail("generator " + gens_[i].name + " has exponent < 1");
        const Exponents& w = power_[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j] == 0) continue;
            if (j <= i || !gens_[j].central)
                return fail("power relation of " + gens_[i].name + " involves " + gens_[j].name +
                            ", which is not a later central generator");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = comm_[i][j];
            if (v < 0 || v >= prime_)
                return fail("commutator entry (" + gens_[i].name + "," + gens_[j].name + ") out of range");
            if (i == j && v != 0) return fail("commutator table has nonzero diagonal at " + gens_[i].name);
            if (mod(v + comm_[j][i], prime_) != 0)
                return fail("commutator table not antisymmetric at (" + gens_[i].name + "," + gens_[j].name + ")");
            if (v != 0 && (gens_[i].central || gens_[j].central))
                return fail("central generator in nontrivial commutator [" + gens_[i].name + "," + gens_[j].name + "]");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (derived_[i] != 0 && !gens_[i].central)
            return fail("derived element involves noncentral generator " + gens_[i].name);

    const GroupElement c = derived_element();
    if (!is_abelian()) {
        const int lc = order_log(c);
        if (lc != 1)
            return fail("derived element c has order " + std::to_string(ipow(prime_, static_cast<unsigned>(lc))) +
                        ", expected " + std::to_string(prime_));
    }

    std::vector<GroupElement> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = generator_element(i);

    for (std::size_t i = 0; i < n; ++i) {
        // g_i^{p^{e_i}} by plain repeated multiplication, not through the power relation shortcut.
        GroupElement acc = identity();
        for (std::int64_t t = 0; t < rel_order_[i]; ++t) acc = multiply(acc, g[i]);
        if (acc != reduce(power_[i]))
            return fail("power relation " + gens_[i].name + "^" + std::to_string(rel_order_[i]) + " = " +
                        format(reduce(power_[i])) + " violated: got " + format(acc));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GroupElement lhs = commutator(g[i], g[j]);
            const GroupElement rhs = power(c, comm_[i][j]);
            if (lhs != rhs)
                return fail("commutator [" + gens_[i].name + "," + gens_[j].name + "] = " + format(lhs) +
                            ", table says " + format(rhs));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const GroupElement l = multiply(multiply(g[i], g[j]), g[k]);
                const GroupElement r = multiply(g[i], multiply(g[j], g[k]));
                if (l != r)
                    return fail("associativity fails on (" + gens_[i].name + "," + gens_[j].name + "," +
                                gens_[k].name + ")");
            }
    for (std::size_t i = 0; i < n; ++i) {
        if (!gens_[i].central) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!commutes(g[i], g[j]))
                return fail("generator " + gens_[i].name + " flagged central but does not commute with " +
                            gens_[j].name);
    }
    return {};
}

std::string PcPresentation::format(const GroupElement& a) const {
    check_element(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << gens_[i].name;
        if (a[i] != 1) os << '^' << a[i];
    }
    if (first) os << '1';
    return os.str();
}

}  // namespace pgroup
