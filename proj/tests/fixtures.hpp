// Hand-written presentations and independent models of the same groups.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pgroup/modp.hpp"
#include "pgroup/pc_presentation.hpp"

namespace fixtures {

using pgroup::Exponents;
using pgroup::Generator;
using pgroup::PcPresentation;

/// <x, y, c | x^p = y^p = c^p = 1, [x, y] = c>
inline PcPresentation heisenberg(int p) {
    PcPresentation g(p, {{"x", 1, false}, {"y", 1, false}, {"c", 1, true}});
    g.set_commutator(0, 1, 1);
    g.set_derived({0, 0, 1});
    return g;
}

/// <a, b | a^{p^n} = b^{p^m} = 1, a^b = a^{1+p^{n-1}}>, n >= 2, m >= 1.
inline PcPresentation metacyclic(int p, int n, int m) {
    std::vector<Generator> gens{{"a", 1, false}, {"b", 1, false}, {"za", n - 1, true}};
    if (m >= 2) gens.push_back({"zb", m - 1, true});
    PcPresentation g(p, gens);
    const std::size_t sz = gens.size();
    Exponents wa(sz, 0), wb(sz, 0), c(sz, 0);
    wa[2] = 1;
    if (m >= 2) wb[3] = 1;
    g.set_power(0, wa);
    g.set_power(1, wb);
    c[2] = pgroup::ipow(p, static_cast<unsigned>(n - 2));
    g.set_derived(c);
    g.set_commutator(0, 1, 1);
    return g;
}

/// Two commuting Heisenberg pairs sharing c, plus a central generator z of order p^2 with z^p = c.
inline PcPresentation two_pairs(int p) {
    PcPresentation g(p, {{"x1", 1, false}, {"y1", 1, false}, {"x2", 1, false}, {"y2", 1, false},
                         {"z", 2, true}});
    g.set_commutator(0, 1, 1);
    g.set_commutator(2, 3, 1);
    g.set_power(0, {0, 0, 0, 0, 1});  // x1^p = z, so x1 has order p^3
    Exponents c(5, 0);
    c[4] = p;
    g.set_derived(c);
    return g;
}

/// Exponent vector from a small list.
inline pgroup::GroupElement elem(std::initializer_list<std::int64_t> e) { return pgroup::GroupElement(Exponents(e)); }

// -- independent models ---------------------------------------------------------

/// 3x3 upper unitriangular matrices over F_p, stored as (a12, a23, a13).
struct UniTri {
    std::int64_t p;
    using M = std::array<std::int64_t, 3>;
    M mul(const M& u, const M& v) const {
        return {pgroup::mod(u[0] + v[0], p), pgroup::mod(u[1] + v[1], p),
                pgroup::mod(u[2] + v[2] + u[0] * v[1], p)};
    }
    M one() const { return {0, 0, 0}; }
    M pow(M x, std::int64_t k) const {
        M acc = one();
        for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, x);
        return acc;
    }
    /// x^a y^b c^s
    M image(const pgroup::GroupElement& g) const {
        return mul(mul(pow({1, 0, 0}, g[0]), pow({0, 1, 0}, g[1])), pow({0, 0, 1}, g[2]));
    }
};

/// Z_{p^n} semidirect Z_{p^m}: pairs (i, j) meaning a^i b^j with b a b^{-1} = a^t,
/// t the inverse of 1 + p^{n-1} modulo p^n.
struct Semidirect {
    std::int64_t p, n, m, pn, pm, t;
    Semidirect(int p_, int n_, int m_)
        : p(p_), n(n_), m(m_), pn(pgroup::ipow(p_, n_)), pm(pgroup::ipow(p_, m_)), t(0) {
        const std::int64_t s = 1 + pgroup::ipow(p_, n_ - 1);
        for (std::int64_t x = 1; x < pn; ++x)
            if (s * x % pn == 1) t = x;
    }
    using M = std::array<std::int64_t, 2>;
    std::int64_t tpow(std::int64_t j) const {
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < j; ++i) r = r * t % pn;
        return r;
    }
    M mul(const M& u, const M& v) const {
        return {pgroup::mod(u[0] + v[0] * tpow(u[1]), pn), pgroup::mod(u[1] + v[1], pm)};
    }
    M one() const { return {0, 0}; }
    M pow(M x, std::int64_t k) const {
        M acc = one();
        for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, x);
        return acc;
    }
    /// a^{e0} b^{e1} (a^p)^{e2} (b^p)^{e3}
    M image(const pgroup::GroupElement& g) const {
        M r = mul(pow({1, 0}, g[0]), pow({0, 1}, g[1]));
        r = mul(r, pow({p, 0}, g[2]));
        if (g.size() > 3) r = mul(r, pow({0, p}, g[3]));
        return r;
    }
};

}  // namespace fixtures
