#include "pgroup/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

Subgroup center(const Group& g) {
    std::vector<std::size_t> elems;
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.is_central(a)) elems.push_back(a);
    return Subgroup::from_elements(g, std::move(elems));
}

Subgroup derived_subgroup(const Group& g) {
    const std::size_t n = g.presentation().size();
    std::vector<std::size_t> comms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t c = g.commutator(g.generator(i), g.generator(j));
            if (c != Group::identity()) comms.push_back(c);
        }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return Subgroup::generated(g, comms);
}

std::vector<std::size_t> power_set(const Group& g, int l) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.order(); ++a) out.push_back(g.ppower(a, l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> omega_set(const Group& g, int l) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.order_log(a) <= l) out.push_back(a);
    return out;
}

Subgroup power_subgroup(const Group& g, int l) { return Subgroup::generated(g, power_set(g, l)); }

Subgroup omega(const Group& g, int l) { return Subgroup::generated(g, omega_set(g, l)); }

Subgroup frattini(const Subgroup& s) {
    const Group& g = s.parent();
    std::vector<std::size_t> gens;
    for (auto x : s.elements()) gens.push_back(g.pth_power(x));
    const auto& sg = s.generators();
    for (std::size_t i = 0; i < sg.size(); ++i)
        for (std::size_t j = i + 1; j < sg.size(); ++j) gens.push_back(g.commutator(sg[i], sg[j]));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Subgroup::generated(g, gens);
}

std::uint64_t exponent(const Group& g) {
    int l = 0;
    for (std::size_t a = 0; a < g.order(); ++a) l = std::max(l, g.order_log(a));
    return static_cast<std::uint64_t>(ipow(g.prime(), static_cast<unsigned>(l)));
}

std::map<std::uint64_t, std::size_t> order_histogram(const Group& g) {
    std::map<std::uint64_t, std::size_t> h;
    for (std::size_t a = 0; a < g.order(); ++a)
        ++h[static_cast<std::uint64_t>(ipow(g.prime(), static_cast<unsigned>(g.order_log(a))))];
    return h;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g) {
    const std::size_t ngen = g.presentation().size();
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (seen[a]) continue;
        std::vector<std::size_t> orbit{a};
        seen[a] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (std::size_t i = 0; i < ngen; ++i) {
                const std::size_t y = g.conjugate(orbit[k], g.generator(i));
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

std::int64_t derived_log(const Group& g, std::size_t x) {
    std::size_t acc = Group::identity();
    for (int t = 0; t < g.prime(); ++t) {
        if (acc == x) return t;
        acc = g.mul(acc, g.derived());
    }
    return -1;
}

std::vector<int> quotient_invariants(const Subgroup& s, const Subgroup& k) {
    const Group& g = s.parent();
    const auto& sg = s.generators();
    for (std::size_t i = 0; i < sg.size(); ++i)
        for (std::size_t j = i + 1; j < sg.size(); ++j)
            if (!k.contains(g.commutator(sg[i], sg[j])))
                throw std::invalid_argument("abelian invariants requested for a nonabelian quotient");
    const int p = g.prime();
    const int total = exact_log(static_cast<std::int64_t>(s.order() / k.order()), p);

    // counts[l] = log_p |Omega_l(S/K)| = sum_i min(n_i, l)
    std::vector<int> counts{0};
    while (counts.back() < total) {
        const int l = static_cast<int>(counts.size());
        std::size_t c = 0;
        for (auto x : s.elements())
            if (k.contains(g.ppower(x, l))) ++c;
        counts.push_back(exact_log(static_cast<std::int64_t>(c / k.order()), p));
    }
    // parts >= l is counts[l] - counts[l-1]; conjugate partition gives the invariants.
    std::vector<int> invariants;
    for (std::size_t l = 1; l < counts.size(); ++l) {
        const int parts = counts[l] - counts[l - 1];
        for (int i = 0; i < parts; ++i) {
            if (static_cast<std::size_t>(i) < invariants.size())
                ++invariants[static_cast<std::size_t>(i)];
            else
                invariants.push_back(1);
        }
    }
    return invariants;
}

std::vector<int> abelian_invariants(const Subgroup& s) {
    return quotient_invariants(s, Subgroup::trivial(s.parent()));
}

// -- symplectic structure -----------------------------------------------------

std::uint32_t SymplecticForm::pair(const FpVector& u, const FpVector& v) const {
    std::uint64_t acc = 0;
    const auto p = static_cast<std::uint64_t>(prime);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc = (acc + std::uint64_t{u[i]} * matrix[i][j] % p * v[j]) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

SymplecticForm symplectic_form(const Group& g) {
    const Subgroup d = derived_subgroup(g);
    if (d.order() == 1) throw OutOfClass("symplectic form: group is abelian, pairing is degenerate");
    if (d.order() != static_cast<std::size_t>(g.prime()) || !d.contains(g.derived()) || g.derived() == 0)
        throw OutOfClass("symplectic form: derived subgroup is not generated by c of order p");

    const auto p = static_cast<std::uint32_t>(g.prime());
    const std::size_t n = g.presentation().size();
    auto functional = [&](std::size_t x) {
        FpVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<std::uint32_t>(derived_log(g, g.commutator(x, g.generator(j))));
        return v;
    };

    SymplecticForm f;
    f.prime = g.prime();
    Echelon ech(p, n);
    for (std::size_t i = 0; i < n; ++i)
        if (ech.insert(functional(g.generator(i)))) f.basis.push_back(g.generator(i));

    const std::size_t dim = f.basis.size();
    f.matrix.assign(dim, FpVector(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const std::int64_t t = derived_log(g, g.commutator(f.basis[i], f.basis[j]));
            if (t < 0) throw OutOfClass("symplectic form: commutator outside <c>");
            f.matrix[i][j] = static_cast<std::uint32_t>(t);
        }
    if (dim % 2 != 0 || determinant_mod_p(f.matrix, p) == 0)
        throw OutOfClass("symplectic form: commutator pairing is degenerate");
    return f;
}

DarbouxBasis symplectic_basis(const SymplecticForm& f) {
    const std::size_t dim = f.dimension();
    const auto p = static_cast<std::uint32_t>(f.prime);
    std::vector<FpVector> work;
    for (std::size_t i = 0; i < dim; ++i) {
        FpVector e(dim, 0);
        e[i] = 1;
        work.push_back(std::move(e));
    }

    auto axpy = [p](FpVector& u, const FpVector& v, std::uint32_t lambda) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = (u[i] + lambda * v[i]) % p;
    };

    DarbouxBasis out;
    while (!work.empty()) {
        std::size_t vi = work.size(), wi = work.size();
        for (std::size_t a = 0; a < work.size() && vi == work.size(); ++a)
            for (std::size_t b = 0; b < work.size(); ++b)
                if (f.pair(work[a], work[b]) != 0) {
                    vi = a;
                    wi = b;
                    break;
                }
        if (vi == work.size()) throw OutOfClass("symplectic basis: form is degenerate");

        const FpVector v = work[vi];
        FpVector w = work[wi];
        const auto scale = static_cast<std::uint32_t>(inv_mod(f.pair(v, w), p));
        for (auto& x : w) x = x * scale % p;

        std::vector<FpVector> rest;
        for (std::size_t a = 0; a < work.size(); ++a) {
            if (a == vi || a == wi) continue;
            FpVector u = work[a];
            const std::uint32_t fuw = f.pair(u, w), fuv = f.pair(u, v);
            axpy(u, v, (p - fuw) % p);
            axpy(u, w, fuv);
            rest.push_back(std::move(u));
        }
        out.pairs.emplace_back(v, std::move(w));
        work = std::move(rest);
    }
    return out;
}

std::size_t lift(const Group& g, const SymplecticForm& f, const FpVector& v) {
    std::size_t acc = Group::identity();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc = g.mul(acc, g.pow(f.basis[i], v[i]));
    return acc;
}

// -- center classification --------------------------------------------------------

std::string to_string(CenterTag t) { return "A" + std::to_string(static_cast<int>(t)); }

namespace {

// Extends <z1, z2> by order-p elements of zg to all of zg; empty on failure.
std::vector<std::size_t> complete_decomposition(const Group& g, const Subgroup& zg, std::size_t z1, std::size_t z2) {
    std::vector<std::size_t> gens{z1, z2};
    Subgroup h = Subgroup::generated(g, gens);
    for (auto e : zg.elements()) {
        if (h.order() == zg.order()) break;
        if (g.order_log(e) != 1 || h.contains(e)) continue;
        gens.push_back(e);
        h = Subgroup::generated(g, gens);
    }
    if (h.order() != zg.order()) return {};
    return gens;
}

}  // namespace

CenterClassification classify_center(const Group& g, const Subgroup& nsub) {
    const Subgroup zg = center(g);
    if (!nsub.is_subset_of(zg)) throw std::invalid_argument("classify_center: N is not central");
    const std::vector<int> ninv = abelian_invariants(nsub);
    if (ninv.size() != 2) throw std::invalid_argument("classify_center: N is not a product of two cyclic groups");

    CenterClassification out;
    out.n = ninv[0];
    out.m = ninv[1];
    out.invariants = abelian_invariants(zg);
    const std::size_t r = out.invariants.size();
    if (r < 2) throw OutOfClass("classify_center: center has rank < 2");

    struct Shape {
        CenterTag tag;
        int d1, d2;
        const char* location;
    };
    static constexpr Shape kShapes[] = {
        {CenterTag::A1, 0, 0, "<z1> x <z2>"},
        {CenterTag::A2, 1, 0, "<z1^p> x <z2>"},
        {CenterTag::A3, 0, 1, "<z1> x <z2^p>"},
        {CenterTag::A4, 1, 1, "<z1^p> x <z2^p>"},
    };

    for (const Shape& s : kShapes) {
        // With n = m the A3 profile coincides with A2 after swapping z1 and z2.
        if (s.tag == CenterTag::A3 && out.n == out.m) continue;
        const int a = out.n + s.d1, b = out.m + s.d2;
        std::vector<int> profile{a, b};
        profile.resize(r, 1);
        std::sort(profile.rbegin(), profile.rend());
        if (profile != out.invariants) continue;

        std::vector<std::size_t> c1, c2;
        for (auto e : zg.elements()) {
            if (g.order_log(e) == a && nsub.contains(g.ppower(e, s.d1))) c1.push_back(e);
            if (g.order_log(e) == b && nsub.contains(g.ppower(e, s.d2))) c2.push_back(e);
        }
        const auto target = static_cast<std::size_t>(ipow(g.prime(), static_cast<unsigned>(a + b)));
        for (auto z1 : c1)
            for (auto z2 : c2) {
                if (Subgroup::generated(g, {g.ppower(z1, s.d1), g.ppower(z2, s.d2)}).order() != nsub.order())
                    continue;
                if (Subgroup::generated(g, {z1, z2}).order() != target) continue;
                auto gens = complete_decomposition(g, zg, z1, z2);
                if (gens.empty()) continue;
                out.tag = s.tag;
                out.z = std::move(gens);
                out.z_orders.assign(out.z.size(), 1);
                out.z_orders[0] = a;
                out.z_orders[1] = b;
                out.n_location = s.location;
                return out;
            }
    }
    std::string inv;
    for (auto x : out.invariants) inv += (inv.empty() ? "" : ",") + std::to_string(x);
    throw OutOfClass("classify_center: center invariants [" + inv + "] match no admissible profile for N = Z_p^" +
                     std::to_string(out.n) + " x Z_p^" + std::to_string(out.m));
}

}  // namespace pgroup
