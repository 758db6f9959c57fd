#include "pgroup/isomorphism.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "order=" << order << " exponent=" << exponent << " abelianization=" << join(abelianization)
       << " center=" << join(center) << " |G^p|=" << power_order << " |Omega_1|=" << omega1_order << " orders={";
    bool first = true;
    for (auto [o, c] : order_histogram) {
        os << (first ? "" : ",") << o << ":" << c;
        first = false;
    }
    os << "} classes=" << class_count;
    return os.str();
}

Fingerprint fingerprint(const Group& g) {
    Fingerprint f;
    f.order = g.order();
    f.exponent = exponent(g);
    f.abelianization = quotient_invariants(Subgroup::whole(g), derived_subgroup(g));
    f.center = abelian_invariants(center(g));
    f.power_order = power_subgroup(g, 1).order();
    f.omega1_order = omega(g, 1).order();
    f.order_histogram = order_histogram(g);
    f.class_count = conjugacy_classes(g).size();
    return f;
}

bool is_isomorphic_bruteforce(const Group& g, const Group& h, std::size_t bound) {
    if (g.order() > bound) throw BudgetExceeded("isomorphism oracle", g.order(), bound);
    if (h.order() > bound) throw BudgetExceeded("isomorphism oracle", h.order(), bound);
    if (g.order() != h.order() || g.prime() != h.prime()) return false;

    const PcPresentation& pg = g.presentation();
    const std::size_t n = pg.size();
    const int p = g.prime();

    std::vector<bool> h_central(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) h_central[x] = h.is_central(x);

    std::vector<std::vector<std::size_t>> cands(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t gi = g.generator(i);
        const bool central = g.is_central(gi);
        for (std::size_t x = 0; x < h.order(); ++x)
            if (h.order_log(x) == g.order_log(gi) && h_central[x] == central) cands[i].push_back(x);
    }

    std::vector<std::size_t> phi(n, 0);
    // Image of an exponent vector whose support lies strictly after position i.
    auto eval = [&](const Exponents& v, std::size_t i) {
        std::size_t acc = Group::identity();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            if (k <= i) throw std::logic_error("isomorphism oracle: relation refers to an unassigned generator");
            acc = h.mul(acc, h.pow(phi[k], v[k]));
        }
        return acc;
    };

    // tails[i] = phi(<g_i, ..., g_{n-1}>) as a list; membership in `member[i]`.
    std::vector<std::vector<std::size_t>> tails(n + 1);
    std::vector<std::vector<bool>> member(n + 1, std::vector<bool>(h.order(), false));
    tails[n] = {Group::identity()};
    member[n][Group::identity()] = true;

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == 0) return true;
        const std::size_t at = i - 1;
        const std::int64_t rel = pg.relative_order(at);
        const bool noncentral = !pg.generator(at).central;
        for (std::size_t x : cands[at]) {
            if (h.pow(x, rel) != eval(pg.power_relation(at), at)) continue;
            if (member[i][h.pow(x, rel / p)]) continue;
            if (noncentral) {
                const std::size_t c = eval(pg.derived_vector(), at);
                bool ok = true;
                for (std::size_t j = at + 1; j < n && ok; ++j)
                    ok = h.commutator(x, phi[j]) == h.pow(c, pg.commutator_entry(at, j));
                if (!ok) continue;
            } else {
                bool ok = true;
                for (std::size_t j = at + 1; j < n && ok; ++j) ok = h.mul(x, phi[j]) == h.mul(phi[j], x);
                if (!ok) continue;
            }
            phi[at] = x;
            auto& tail = tails[at];
            auto& mem = member[at];
            for (auto y : tail) mem[y] = false;
            tail.clear();
            std::size_t xa = Group::identity();
            for (std::int64_t a = 0; a < rel; ++a) {
                for (auto s : tails[i]) {
                    const std::size_t y = h.mul(xa, s);
                    tail.push_back(y);
                    mem[y] = true;
                }
                xa = h.mul(xa, x);
            }
            if (assign(at)) return true;
        }
        return false;
    };
    return assign(n);
}

}  // namespace pgroup
