#include "pgroup/catalog.hpp"

#include <algorithm>
#include <memory>

#include "pgroup/central_product.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/isomorphism.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

PcPresentation build_mp(int p, int n, int m) {
    if (n < 2 || m < 1) throw ConstraintError("M_p(n,m) requires n >= 2 and m >= 1");
    std::vector<Generator> gens{{"a", 1, false}, {"b", 1, false}, {"za", n - 1, true}};
    if (m >= 2) gens.push_back({"zb", m - 1, true});
    PcPresentation g(p, gens);
    const std::size_t sz = gens.size();
    Exponents wa(sz, 0), wb(sz, 0), c(sz, 0);
    wa[2] = 1;
    if (m >= 2) wb[3] = 1;
    g.set_power(0, wa);
    g.set_power(1, wb);
    // [a, b] = a^{p^{n-1}}
    c[2] = ipow(p, static_cast<unsigned>(n - 2));
    g.set_derived(c);
    g.set_commutator(0, 1, 1);
    return g;
}

PcPresentation build_mp111_family(int p, int n, int m) {
    if (m < 1 || n < m) throw ConstraintError("M_p(n,m,1) requires n >= m >= 1");
    std::vector<Generator> gens{{"a", 1, false}, {"b", 1, false}};
    if (n >= 2) gens.push_back({"za", n - 1, true});
    if (m >= 2) gens.push_back({"zb", m - 1, true});
    gens.push_back({"c", 1, true});
    PcPresentation g(p, gens);
    const std::size_t sz = gens.size();
    if (n >= 2) {
        Exponents w(sz, 0);
        w[2] = 1;
        g.set_power(0, w);
    }
    if (m >= 2) {
        Exponents w(sz, 0);
        w[n >= 2 ? 3 : 2] = 1;
        g.set_power(1, w);
    }
    Exponents c(sz, 0);
    c[sz - 1] = 1;
    g.set_derived(c);
    g.set_commutator(0, 1, 1);
    return g;
}

PcPresentation build_cyclic(int p, int e, const std::string& name) {
    if (e < 1) throw ConstraintError("cyclic factor requires exponent >= 1");
    return PcPresentation(p, {{name, e, true}});
}

std::string CatalogEntry::id() const {
    const auto& q = params;
    return type_name() + "(p=" + std::to_string(q.p) + ",n=" + std::to_string(q.n) + ",m=" + std::to_string(q.m) +
           ",k=" + std::to_string(q.k) + ",r=" + std::to_string(q.r) + ")";
}

GroupElement CatalogEntry::mark(const std::string& name) const {
    auto it = marks.find(name);
    if (it == marks.end()) throw std::out_of_range("catalog entry " + id() + " has no element named " + name);
    return GroupElement(it->second);
}

namespace {

struct Factor {
    enum Kind { MP, MP111 } kind;
    int u, v;  // M_p(u, v) or M_p(u, 1, 1)
};

struct Recipe {
    std::vector<Factor> nonabelian;  // before the k - |nonabelian| copies of M_p(1,1,1)
    int leading = 0;                 // number of nonabelian factors counted in k
    int amalg = 0;                   // exponent of the amalgamated cyclic factor, 0 = none
    int direct = 0;                  // exponent of the designated direct cyclic factor, 0 = none
    int d1 = 0, d2 = 0;              // ZG = Z_{p^{n+d1}} x Z_{p^{m+d2}} x ...
    const char* u;                   // generators of N
    const char* v;
};

Recipe recipe(int type, int n, int m) {
    using F = Factor;
    switch (type) {
        case 1: return {{F{F::MP, n + 1, m + 1}}, 1, 0, 0, 0, 0, "x1^p", "y1^p"};
        case 2: return {{F{F::MP, n + 1, 1}, F{F::MP111, m + 1, 1}}, 2, 0, 0, 0, 0, "x1^p", "x2^p"};
        case 3: return {{F{F::MP, n + 1, 1}}, 1, 0, m, 0, 0, "x1^p", "w_dir"};
        case 4: return {{F{F::MP111, m + 1, 1}}, 1, n, 0, 0, 0, "w_amalg", "x1^p"};
        case 5: return {{}, 0, n, m, 0, 0, "w_amalg", "w_dir"};
        case 6: return {{F{F::MP, m + 1, n + 1}}, 1, 0, 0, 0, 0, "y1^p", "x1^p"};
        case 7: return {{F{F::MP, m + 1, 1}, F{F::MP111, n + 1, 1}}, 2, 0, 0, 0, 0, "x2^p", "x1^p"};
        case 8: return {{F{F::MP, m + 1, 1}}, 1, 0, n, 0, 0, "w_dir", "x1^p"};
        case 9: return {{F{F::MP111, n + 1, 1}}, 1, m, 0, 0, 0, "x1^p", "w_amalg"};
        case 10: return {{}, 0, m, n, 0, 0, "w_dir", "w_amalg"};
        case 11: return {{F{F::MP111, m + 1, 1}}, 1, n + 1, 0, 1, 0, "w_amalg^p", "x1^p"};
        case 12: return {{}, 0, n + 1, m, 1, 0, "w_amalg^p", "w_dir"};
        case 13: return {{F{F::MP, m + 1, 1}}, 1, 0, n + 1, 1, 0, "w_dir^p", "x1^p"};
        case 14: return {{}, 0, m, n + 1, 1, 0, "w_dir^p", "w_amalg"};
        case 15: return {{F{F::MP, n + 1, 1}}, 1, 0, m + 1, 0, 1, "x1^p", "w_dir^p"};
        case 16: return {{}, 0, n, m + 1, 0, 1, "w_amalg", "w_dir^p"};
        case 17: return {{F{F::MP111, n + 1, 1}}, 1, m + 1, 0, 0, 1, "x1^p", "w_amalg^p"};
        case 18: return {{}, 0, m + 1, n, 0, 1, "w_dir", "w_amalg^p"};
        case 19: return {{}, 0, n + 1, m + 1, 1, 1, "w_amalg^p", "w_dir^p"};
        default: throw ConstraintError("unknown catalog type " + std::to_string(type));
    }
}

int exponent_log_of(const Recipe& rc) {
    int e = 1;
    for (const auto& f : rc.nonabelian) e = std::max({e, f.u, f.kind == Factor::MP ? f.v : 1});
    return std::max({e, rc.amalg, rc.direct});
}

std::optional<std::size_t> independent_derived_gen(const PcPresentation& g) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto v = g.derived_vector()[i];
        if (v == 0) continue;
        if (v != 1 || at) return std::nullopt;
        at = i;
    }
    return at;
}

// Running central product that keeps named elements up to date.
struct Assembly {
    PcPresentation g;
    std::map<std::string, Exponents> marks;

    void add(const PcPresentation& k, bool share_derived, std::optional<GroupElement> k_identified,
             const std::map<std::string, Exponents>& k_marks) {
        std::vector<std::pair<GroupElement, GroupElement>> ident;
        if (share_derived) ident.emplace_back(g.derived_element(), *k_identified);
        const CentralProduct cp = central_product(g, k, ident);
        for (auto& [name, v] : marks) v = cp.embed_h(GroupElement(v)).exponents();
        for (const auto& [name, v] : k_marks) marks[name] = cp.embed_k(GroupElement(v)).exponents();
        g = cp.presentation;
    }
};

Exponents unit(std::size_t size, std::size_t i) {
    Exponents e(size, 0);
    e[i] = 1;
    return e;
}

}  // namespace

void check_params(int type_id, const EntryParams& q) {
    if (type_id < 1 || type_id > kTypeCount) throw ConstraintError("type id must be in 1..19");
    if (q.p < 3 || !is_prime(q.p)) throw ConstraintError("p must be an odd prime");
    if (q.r < 2) throw ConstraintError("requires r >= 2");
    if (q.m < 1) throw ConstraintError("requires m >= 1");
    if (q.n < q.m) throw ConstraintError("requires n >= m");
    if (q.k < 1) throw ConstraintError("requires k >= 1");
    if ((type_id == 2 || type_id == 7) && q.k < 2) throw ConstraintError("requires k >= 2");
    if (((type_id >= 6 && type_id <= 10) || (type_id >= 15 && type_id <= 18)) && q.n <= q.m)
        throw ConstraintError("requires n > m");
}

int predicted_order_log(int type_id, const EntryParams& q) {
    check_params(type_id, q);
    const Recipe rc = recipe(type_id, q.n, q.m);
    return 2 * q.k + q.n + q.m + q.r - 2 + rc.d1 + rc.d2;
}

CatalogEntry build_entry(int type_id, const EntryParams& q) {
    check_params(type_id, q);
    const int p = q.p;
    const Recipe rc = recipe(type_id, q.n, q.m);

    std::vector<PcPresentation> factors;
    for (const auto& f : rc.nonabelian)
        factors.push_back(f.kind == Factor::MP ? build_mp(p, f.u, f.v) : build_mp111_family(p, f.u, f.v));
    for (int i = rc.leading; i < q.k; ++i) factors.push_back(build_mp111_family(p, 1, 1));

    Assembly as{factors.front(), {}};
    as.marks["x1"] = unit(as.g.size(), 0);
    as.marks["y1"] = unit(as.g.size(), 1);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::map<std::string, Exponents> km;
        if (i == 1) km["x2"] = unit(factors[i].size(), 0);
        as.add(factors[i], true, factors[i].derived_element(), km);
    }
    if (rc.amalg > 0) {
        const PcPresentation z = build_cyclic(p, rc.amalg);
        const GroupElement bottom = z.power(z.generator_element(0), ipow(p, static_cast<unsigned>(rc.amalg - 1)));
        as.add(z, true, bottom, {{"w_amalg", unit(1, 0)}});
    }
    if (rc.direct > 0) as.add(build_cyclic(p, rc.direct), false, std::nullopt, {{"w_dir", unit(1, 0)}});
    for (int i = 0; i < q.r - 2; ++i) as.add(build_cyclic(p, 1), false, std::nullopt, {});

    CatalogEntry e;
    e.type_id = type_id;
    e.params = q;
    e.presentation = std::move(as.g);
    PcPresentation& g = e.presentation;

    const auto dgen = independent_derived_gen(g);
    std::size_t nc = 0, zc = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g.generator(i).central) {
            g.rename(i, (nc % 2 == 0 ? "x" : "y") + std::to_string(nc / 2 + 1));
            ++nc;
        } else if (dgen == i) {
            g.rename(i, "c");
        } else {
            g.rename(i, "z" + std::to_string(++zc));
        }
    }

    auto resolve = [&](const std::string& word) {
        const bool pth = word.size() > 2 && word.substr(word.size() - 2) == "^p";
        const std::string base = pth ? word.substr(0, word.size() - 2) : word;
        GroupElement x(as.marks.at(base));
        return (pth ? g.power(x, p) : x).exponents();
    };
    e.marks = as.marks;
    e.marks["u"] = resolve(rc.u);
    e.marks["v"] = resolve(rc.v);
    if (type_id == 1) {
        e.marks["a"] = e.marks["x1"];
        e.marks["b"] = e.marks["y1"];
    } else if (type_id == 6) {
        e.marks["a"] = e.marks["y1"];
        e.marks["b"] = e.marks["x1"];
    }

    e.expected.order_log = predicted_order_log(type_id, q);
    e.expected.exponent_log = exponent_log_of(rc);
    // (d1, d2) = (0,0), (1,0), (0,1), (1,1) give A1..A4
    e.expected.tag = static_cast<CenterTag>(1 + rc.d1 + 2 * rc.d2);
    e.expected.center = {q.n + rc.d1, q.m + rc.d2};
    e.expected.center.resize(static_cast<std::size_t>(q.r), 1);
    std::sort(e.expected.center.rbegin(), e.expected.center.rend());
    return e;
}

std::vector<CatalogEntry> build_catalog(const CatalogRanges& rg) {
    std::vector<int> types = rg.types;
    if (types.empty())
        for (int t = 1; t <= kTypeCount; ++t) types.push_back(t);
    std::sort(types.begin(), types.end());
    std::vector<CatalogEntry> out;
    for (int t : types)
        for (int n = 1; n <= rg.n_max; ++n)
            for (int m = 1; m <= rg.m_max; ++m)
                for (int k = 1; k <= rg.k_max; ++k)
                    for (int r = 2; r <= rg.r_max; ++r) {
                        const EntryParams q{rg.p, n, m, k, r};
                        try {
                            if (predicted_order_log(t, q) > rg.max_order_log) continue;
                        } catch (const ConstraintError&) {
                            continue;
                        }
                        out.push_back(build_entry(t, q));
                    }
    return out;
}

bool EntryReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e, std::size_t budget) {
    EntryReport rep;
    rep.entry = e.id();
    auto add = [&](std::string check, bool pass, std::string detail) {
        rep.items.push_back({std::move(check), pass, std::move(detail)});
    };

    const auto cons = e.presentation.consistency_check();
    add("consistency", cons.ok, cons.ok ? "" : cons.witness);
    if (!cons.ok) return rep;

    std::unique_ptr<Group> gp;
    try {
        gp = std::make_unique<Group>(e.presentation, budget);
    } catch (const BudgetExceeded& ex) {
        add("enumeration", false, ex.what());
        return rep;
    }
    const Group& g = *gp;
    const int p = g.prime();

    add("order", g.order_log() == e.expected.order_log,
        "log_p|G| = " + std::to_string(g.order_log()) + ", expected " + std::to_string(e.expected.order_log));

    const Subgroup d = derived_subgroup(g);
    add("derived_order", d.order() == static_cast<std::size_t>(p) && d.contains(g.derived()),
        "|G'| = " + std::to_string(d.order()));

    const Subgroup z = center(g);
    try {
        const auto q = quotient_invariants(Subgroup::whole(g), z);
        const bool ok = q == std::vector<int>(static_cast<std::size_t>(2 * e.params.k), 1);
        add("central_quotient", ok, "G/ZG invariants " + join_ints(q));
    } catch (const std::exception& ex) {
        add("central_quotient", false, ex.what());
    }

    try {
        const SymplecticForm f = symplectic_form(g);
        const DarbouxBasis db = symplectic_basis(f);
        bool standard = true;
        for (std::size_t i = 0; i < db.pairs.size(); ++i)
            for (std::size_t j = 0; j < db.pairs.size(); ++j) {
                const auto& [xi, yi] = db.pairs[i];
                const auto& [xj, yj] = db.pairs[j];
                standard = standard && f.pair(xi, xj) == 0 && f.pair(yi, yj) == 0 &&
                           f.pair(xi, yj) == (i == j ? 1u : 0u);
            }
        add("symplectic", f.dimension() == static_cast<std::size_t>(2 * e.params.k) && standard,
            "dimension " + std::to_string(f.dimension()) + ", determinant nonzero");
    } catch (const std::exception& ex) {
        add("symplectic", false, ex.what());
    }

    const std::size_t u = g.index(e.mark("u")), v = g.index(e.mark("v"));
    const Subgroup n = Subgroup::generated(g, {u, v});
    try {
        const auto ninv = abelian_invariants(n);
        const auto qinv = quotient_invariants(Subgroup::whole(g), n);
        const bool elementary = std::all_of(qinv.begin(), qinv.end(), [](int x) { return x == 1; });
        const bool ok = n.is_subset_of(z) && ninv == std::vector<int>{e.params.n, e.params.m} && elementary &&
                        g.order_log(u) == e.params.n && g.order_log(v) == e.params.m;
        add("subgroup_N", ok, "N invariants " + join_ints(ninv) + ", G/N invariants " + join_ints(qinv));
    } catch (const std::exception& ex) {
        add("subgroup_N", false, ex.what());
    }

    try {
        const CenterClassification cls = classify_center(g, n);
        add("center_tag", cls.tag == e.expected.tag && cls.invariants == e.expected.center,
            "ZG invariants " + join_ints(cls.invariants) + ", tag " + to_string(cls.tag) + ", expected " +
                to_string(e.expected.tag) + " " + join_ints(e.expected.center));
    } catch (const std::exception& ex) {
        add("center_tag", false, ex.what());
    }

    const std::uint64_t ex = exponent(g);
    add("exponent", ex == static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(e.expected.exponent_log))),
        "exp(G) = " + std::to_string(ex));
    return rep;
}

std::vector<Distinction> pairwise_distinguish(const std::vector<CatalogEntry>& entries, std::size_t oracle_bound) {
    std::vector<std::unique_ptr<Group>> groups;
    std::vector<Fingerprint> prints;
    for (const auto& e : entries) {
        try {
            groups.push_back(std::make_unique<Group>(e.presentation));
            prints.push_back(fingerprint(*groups.back()));
        } catch (const BudgetExceeded&) {
            groups.push_back(nullptr);
            prints.emplace_back();
        }
    }
    std::vector<Distinction> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].params != entries[j].params || entries[i].type_id == entries[j].type_id) continue;
            Distinction d{entries[i].id(), entries[j].id(), false, std::nullopt, ""};
            if (!groups[i] || !groups[j]) {
                d.note = "outside enumeration budget";
                out.push_back(std::move(d));
                continue;
            }
            d.fingerprints_equal = prints[i] == prints[j];
            if (d.fingerprints_equal) {
                if (groups[i]->order() <= oracle_bound) {
                    d.isomorphic = is_isomorphic_bruteforce(*groups[i], *groups[j], oracle_bound);
                    d.note = *d.isomorphic ? "isomorphic" : "distinct by oracle";
                } else {
                    d.note = "fingerprints equal, oracle bound exceeded";
                }
            } else {
                const Fingerprint &a = prints[i], &b = prints[j];
                if (a.order != b.order) d.note = "order";
                else if (a.exponent != b.exponent) d.note = "exponent";
                else if (a.center != b.center) d.note = "center";
                else if (a.abelianization != b.abelianization) d.note = "abelianization";
                else if (a.power_order != b.power_order) d.note = "power subgroup";
                else if (a.omega1_order != b.omega1_order) d.note = "omega_1";
                else if (a.order_histogram != b.order_histogram) d.note = "order histogram";
                else d.note = "class count";
            }
            out.push_back(std::move(d));
        }
    return out;
}

}  // namespace pgroup
