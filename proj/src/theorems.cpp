#include "pgroup/theorems.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"
#include "pgroup/rng.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

TheoremContext::TheoremContext(std::string id, const Group& g, std::size_t algebra_budget, int type_id,
                               std::map<std::string, Exponents> marks)
    : id_(std::move(id)),
      g_(&g),
      alg_(g, algebra_budget),
      cs_(class_sum_data(alg_)),
      z_(pgroup::center(g)),
      type_id_(type_id),
      marks_(std::move(marks)) {}

namespace {

using Clock = std::chrono::steady_clock;

// Signals a failed assertion inside a check body; caught by run_check.
struct CheckFailed {
    std::string witness;
};

void require(bool ok, const std::string& witness) {
    if (!ok) throw CheckFailed{witness};
}

CheckResult run_check(CheckResult r, const std::function<void(CheckResult&)>& body) {
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const CheckFailed& f) {
        r.verdict = Verdict::Fail;
        r.witness = f.witness;
    } catch (const VerificationFailure& e) {
        r.verdict = Verdict::Fail;
        r.witness = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

CheckResult start(const TheoremContext& ctx, std::string check, int l, std::size_t samples, std::uint64_t seed) {
    CheckResult r;
    r.check = std::move(check);
    r.group = ctx.id();
    r.l = l;
    r.sampled = samples > 0;
    r.samples = samples;
    r.seed = seed;
    return r;
}

CounterRng stream(const CheckResult& r, const std::string& part) {
    return CounterRng(CounterRng::derive(r.seed, r.check + "/" + part + "/" + r.group + "/l=" + std::to_string(r.l)));
}

std::string sample_tag(const std::string& part, std::size_t i) { return part + " sample " + std::to_string(i); }

bool supported_in(const AlgebraElement& x, const std::vector<bool>& set) {
    for (auto g : x.support())
        if (!set[g]) return false;
    return true;
}

std::vector<bool> indicator(std::size_t n, const std::vector<std::size_t>& elems) {
    std::vector<bool> m(n, false);
    for (auto e : elems) m[e] = true;
    return m;
}

// Random element of V(F_p H) for a subgroup H given as an element list containing 1.
template <class Rng>
AlgebraElement random_unit_on(const GroupAlgebra& alg, const std::vector<std::size_t>& h, Rng& rng) {
    FpVector c(alg.dim(), 0);
    std::uint64_t sum = 0;
    for (auto x : h)
        if (x != Group::identity()) sum += c[x] = static_cast<std::uint32_t>(rng.below(alg.prime()));
    c[Group::identity()] = static_cast<std::uint32_t>((1 + alg.prime() - sum % alg.prime()) % alg.prime());
    return AlgebraElement(alg, std::move(c));
}

std::string describe(const Group& g, const AlgebraElement& x) {
    std::ostringstream os;
    bool first = true;
    for (auto i : x.support()) {
        if (!first) os << " + ";
        first = false;
        os << x[i] << "*" << g.presentation().format(g.element(i));
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

CheckResult check_center_order(const TheoremContext& ctx, std::size_t samples, std::uint64_t seed) {
    return run_check(start(ctx, "center_order", 0, samples, seed), [&](CheckResult& r) {
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const std::int64_t p = g.prime();
        const auto n = static_cast<std::int64_t>(g.order());
        const auto zg = static_cast<std::int64_t>(ctx.center().order());
        const auto classes = static_cast<std::int64_t>(alg.classes().size());
        const auto t = static_cast<std::int64_t>(ctx.class_sums().t());
        r.counts = {{"classes", classes}, {"t", t}, {"center_order", zg}};
        require(classes == zg + t, "class count " + std::to_string(classes) + " != |ZG| + t");
        require(t * p == n - zg, "noncentral classes do not all have size p");
        const std::int64_t num = n + (p - 1) * zg - p;
        require(num % p == 0, "(|G| + (p-1)|ZG| - p) is not divisible by p");
        r.counts["log_order_from_classes"] = classes - 1;
        r.counts["log_order_formula"] = num / p;
        require(classes - 1 == num / p, "log_p |Z(V)| = " + std::to_string(classes - 1) + " but formula gives " +
                                            std::to_string(num / p));

        auto rng = stream(r, "decompose");
        const auto basis = center_basis(alg);
        for (std::size_t i = 0; i < samples; ++i) {
            AlgebraElement a = alg.zero();
            for (const auto& b : basis) a = a + static_cast<std::uint32_t>(rng.below(alg.prime())) * b;
            a = a + alg.scalar(1 + alg.prime() - alg.epsilon(a));
            const auto d = central_unit_decompose(alg, ctx.class_sums(), a);
            require(central_unit_compose(alg, ctx.class_sums(), d) == a, sample_tag("decompose", i));
        }
    });
}

CheckResult check_power_identity(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed) {
    return run_check(start(ctx, "power_identity", l, samples, seed), [&](CheckResult& r) {
        if (l < 2) throw std::invalid_argument("check_power_identity needs l >= 2");
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const Subgroup pw = power_subgroup(g, l);
        const auto in_pw = indicator(g.order(), pw.elements());
        // root table: one p^l-th root for every element of G^{p^l}
        std::vector<std::size_t> root(g.order(), g.order());
        for (std::size_t x = 0; x < g.order(); ++x) {
            const std::size_t y = g.ppower(x, l);
            if (root[y] == g.order()) root[y] = x;
        }
        for (auto h : pw.elements()) {
            require(root[h] != g.order(), "no p^l-th root of " + g.presentation().format(g.element(h)));
            require(g.ppower(root[h], l) == h, "root table entry is wrong");
        }
        r.counts["power_subgroup_order"] = static_cast<std::int64_t>(pw.order());

        auto fwd = stream(r, "forward");
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = alg.random_unit(fwd);
            const auto lhs = alg.ppower(a, l);
            FpVector termwise(alg.dim(), 0);
            for (std::size_t x = 0; x < alg.dim(); ++x) {
                auto& c = termwise[g.ppower(x, l)];
                c = (c + a[x]) % alg.prime();
            }
            require(lhs == AlgebraElement(alg, termwise), sample_tag("forward", i) + ": alpha^{p^l} is not termwise");
            require(supported_in(lhs, in_pw), sample_tag("forward", i) + ": support leaves G^{p^l}");
        }
        auto bwd = stream(r, "backward");
        for (std::size_t i = 0; i < samples; ++i) {
            const auto b = random_unit_on(alg, pw.elements(), bwd);
            FpVector c(alg.dim(), 0);
            for (auto h : b.support()) c[root[h]] = b[h];
            const AlgebraElement a(alg, c);
            require(alg.ppower(a, l) == b, sample_tag("backward", i) + ": constructed root fails for " + describe(g, b));
        }
    });
}

CheckResult check_vp_c(const TheoremContext& ctx, std::size_t samples, std::uint64_t seed) {
    return run_check(start(ctx, "vp_c", 0, samples, seed), [&](CheckResult& r) {
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const Subgroup gp = power_subgroup(g, 1);
        const auto in_gp = indicator(g.order(), gp.elements());
        // V(F_p G^p) meets C trivially: G^p is central and 1 + sum b_i C_i is supported
        // on 1 and noncentral classes, so a common element has every b_i = 0.
        require(gp.is_subset_of(ctx.center()), "G^p is not central");
        std::int64_t nontrivial = 0;
        auto rng = stream(r, "units");
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = alg.random_unit(rng);
            const auto split = frobenius_split(a);
            const auto ap = split.s + split.delta;
            require(alg.epsilon(split.s) == 1 && supported_in(split.s, in_gp),
                    sample_tag("units", i) + ": termwise part is not in V(F_p G^p)");
            const auto gamma = alg.mul(alg.normalized_inverse(split.s), ap);
            const auto d = central_unit_decompose(alg, ctx.class_sums(), gamma);
            require(d.b == alg.one(), sample_tag("units", i) + ": s^{-1} alpha^p has a component outside C");
            require(alg.mul(split.s, gamma) == ap, sample_tag("units", i) + ": s * gamma != alpha^p");
            if (!(gamma == alg.one())) ++nontrivial;
        }
        r.counts["nontrivial_c_part"] = nontrivial;
    });
}

CheckResult check_g_cap_vp(const TheoremContext& ctx) {
    return run_check(start(ctx, "g_cap_vp", 0, 0, 0), [&](CheckResult& r) {
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const Subgroup gp = power_subgroup(g, 1);
        const auto in_gp = indicator(g.order(), gp.elements());
        std::int64_t members = 0;
        for (std::size_t x = 0; x < g.order(); ++x) {
            const auto e = alg.basis(x);
            bool member = false;
            // V(F_p G^p) x C is central, so noncentral x is never a member
            if (alg.is_central(e)) {
                const auto d = central_unit_decompose(alg, ctx.class_sums(), e);
                bool c_trivial = true;
                for (auto b : d.exps) c_trivial &= b == 0;
                member = c_trivial && supported_in(d.b, in_gp);
            }
            members += member;
            require(member == in_gp[x], g.presentation().format(g.element(x)) +
                                            (member ? " is a member but not in G^p" : " is in G^p but not a member"));
        }
        r.counts["members"] = members;
        r.counts["power_subgroup_order"] = static_cast<std::int64_t>(gp.order());
    });
}

namespace {

enum class WitnessKind { Generic, OmegaPair, Special };

// Which witness of proper inclusion the catalog family calls for at l = 1.
WitnessKind witness_kind(int type_id) {
    switch (type_id) {
        case 1:
        case 6: return WitnessKind::Special;
        case 5:
        case 10:
        case 12:
        case 14:
        case 16:
        case 18:
        case 19: return WitnessKind::OmegaPair;
        default: return WitnessKind::Generic;
    }
}

}  // namespace

CheckResult check_omega(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed) {
    return run_check(start(ctx, "omega", l, samples, seed), [&](CheckResult& r) {
        if (l < 1) throw std::invalid_argument("check_omega needs l >= 1");
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const Subgroup om = omega(g, l);
        const DeltaBasis delta(alg, om);
        const auto vecs = delta.vectors();
        r.counts["omega_order"] = static_cast<std::int64_t>(om.order());
        r.counts["delta_dimension"] = static_cast<std::int64_t>(vecs.size());
        const auto one = alg.one();

        auto member_rng = stream(r, "members");
        auto random_member = [&] {
            AlgebraElement a = one;
            for (const auto& v : vecs) a = a + static_cast<std::uint32_t>(member_rng.below(alg.prime())) * v;
            return a;
        };

        // 1 + Delta(G, Omega_l) has exponent p^l when l >= 2
        std::vector<AlgebraElement> low_order;
        std::int64_t above = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = random_member();
            const bool small = alg.ppower(a, l) == one;
            if (l >= 2) require(small, sample_tag("members", i) + ": order exceeds p^l");
            above += !small;
            if (small && low_order.size() < 16) low_order.push_back(a);
        }
        r.counts["members_above_order"] = above;

        // converse: units of order dividing p^l lie in 1 + Delta(G, Omega_l)
        auto unit_rng = stream(r, "units");
        std::int64_t random_hits = 0, checked = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            const auto u = alg.random_unit(unit_rng);
            if (!(alg.ppower(u, l) == one)) continue;
            ++random_hits;
            ++checked;
            require(delta.contains(u - one), sample_tag("units", i) + ": order divides p^l but outside 1 + Delta");
        }
        std::vector<std::size_t> zl;
        for (auto z : ctx.center().elements())
            if (g.order_log(z) <= l) zl.push_back(z);
        auto pert_rng = stream(r, "perturbed");
        for (std::size_t i = 0; i < samples && !low_order.empty(); ++i) {
            const auto& a = low_order[i % low_order.size()];
            const auto u = alg.mul(alg.mul(a, ctx.random_c(pert_rng)), alg.basis(zl[pert_rng.below(zl.size())]));
            require(alg.ppower(u, l) == one, sample_tag("perturbed", i) + ": perturbation raised the order");
            ++checked;
            require(delta.contains(u - one), sample_tag("perturbed", i) + ": order divides p^l but outside 1 + Delta");
        }
        r.counts["converse_random_hits"] = random_hits;
        r.counts["converse_checked"] = checked;
        if (random_hits == 0) r.note = "converse vacuously sampled for uniform units";

        if (l != 1) return;
        // proper inclusion at l = 1: an element of 1 + Delta(G, Omega_1) of order > p
        const auto& om_el = om.elements();
        AlgebraElement w;
        std::string kind;
        WitnessKind wk = witness_kind(ctx.type_id());
        if (ctx.type_id() == 0) wk = WitnessKind::Generic;
        auto find_generic = [&]() -> bool {
            for (auto x : delta.transversal())
                for (auto y : om_el)
                    if (g.commutator(x, y) != Group::identity()) {
                        w = one + alg.mul(alg.basis(x), alg.basis(y) - one);
                        kind = "1 + x(y - 1), x = " + g.presentation().format(g.element(x)) +
                               ", y = " + g.presentation().format(g.element(y));
                        return true;
                    }
            return false;
        };
        auto find_pair = [&]() -> bool {
            for (auto a : om_el)
                for (auto b : om_el)
                    if (g.commutator(a, b) != Group::identity()) {
                        w = alg.basis(a) + alg.basis(b) - one;
                        kind = "a1 + b1 - 1, a1 = " + g.presentation().format(g.element(a)) +
                               ", b1 = " + g.presentation().format(g.element(b));
                        return true;
                    }
            return false;
        };
        bool found = false;
        switch (wk) {
            case WitnessKind::Generic:
                found = find_generic() || (ctx.type_id() == 0 && find_pair());
                break;
            case WitnessKind::OmegaPair: found = find_pair(); break;
            case WitnessKind::Special: {
                require(ctx.marks().count("a") && ctx.marks().count("b"), "entry lacks the elements a, b");
                const std::size_t a = g.index(GroupElement(ctx.marks().at("a")));
                const std::size_t b = g.index(GroupElement(ctx.marks().at("b")));
                const std::size_t ap = g.ppower(a, g.order_log(a) - 1), bp = g.ppower(b, g.order_log(b) - 1);
                w = one + alg.mul(alg.basis(a), alg.basis(g.mul(ap, bp)) - one) + alg.mul(alg.basis(b), alg.basis(bp) - one);
                kind = "1 + a(a^{p^n} b^{p^m} - 1) + b(b^{p^m} - 1)";
                found = true;
                break;
            }
        }
        require(found, "no witness pair exists for this group");
        r.note = r.note.empty() ? "witness " + kind : r.note + "; witness " + kind;
        require(delta.contains(w - one), "witness is not in 1 + Delta(G, Omega_1)");
        require(!(alg.pow(w, alg.prime()) == one),
                "witness has order p: " + kind + "; sampled members of 1 + Delta(G, Omega_1) of order above p: " +
                    std::to_string(above) + "/" + std::to_string(samples));
        r.counts["witness_order_log"] = alg.unit_order_log(w);
    });
}

CheckResult check_center_omega(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed) {
    return run_check(start(ctx, "center_omega", l, samples, seed), [&](CheckResult& r) {
        const Group& g = ctx.group();
        const auto& alg = ctx.algebra();
        const auto one = alg.one();
        const auto& z = ctx.center().elements();

        // Omega_l(V(F_p ZG)) x C inside Z Omega_l(V)
        auto fwd = stream(r, "forward");
        for (std::size_t i = 0; i < samples; ++i) {
            auto b = random_unit_on(alg, z, fwd);
            const int j = alg.unit_order_log(b);
            if (j > l) b = alg.ppower(b, j - l);
            const auto x = alg.mul(b, ctx.random_c(fwd));
            require(alg.is_central(x), sample_tag("forward", i) + ": product is not central");
            require(alg.ppower(x, l) == one, sample_tag("forward", i) + ": order exceeds p^l");
        }

        // central elements of 1 + Delta(G, Omega_l): combinations of class sums whose
        // coefficient sum vanishes on every left coset of Omega_l
        const Subgroup om = omega(g, l);
        const DeltaBasis delta(alg, om);
        std::vector<std::size_t> coset(g.order());
        for (std::size_t q = 0; q < delta.transversal().size(); ++q)
            for (auto h : om.elements()) coset[g.mul(delta.transversal()[q], h)] = q;
        const auto& classes = alg.classes();
        FpMatrix m(classes.size(), FpVector(delta.transversal().size(), 0));
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (auto x : classes[k]) m[k][coset[x]] = (m[k][coset[x]] + 1) % alg.prime();
        const FpMatrix null = left_nullspace_mod_p(m, alg.prime());
        std::vector<AlgebraElement> basis;
        for (const auto& lam : null) {
            AlgebraElement y = alg.zero();
            for (std::size_t k = 0; k < classes.size(); ++k)
                if (lam[k]) y = y + lam[k] * alg.hat(classes[k]);
            basis.push_back(y);
        }
        r.counts["central_delta_dimension"] = static_cast<std::int64_t>(basis.size());

        auto bwd = stream(r, "backward");
        std::int64_t kept = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            AlgebraElement x = one;
            for (const auto& y : basis) x = x + static_cast<std::uint32_t>(bwd.below(alg.prime())) * y;
            require(delta.contains(x - one) && alg.is_central(x), sample_tag("backward", i) + ": sample construction");
            if (!(alg.ppower(x, l) == one)) continue;
            ++kept;
            const auto d = central_unit_decompose(alg, ctx.class_sums(), x);
            require(alg.ppower(d.b, l) == one, sample_tag("backward", i) + ": ZG-part has order above p^l");
        }
        r.counts["backward_kept"] = kept;
    });
}

std::vector<CheckResult> run_suite(const CatalogEntry& e, const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, int>> plan{{"center_order", 0}};
    for (int l : cfg.power_ls) plan.emplace_back("power_identity", l);
    plan.emplace_back("vp_c", 0);
    plan.emplace_back("g_cap_vp", 0);
    for (int l : cfg.omega_ls) plan.emplace_back("omega", l);
    for (int l : cfg.omega_ls) plan.emplace_back("center_omega", l);

    auto skipped = [&](const std::string& reason) {
        std::vector<CheckResult> out;
        for (const auto& [name, l] : plan) {
            CheckResult r;
            r.check = name;
            r.group = e.id();
            r.l = l;
            r.verdict = Verdict::Skipped;
            r.reason = reason;
            out.push_back(std::move(r));
        }
        return out;
    };
    if (e.presentation.order() > cfg.algebra_budget)
        return skipped("|G| = " + std::to_string(e.presentation.order()) + " exceeds algebra budget " +
                       std::to_string(cfg.algebra_budget));
    std::unique_ptr<Group> g;
    std::unique_ptr<TheoremContext> ctx;
    try {
        g = std::make_unique<Group>(e.presentation, cfg.group_budget);
        ctx = std::make_unique<TheoremContext>(e.id(), *g, cfg.algebra_budget, e.type_id, e.marks);
    } catch (const BudgetExceeded& ex) {
        return skipped(ex.what());
    }
    std::vector<CheckResult> out;
    const std::size_t n = cfg.samples;
    out.push_back(check_center_order(*ctx, n, cfg.seed));
    for (int l : cfg.power_ls) out.push_back(check_power_identity(*ctx, l, n, cfg.seed));
    out.push_back(check_vp_c(*ctx, n, cfg.seed));
    out.push_back(check_g_cap_vp(*ctx));
    for (int l : cfg.omega_ls) out.push_back(check_omega(*ctx, l, n, cfg.seed));
    for (int l : cfg.omega_ls) out.push_back(check_center_omega(*ctx, l, n, cfg.seed));
    return out;
}

}  // namespace pgroup
