// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All tolerances are exact equality; sample counts and seeds are pinned below.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "pgroup/catalog.hpp"
#include "pgroup/central_product.hpp"
#include "pgroup/group_algebra.hpp"
#include "pgroup/isomorphism.hpp"
#include "pgroup/rng.hpp"
#include "pgroup/structure.hpp"
#include "pgroup/theorems.hpp"

using namespace pgroup;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kPowerSamples = 200;
constexpr std::size_t kOmegaSamples = 100;
constexpr std::size_t kAbpPairs = 100;
constexpr std::size_t kLieElements = 500;
constexpr std::size_t kLiePairs = 200;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Loaded {
    CatalogEntry entry;
    std::unique_ptr<Group> group;
    std::unique_ptr<TheoremContext> ctx;
};

// The criterion-1 catalog with groups and algebras built once.
class Catalog {
public:
    Catalog() {
        for (auto& e : build_catalog({3, 2, 2, 2, 3, {}, 6})) {
            Loaded l{std::move(e), nullptr, nullptr};
            l.group = std::make_unique<Group>(l.entry.presentation);
            items_.push_back(std::move(l));
        }
    }
    std::vector<Loaded>& items() { return items_; }
    TheoremContext& context(Loaded& l) {
        if (!l.ctx) l.ctx = std::make_unique<TheoremContext>(l.entry.id(), *l.group, kDefaultAlgebraBudget,
                                                             l.entry.type_id, l.entry.marks);
        return *l.ctx;
    }

private:
    std::vector<Loaded> items_;
};

Outcome catalog_integrity(Catalog& cat) {
    Outcome o;
    std::size_t n = 0;
    for (auto& l : cat.items()) {
        const auto rep = verify_entry(l.entry);
        ++n;
        if (!rep.pass()) {
            o.pass = false;
            for (const auto& item : rep.items)
                if (!item.pass) o.detail += l.entry.id() + " " + item.check + ": " + item.detail + "; ";
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " entries with |G| <= 3^6 verified";
    o.pass = o.pass && n > 0;
    return o;
}

Outcome center_order(Catalog& cat) {
    Outcome o;
    std::size_t n = 0;
    for (auto& l : cat.items()) {
        const auto r = check_center_order(cat.context(l), 0, kSeed);
        ++n;
        if (r.verdict != Verdict::Pass) {
            o.pass = false;
            o.detail += l.entry.id() + ": " + r.witness + "; ";
        }
    }
    const Group m(build_mp111_family(3, 1, 1));
    const TheoremContext ctx("M_3(1,1,1)", m);
    auto r = check_center_order(ctx, 0, kSeed);
    const bool m111 = r.verdict == Verdict::Pass && r.counts["classes"] == 11 && r.counts["log_order_formula"] == 10;
    if (!m111) o.detail += "M_3(1,1,1) does not give 3^10 from 3 + 8 classes; ";
    o.pass = o.pass && m111;
    if (o.pass) o.detail = std::to_string(n) + " entries; M_3(1,1,1): 11 classes, |Z(V)| = 3^10";
    return o;
}

Outcome abp_identity() {
    Outcome o;
    const std::vector<std::pair<std::string, PcPresentation>> groups{{"M_3(1,1,1)", build_mp111_family(3, 1, 1)},
                                                                     {"M_3(2,1)", build_mp(3, 2, 1)},
                                                                     {"M_3(2,2)", build_mp(3, 2, 2)},
                                                                     {"M_5(1,1,1)", build_mp111_family(5, 1, 1)}};
    std::size_t checked = 0;
    for (const auto& [name, pres] : groups) {
        const Group g(pres);
        const GroupAlgebra alg(g);
        CounterRng rng(CounterRng::derive(kSeed, "abp/" + name));
        for (std::size_t i = 0; i < kAbpPairs / groups.size();) {
            const std::size_t a = rng.below(g.order()), b = rng.below(g.order());
            if (g.commutator(a, b) == Group::identity()) continue;  // the identity needs [a, b] != 1
            ++i;
            ++checked;
            if (!abp_check(alg, a, b)) {
                o.pass = false;
                o.detail += name + " (" + pres.format(g.element(a)) + ", " + pres.format(g.element(b)) + "); ";
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " noncommuting pairs over 4 groups";
    return o;
}

Outcome power_identity(Catalog& cat) {
    Outcome o;
    std::size_t n = 0;
    for (auto& l : cat.items()) {
        if (l.group->order() > 243) continue;
        ++n;
        const auto r = check_power_identity(cat.context(l), 2, kPowerSamples, kSeed);
        if (r.verdict != Verdict::Pass) {
            o.pass = false;
            o.detail += l.entry.id() + ": " + r.witness + "; ";
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " entries with |G| <= 3^5, 200 units and 200 roots each";
    return o;
}

Outcome g_cap_vp(Catalog& cat) {
    Outcome o;
    std::size_t n = 0;
    for (auto& l : cat.items()) {
        if (l.group->order() > 243) continue;
        ++n;
        const auto r = check_g_cap_vp(cat.context(l));
        if (r.verdict != Verdict::Pass) {
            o.pass = false;
            o.detail += l.entry.id() + ": " + r.witness + "; ";
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " entries with |G| <= 3^5, every g decided";
    return o;
}

Outcome omega_witnesses(Catalog& cat) {
    Outcome o;
    std::size_t n = 0, failed = 0;
    std::string fails;
    for (auto& l : cat.items()) {
        ++n;
        auto& ctx = cat.context(l);
        const auto r1 = check_omega(ctx, 1, 20, kSeed);
        const auto r2 = check_omega(ctx, 2, kOmegaSamples, kSeed);
        if (r1.verdict != Verdict::Pass) {
            ++failed;
            fails += l.entry.id() + " l=1: " + r1.witness.substr(0, r1.witness.find(';')) + "; ";
        }
        if (r2.verdict != Verdict::Pass) {
            ++failed;
            fails += l.entry.id() + " l=2: " + r2.witness + "; ";
        }
    }
    o.pass = failed == 0;
    o.detail = std::to_string(n) + " entries, " + std::to_string(failed) + " failing" + (fails.empty() ? "" : ": " + fails);
    return o;
}

Outcome oracle_checks(Catalog& cat) {
    Outcome o;
    std::size_t pairs = 0;
    std::vector<Loaded*> small;
    for (auto& l : cat.items())
        if (l.group->order() <= 81) small.push_back(&l);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            const Group &a = *small[i]->group, &b = *small[j]->group;
            ++pairs;
            const bool fp = fingerprint(a) == fingerprint(b);
            const bool iso = is_isomorphic_bruteforce(a, b, 81);
            if (fp != iso) {
                o.pass = false;
                o.detail += small[i]->entry.id() + " vs " + small[j]->entry.id() + "; ";
            }
        }
    // M_3(1,1,1) central product M_3(1,1,1) over c, times the direct Z_3 the k = 2 recipe of (1.5) adds
    const auto m = build_mp111_family(3, 1, 1);
    const auto mm = central_product(m, m, {{m.derived_element(), m.derived_element()}});
    const auto full = central_product(mm.presentation, build_cyclic(3, 1), {});
    const Group lhs(full.presentation), rhs(build_entry(5, {3, 1, 1, 2, 2}).presentation);
    const bool cp = lhs.order() == rhs.order() && is_isomorphic_bruteforce(lhs, rhs, 729);
    if (!cp) o.detail += "central product does not match T1_5(p=3,n=1,m=1,k=2,r=2); ";
    o.pass = o.pass && cp;
    if (o.pass)
        o.detail = std::to_string(pairs) + " pairs with |G| <= 3^4 agree; (M111 Y M111) x Z_3 ~ T1_5(k=2) by oracle";
    return o;
}

Outcome lie_properties() {
    Outcome o;
    const Group g(build_mp111_family(3, 1, 1));
    const GroupAlgebra alg(g);
    Echelon span(3, g.order());
    std::vector<AlgebraElement> brackets;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            const auto x = alg.basis(g.mul(a, b)) - alg.basis(g.mul(b, a));
            if (span.insert(x.coeffs())) brackets.push_back(x);
        }
    CounterRng rng(CounterRng::derive(kSeed, "lie"));
    std::size_t members = 0, mismatches = 0;
    for (std::size_t i = 0; i < kLieElements; ++i) {
        AlgebraElement x = alg.random(rng);
        if (i % 2 == 0) {  // half drawn from the bracket span so both answers occur
            x = alg.zero();
            for (const auto& b : brackets) x = x + static_cast<std::uint32_t>(rng.below(3)) * b;
            if (i % 4 == 0) x = x + alg.basis(rng.below(g.order()));
        }
        const bool m = lie_membership(x);
        members += m;
        mismatches += m != span.contains(x.coeffs());
    }
    std::size_t frob_fail = 0;
    for (std::size_t i = 0; i < kLiePairs; ++i) {
        const auto x = alg.random(rng), y = alg.random(rng);
        const auto d = alg.pow(x + y, 3) - alg.pow(x, 3) - alg.pow(y, 3);
        frob_fail += !lie_membership(d);
    }
    o.pass = mismatches == 0 && frob_fail == 0 && members > 0 && members < kLieElements;
    o.detail = std::to_string(kLieElements) + " elements (" + std::to_string(members) + " members), " +
               std::to_string(mismatches) + " disagreements; " + std::to_string(frob_fail) + "/" +
               std::to_string(kLiePairs) + " Frobenius differences outside the bracket span";
    return o;
}

int run_cli(const std::string& args) {
    const int st = std::system((std::string(PGROUP_CLI) + " " + args + " 2>/dev/null").c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

Outcome determinism() {
    Outcome o;
    const auto dir = fs::temp_directory_path();
    const auto a = dir / ("pgroup_accept_a_" + std::to_string(::getpid()));
    const auto b = dir / ("pgroup_accept_b_" + std::to_string(::getpid()));
    const std::string args = "verify --p 3 --max-order-log 5 --samples 20 --seed " + std::to_string(kSeed);
    const int sa = run_cli(args + " --jobs 1 --out " + a.string());
    const int sb = run_cli(args + " --jobs 2 --out " + b.string());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string ra = slurp(a), rb = slurp(b);
    o.pass = sa != 2 && sb != 2 && !ra.empty() && ra == rb;
    o.detail = std::to_string(std::count(ra.begin(), ra.end(), '\n')) + " records, " +
               (ra == rb ? "byte-identical" : "reports differ");
    fs::remove(a);
    fs::remove(b);
    return o;
}

}  // namespace

int main() {
    Catalog cat;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"catalog integrity", [&] { return catalog_integrity(cat); }},
        {"center order formula", [&] { return center_order(cat); }},
        {"(a + b)^p identity", [] { return abp_identity(); }},
        {"p^2 power identity", [&] { return power_identity(cat); }},
        {"G meets V(F_p G^p) x C in G^p", [&] { return g_cap_vp(cat); }},
        {"Omega strictness witnesses", [&] { return omega_witnesses(cat); }},
        {"isomorphism oracle cross-checks", [&] { return oracle_checks(cat); }},
        {"Lie membership properties", [] { return lie_properties(); }},
        {"report determinism", [] { return determinism(); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::printf("%s %zu %s [exact, %.1fs]: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
