/**
 * @file theorems.hpp
 * @brief Executable checks of the unit-group statements for F_p G: the order of
 *        the center of V, power maps V^{p^l}, the decomposition V^p C, the
 *        intersection G with V^p, and the Omega series of V and of its center.
 *
 * Checks polynomial in |G| run exhaustively; the others draw seeded samples and
 * verify each sample with an explicit certificate.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pgroup/catalog.hpp"
#include "pgroup/group_algebra.hpp"

namespace pgroup {

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct CheckResult {
    std::string check;  ///< e.g. "power_identity"
    std::string group;  ///< catalog id or free-form descriptor
    int l = 0;          ///< 0 when the check has no l parameter
    bool sampled = false;
    std::uint64_t seed = 0;  ///< base seed; the stream seed is derived from (seed, check, group, l)
    std::size_t samples = 0;
    Verdict verdict = Verdict::Pass;
    std::string witness;  ///< for Fail: what went wrong and how to reproduce it
    std::string reason;   ///< for Skipped
    std::map<std::string, std::int64_t> counts;
    std::string note;
    double seconds = 0;
};

/// Per-group state shared by the checks: the algebra, class sums and a few subgroups.
class TheoremContext {
public:
    /// Throws BudgetExceeded when |G| exceeds the algebra budget. `type_id` = 0 for
    /// groups outside the catalog; `marks` supplies the named elements of catalog entries.
    TheoremContext(std::string id, const Group& g, std::size_t algebra_budget = kDefaultAlgebraBudget,
                   int type_id = 0, std::map<std::string, Exponents> marks = {});

    const std::string& id() const { return id_; }
    const Group& group() const { return *g_; }
    const GroupAlgebra& algebra() const { return alg_; }
    const ClassSumData& class_sums() const { return cs_; }
    const Subgroup& center() const { return z_; }
    int type_id() const { return type_id_; }
    const std::map<std::string, Exponents>& marks() const { return marks_; }

    /// Uniform random element of C = <1 + C_i>.
    template <class Rng>
    AlgebraElement random_c(Rng& rng) const {
        CentralUnitSplit s{alg_.one(), {}};
        for (std::size_t i = 0; i < cs_.t(); ++i) s.exps.push_back(static_cast<std::uint32_t>(rng.below(alg_.prime())));
        return central_unit_compose(alg_, cs_, s);
    }

private:
    std::string id_;
    const Group* g_;
    GroupAlgebra alg_;
    ClassSumData cs_;
    Subgroup z_;
    int type_id_;
    std::map<std::string, Exponents> marks_;
};

/// |Z(V)| = p^{(|G| + (p-1)|ZG| - p)/p} against the class count, plus sampled
/// reconstruction of central units as V(F_p ZG) x C.
CheckResult check_center_order(const TheoremContext& ctx, std::size_t samples, std::uint64_t seed);
/// V^{p^l} = V(F_p G^{p^l}) in both directions, l >= 2.
CheckResult check_power_identity(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed);
/// alpha^p = s * gamma with s in V(F_p G^p), gamma in C, and V(F_p G^p) meets C trivially.
CheckResult check_vp_c(const TheoremContext& ctx, std::size_t samples, std::uint64_t seed);
/// G meets V(F_p G^p) x C exactly in G^p, decided for every g.
CheckResult check_g_cap_vp(const TheoremContext& ctx);
/// Omega_l(V) against 1 + Delta(G, Omega_l(G)); at l = 1 a witness of proper inclusion.
CheckResult check_omega(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed);
/// Z Omega_l(V) = Omega_l(V(F_p ZG)) x C, sampled in both directions.
CheckResult check_center_omega(const TheoremContext& ctx, int l, std::size_t samples, std::uint64_t seed);

struct SuiteConfig {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::vector<int> power_ls{2};
    std::vector<int> omega_ls{1, 2};
    std::size_t group_budget = kDefaultGroupBudget;
    std::size_t algebra_budget = kDefaultAlgebraBudget;
};

/// Every check for one catalog entry, in a fixed order. Entries over budget yield
/// Skipped results with the reason.
std::vector<CheckResult> run_suite(const CatalogEntry& e, const SuiteConfig& cfg);

}  // namespace pgroup
