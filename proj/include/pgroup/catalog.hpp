/**
 * @file catalog.hpp
 * @brief The nineteen families of class-2 p-groups with derived subgroup of
 *        order p, built as central products of inner abelian groups and
 *        cyclic groups.
 *
 * Every family is parameterised by (p, n, m, k, r): G/ZG has order p^{2k},
 * ZG has rank r, and ZG contains a subgroup N = Z_{p^n} x Z_{p^m} with G/N
 * elementary abelian. Families 1-10 have ZG = Z_{p^n} x Z_{p^m} x Z_p^{r-2}
 * (tag A1), 11-14 have Z_{p^{n+1}} x Z_{p^m} x ... (A2), 15-18 have
 * Z_{p^n} x Z_{p^{m+1}} x ... (A3) and 19 has Z_{p^{n+1}} x Z_{p^{m+1}} x ... (A4).
 *
 * In the factor lists, "amalgamated" cyclic factors share their subgroup of
 * order p with the derived subgroup <c>; "direct" factors do not.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/pc_presentation.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

inline constexpr int kTypeCount = 19;

/// M_p(n, m) = <a, b | a^{p^n} = b^{p^m} = 1, a^b = a^{1 + p^{n-1}}>, n >= 2, m >= 1.
PcPresentation build_mp(int p, int n, int m);
/// M_p(n, m, 1) = <a, b, c | a^{p^n} = b^{p^m} = c^p = 1, [a, b] = c central>, n >= m >= 1.
PcPresentation build_mp111_family(int p, int n, int m);
/// Cyclic group of order p^e with generator named `name`.
PcPresentation build_cyclic(int p, int e, const std::string& name = "w");

struct EntryParams {
    int p = 3, n = 1, m = 1, k = 1, r = 2;
    auto operator<=>(const EntryParams&) const = default;
};

struct ExpectedInvariants {
    int order_log = 0;     ///< log_p |G|
    int exponent_log = 0;  ///< log_p exp(G)
    CenterTag tag = CenterTag::A1;
    std::vector<int> center;  ///< invariants of ZG, nonincreasing
    bool operator==(const ExpectedInvariants&) const = default;
};

struct CatalogEntry {
    int type_id = 1;
    EntryParams params;
    PcPresentation presentation;
    ExpectedInvariants expected;
    /// Named elements of G. Always "u", "v" (generators of N, of orders p^n and p^m);
    /// "x1", "y1" for the first noncentral pair; "w_amalg", "w_dir" for the
    /// designated cyclic factors when present; "a", "b" for families 1 and 6.
    std::map<std::string, Exponents> marks;

    std::string type_name() const { return "T1_" + std::to_string(type_id); }
    /// e.g. "T1_5(p=3,n=1,m=1,k=1,r=2)"
    std::string id() const;
    GroupElement mark(const std::string& name) const;
    bool has_mark(const std::string& name) const { return marks.count(name) != 0; }
};

/// Throws ConstraintError naming the violated constraint when (type, params) is not admissible.
void check_params(int type_id, const EntryParams& params);
/// log_p |G| for admissible parameters, without building the group.
int predicted_order_log(int type_id, const EntryParams& params);

CatalogEntry build_entry(int type_id, const EntryParams& params);

struct CatalogRanges {
    int p = 3;
    int n_max = 2, m_max = 2, k_max = 2, r_max = 3;
    std::vector<int> types;  ///< empty = all
    int max_order_log = 6;   ///< skip entries with |G| > p^max_order_log
};

/// All admissible entries in range, sorted by (type_id, n, m, k, r).
std::vector<CatalogEntry> build_catalog(const CatalogRanges& ranges);

struct VerifyItem {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct EntryReport {
    std::string entry;
    std::vector<VerifyItem> items;
    bool pass() const;
};

EntryReport verify_entry(const CatalogEntry& e, std::size_t budget = kDefaultGroupBudget);

struct Distinction {
    std::string first, second;
    bool fingerprints_equal = false;
    std::optional<bool> isomorphic;  ///< set when the oracle was consulted
    std::string note;
};

/// Fingerprint comparison of every pair of entries sharing (p, n, m, k, r);
/// equal fingerprints escalate to the isomorphism oracle when within `oracle_bound`.
std::vector<Distinction> pairwise_distinguish(const std::vector<CatalogEntry>& entries,
                                              std::size_t oracle_bound = 243);

}  // namespace pgroup
