/**
 * @file group_algebra.hpp
 * @brief The modular group algebra F_p G of an enumerated group, with dense
 *        coefficient vectors indexed by the group enumeration.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/linalg.hpp"

namespace pgroup {

inline constexpr std::size_t kDefaultAlgebraBudget = 729;  // 3^6

class GroupAlgebra;

/// Element of F_p G. Coefficients are canonical residues in [0, p).
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(const GroupAlgebra& parent, FpVector coeffs);

    const GroupAlgebra& parent() const { return *parent_; }
    const FpVector& coeffs() const { return c_; }
    std::uint32_t operator[](std::size_t g) const { return c_[g]; }
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    bool operator==(const AlgebraElement& o) const { return parent_ == o.parent_ && c_ == o.c_; }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(std::uint32_t s, const AlgebraElement& a);
    AlgebraElement operator-() const;

private:
    const GroupAlgebra* parent_ = nullptr;
    FpVector c_;
};

class GroupAlgebra {
public:
    /// Throws BudgetExceeded when |G| > budget. The group must outlive the algebra.
    explicit GroupAlgebra(const Group& g, std::size_t budget = kDefaultAlgebraBudget);

    const Group& group() const { return *g_; }
    std::uint32_t prime() const { return p_; }
    std::size_t dim() const { return n_; }

    AlgebraElement zero() const;
    AlgebraElement one() const { return basis(Group::identity()); }
    AlgebraElement basis(std::size_t g) const;
    AlgebraElement scalar(std::uint32_t s) const;
    /// Sum of the listed group elements.
    AlgebraElement hat(const std::vector<std::size_t>& s) const;
    /// Uniform random element; draws from `rng`.
    template <class Rng>
    AlgebraElement random(Rng& rng) const {
        FpVector c(n_);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(p_));
        return AlgebraElement(*this, std::move(c));
    }
    /// Uniform random normalized unit (augmentation 1).
    template <class Rng>
    AlgebraElement random_unit(Rng& rng) const {
        FpVector c(n_);
        std::uint64_t sum = 0;
        for (std::size_t i = 1; i < n_; ++i) sum += c[i] = static_cast<std::uint32_t>(rng.below(p_));
        c[0] = static_cast<std::uint32_t>((1 + p_ - sum % p_) % p_);
        return AlgebraElement(*this, std::move(c));
    }

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement pow(const AlgebraElement& a, std::uint64_t e) const;
    /// a^{p^l}
    AlgebraElement ppower(const AlgebraElement& a, int l) const;
    std::uint32_t epsilon(const AlgebraElement& a) const;

    /// g^{-1} a g as a coefficient permutation.
    AlgebraElement conjugate(const AlgebraElement& a, std::size_t g) const;
    /// Commutes with every element of G (equivalently: constant on conjugacy classes).
    bool is_central(const AlgebraElement& a) const;

    /// log_p of the order of a normalized unit. Throws std::invalid_argument when
    /// epsilon(a) != 1 and VerificationFailure past the cap p^{log_p|G| + max e_i}.
    int unit_order_log(const AlgebraElement& a) const;
    /// Inverse of a normalized unit: a^{p^j - 1} where p^j is its order, which in
    /// characteristic p equals the geometric series sum_{i < p^j} (1 - a)^i.
    AlgebraElement normalized_inverse(const AlgebraElement& a) const;

    /// Group commutator u^{-1} v^{-1} u v of normalized units.
    AlgebraElement unit_commutator(const AlgebraElement& u, const AlgebraElement& v) const;

    void check_parent(const AlgebraElement& a) const;

    /// Conjugacy classes of G (as conjugacy_classes()) and the class of each element.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t g) const { return class_of_[g]; }
    /// Index of the coset gG' (the least element of the coset).
    std::size_t derived_coset(std::size_t g) const { return derived_coset_[g]; }

private:
    const Group* g_;
    std::uint32_t p_;
    std::size_t n_;
    std::vector<std::uint32_t> table_;
    int unit_cap_log_ = 0;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> derived_coset_;
};

/// Basis {q(h - 1) : q in T, h in H \ {1}} of the left ideal Delta(G, H) = F_p G * Delta(H),
/// with T the lexicographically least representatives of the left cosets qH.
class DeltaBasis {
public:
    DeltaBasis(const GroupAlgebra& alg, const Subgroup& h);

    const Subgroup& subgroup() const { return h_; }
    const std::vector<std::size_t>& transversal() const { return reps_; }
    std::size_t dimension() const { return reps_.size() * (h_.order() - 1); }
    /// Basis vectors in the order (q, h) with q over the transversal, h over H \ {1} ascending.
    std::vector<AlgebraElement> vectors() const;
    /// x lies in Delta(G, H) iff its coefficient sum over every left coset qH vanishes.
    bool contains(const AlgebraElement& x) const;
    /// Coordinates over vectors() when x lies in the span.
    std::optional<FpVector> coordinates(const AlgebraElement& x) const;

private:
    const GroupAlgebra* alg_;
    Subgroup h_;
    std::vector<std::size_t> reps_;
    std::vector<std::size_t> coset_of_;  // element -> index into reps_
};

/// x is in [F_p G, F_p G] iff the coefficient sum over every conjugacy class vanishes.
bool lie_membership(const AlgebraElement& x);
/// Membership in [R, R] + pR; over F_p this is the same test.
inline bool lie_p_membership(const AlgebraElement& x) { return lie_membership(x); }
/// x lies in the two-sided ideal generated by [F_p G, F_p G], which is Delta(G, G').
bool lie_ideal_membership(const AlgebraElement& x);

struct FrobeniusSplit {
    AlgebraElement s;      ///< sum_g alpha_g g^p
    AlgebraElement delta;  ///< x^p - s
};

/// x^p = s + delta. Throws VerificationFailure if delta is not in [F_p G, F_p G], or, for
/// normalized units, if delta is not a combination of noncentral class sums with delta^p = 0.
FrobeniusSplit frobenius_split(const AlgebraElement& x);

/// Both sides of (a + b)^p = a^p + b^p + sum_{r=1}^{p-1} (1/p) binom(p, r) a^r b^{p-r} H'^
/// with H' = <[a, b]>. Throws std::invalid_argument when a and b commute.
struct AbpSides {
    AlgebraElement lhs, rhs;
};
AbpSides abp_sides(const GroupAlgebra& alg, std::size_t a, std::size_t b);
bool abp_check(const GroupAlgebra& alg, std::size_t a, std::size_t b);

struct ClassSumData {
    std::vector<std::vector<std::size_t>> noncentral_classes;
    std::vector<AlgebraElement> class_sums;  ///< one per noncentral class
    std::size_t t() const { return class_sums.size(); }
    /// |C| = p^t
    int c_order_log() const { return static_cast<int>(t()); }
};

/// Builds the class sums and checks the products of any two vanish, that supports are
/// disjoint, and that their span is an ideal of the center. Throws VerificationFailure.
ClassSumData class_sum_data(const GroupAlgebra& alg);
/// Class sums of all classes, ordered like conjugacy_classes().
std::vector<AlgebraElement> center_basis(const GroupAlgebra& alg);

/// True when x is an F_p-combination of noncentral class sums.
bool in_class_sum_span(const AlgebraElement& x);

struct CentralUnitSplit {
    AlgebraElement b;                 ///< in V(F_p ZG)
    std::vector<std::uint32_t> exps;  ///< exponent of (1 + C_i) per noncentral class
};

/// a = b * prod_i (1 + C_i)^{exps_i}, verified by multiplication. Throws
/// std::invalid_argument for non-central input or epsilon(a) != 1.
CentralUnitSplit central_unit_decompose(const GroupAlgebra& alg, const ClassSumData& cs, const AlgebraElement& a);
AlgebraElement central_unit_compose(const GroupAlgebra& alg, const ClassSumData& cs, const CentralUnitSplit& s);

/// u^{-1} v^{-1} u v - 1 lies in the ideal generated by Lie brackets.
bool gamma2_check(const GroupAlgebra& alg, const AlgebraElement& u, const AlgebraElement& v);

}  // namespace pgroup
