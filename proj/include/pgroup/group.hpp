#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgroup/pc_presentation.hpp"

namespace pgroup {

inline constexpr std::size_t kDefaultGroupBudget = 6561;  // 3^8

/// A presentation together with the enumeration of its elements.
///
/// Elements are addressed by their mixed-radix index: the normal form
/// (a_0, ..., a_{N-1}) maps to sum_i a_i * prod_{j>i} p^{e_j}, so the
/// identity has index 0 and indices follow lexicographic order of normal forms.
class Group {
public:
    explicit Group(PcPresentation pres, std::size_t budget = kDefaultGroupBudget);

    const PcPresentation& presentation() const { return pres_; }
    int prime() const { return pres_.prime(); }
    std::size_t order() const { return order_; }
    int order_log() const { return pres_.order_log(); }

    std::size_t index(const GroupElement& g) const;
    const GroupElement& element(std::size_t idx) const { return elems_.at(idx); }
    const std::vector<GroupElement>& elements() const { return elems_; }

    static constexpr std::size_t identity() { return 0; }
    std::size_t generator(std::size_t i) const { return gen_idx_.at(i); }
    std::size_t derived() const { return derived_idx_; }

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    std::size_t pow(std::size_t a, std::int64_t n) const;
    /// a^p
    std::size_t pth_power(std::size_t a) const { return ppow_[a]; }
    /// a^{p^l}
    std::size_t ppower(std::size_t a, int l) const;
    /// log_p of the order of a.
    int order_log(std::size_t a) const { return olog_[a]; }
    std::size_t commutator(std::size_t a, std::size_t b) const;
    std::size_t conjugate(std::size_t a, std::size_t by) const;  ///< by^{-1} a by
    bool is_central(std::size_t a) const;

private:
    PcPresentation pres_;
    std::size_t order_ = 0;
    std::vector<std::size_t> weight_;
    std::vector<GroupElement> elems_;
    std::vector<std::size_t> gen_idx_;
    std::size_t derived_idx_ = 0;
    std::vector<std::uint32_t> table_;  // full product table, only for small groups
    std::vector<std::size_t> inv_;
    std::vector<std::size_t> ppow_;
    std::vector<int> olog_;
};

/// Subgroup of an enumerated group, stored as a sorted element list plus a membership bitmap.
/// The parent group must outlive the subgroup.
class Subgroup {
public:
    /// Closure of the given elements.
    static Subgroup generated(const Group& g, const std::vector<std::size_t>& gens);
    /// Wraps an element set already known to be a subgroup; throws if it is not closed.
    static Subgroup from_elements(const Group& g, std::vector<std::size_t> elems);
    static Subgroup whole(const Group& g);
    static Subgroup trivial(const Group& g);

    const Group& parent() const { return *parent_; }
    const std::vector<std::size_t>& generators() const { return gens_; }
    const std::vector<std::size_t>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    int order_log() const;
    bool contains(std::size_t idx) const { return member_[idx]; }
    bool is_abelian() const;
    bool is_subset_of(const Subgroup& other) const;

    bool operator==(const Subgroup& other) const { return elems_ == other.elems_; }

private:
    Subgroup(const Group& g, std::vector<std::size_t> gens, std::vector<std::size_t> elems);

    const Group* parent_;
    std::vector<std::size_t> gens_;
    std::vector<std::size_t> elems_;
    std::vector<bool> member_;
};

/// True when the index set contains the identity and is closed under products.
bool is_subgroup_set(const Group& g, const std::vector<std::size_t>& elems);

}  // namespace pgroup
