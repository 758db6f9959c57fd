/**
 * @file pc_presentation.hpp
 * @brief Power-commutator presentations of p-groups of class at most 2 whose
 *        derived subgroup is central of order p.
 *
 * A presentation lists generators g_0, ..., g_{N-1} with relative orders
 * p^{e_i}. Every group element has a unique normal form
 *
 *     g_0^{a_0} g_1^{a_1} ... g_{N-1}^{a_{N-1}},   0 <= a_i < p^{e_i},
 *
 * and the relations are
 *
 *     g_i^{p^{e_i}} = w_i          (w_i supported on central generators after g_i)
 *     [g_i, g_j]    = c^{f(i,j)}   (f antisymmetric over Z/p, zero on central generators)
 *
 * where c is a fixed central element of order p given as an exponent vector
 * over the central generators. Commutators are [a, b] = a^{-1} b^{-1} a b.
 *
 * Noncentral generators come first, then central generators; c is either the
 * last generator or a power of one of the central generators.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgroup {

using Exponents = std::vector<std::int64_t>;

struct Generator {
    std::string name;
    int exponent = 1;  ///< relative order is p^exponent
    bool central = false;
};

/// Normal-form exponent vector. Only meaningful next to the presentation that produced it.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(Exponents exps) : exps_(std::move(exps)) {}

    const Exponents& exponents() const { return exps_; }
    std::int64_t operator[](std::size_t i) const { return exps_[i]; }
    std::size_t size() const { return exps_.size(); }
    bool is_identity() const {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    auto operator<=>(const GroupElement&) const = default;

private:
    Exponents exps_;
};

/// A word: (generator index, integer exponent) letters multiplied left to right.
using Word = std::vector<std::pair<std::size_t, std::int64_t>>;

struct ConsistencyReport {
    bool ok = true;
    std::string witness;  ///< first violated relation instance when !ok
    explicit operator bool() const { return ok; }
};

class PcPresentation {
public:
    PcPresentation() = default;
    PcPresentation(int prime, std::vector<Generator> gens);

    // -- construction -------------------------------------------------------

    /// g_i^{p^{e_i}} = w (full-length exponent vector).
    void set_power(std::size_t i, Exponents w);
    /// [g_i, g_j] = c^value, and the antisymmetric entry for [g_j, g_i].
    void set_commutator(std::size_t i, std::size_t j, std::int64_t value);
    /// Writes a single table entry without its antisymmetric partner.
    void set_commutator_entry(std::size_t i, std::size_t j, std::int64_t value);
    /// The derived generator c as an exponent vector.
    void set_derived(Exponents c);
    void rename(std::size_t i, std::string name) { gens_.at(i).name = std::move(name); }

    // -- inspection ----------------------------------------------------------

    int prime() const { return prime_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    std::int64_t relative_order(std::size_t i) const { return rel_order_.at(i); }
    const Exponents& power_relation(std::size_t i) const { return power_.at(i); }
    std::int64_t commutator_entry(std::size_t i, std::size_t j) const { return comm_[i][j]; }
    const Exponents& derived_vector() const { return derived_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t noncentral_count() const;

    /// Product of the relative orders, i.e. the group order for a consistent presentation.
    std::uint64_t order() const;
    int order_log() const;

    /// True when the commutator table is identically zero.
    bool is_abelian() const;

    // -- arithmetic -------------------------------------------------------------

    GroupElement identity() const { return GroupElement(Exponents(size(), 0)); }
    GroupElement generator_element(std::size_t i) const;
    GroupElement derived_element() const;

    /// Normal form of g_0^{v_0} ... g_{N-1}^{v_{N-1}} for arbitrary integers v_i.
    GroupElement reduce(Exponents v) const;
    GroupElement normalize(const Word& word) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, std::int64_t n) const;
    GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
    bool commutes(const GroupElement& a, const GroupElement& b) const;

    /// log_p of the order of a.
    int order_log(const GroupElement& a) const;

    /// Checks structural constraints and the group axioms on generator triples.
    ConsistencyReport consistency_check() const;

    std::string format(const GroupElement& a) const;

private:
    void check_element(const GroupElement& a) const;

    int prime_ = 0;
    std::vector<Generator> gens_;
    std::vector<std::int64_t> rel_order_;
    std::vector<Exponents> power_;
    std::vector<std::vector<std::int64_t>> comm_;
    Exponents derived_;
};

}  // namespace pgroup
