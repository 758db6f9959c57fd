#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pgroup {

using FpVector = std::vector<std::uint32_t>;
using FpMatrix = std::vector<FpVector>;

/// Incrementally built row-echelon basis of a subspace of F_p^dim.
///
/// With tracking enabled every stored row remembers its expression in the
/// inserted vectors (numbered in insertion order, dependent ones included), so
/// membership tests can return coordinates and dependent insertions return the
/// linear relation they witness.
class Echelon {
public:
    Echelon(std::uint32_t prime, std::size_t dim, bool track = false);

    std::uint32_t prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

    /// Inserts v. Returns true if v was independent of the current span.
    bool insert(const FpVector& v);

    /// Inserts v. When v is dependent, returns the relation
    /// sum_i coeff_i * inserted_i = 0 with coeff on v equal to 1 (tracking only).
    std::optional<FpVector> insert_or_relation(const FpVector& v);

    /// Residue of v after elimination against the stored rows.
    FpVector reduce(FpVector v) const;

    bool contains(const FpVector& v) const;

    /// Coefficients of v over the inserted vectors, if v lies in the span (tracking only).
    std::optional<FpVector> coordinates(const FpVector& v) const;

private:
    struct Row {
        FpVector vec;
        FpVector comb;
        std::size_t pivot;
    };

    // Subtracts lambda * row from v (and from comb if given).
    void axpy(FpVector& v, const FpVector& row, std::uint32_t lambda) const;
    FpVector reduce_tracked(FpVector& v) const;

    std::uint32_t p_;
    std::size_t dim_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

/// Rank of a matrix over F_p.
std::size_t rank_mod_p(const FpMatrix& rows, std::uint32_t p);

/// Determinant of a square matrix over F_p.
std::uint32_t determinant_mod_p(FpMatrix m, std::uint32_t p);

/// Basis of { a : sum_i a_i * rows[i] = 0 }.
FpMatrix left_nullspace_mod_p(const FpMatrix& rows, std::uint32_t p);

}  // namespace pgroup
