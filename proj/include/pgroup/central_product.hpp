#pragma once

#include <utility>
#include <vector>

#include "pgroup/pc_presentation.hpp"

namespace pgroup {

struct CentralProduct {
    PcPresentation presentation;
    /// Exponent vectors (unreduced) of the images of the generators of H and of K.
    std::vector<Exponents> h_images;
    std::vector<Exponents> k_images;

    GroupElement embed_h(const GroupElement& h) const;
    GroupElement embed_k(const GroupElement& k) const;
};

/// H x K modulo the central subgroup generated by the elements h * k^{-1}
/// for the identified pairs (h, k).
///
/// The central generators of both factors are re-presented through the Hermite
/// normal form of the relation lattice of the central block, so identified
/// generators disappear and the remaining ones get forward-referencing power
/// relations. K's generator names are primed when they clash with H's.
///
/// Throws ConstraintError for identified elements of unequal order or with
/// noncentral support, and OutOfClass when both factors are nonabelian but
/// their derived subgroups are not identified.
CentralProduct central_product(const PcPresentation& h, const PcPresentation& k,
                               const std::vector<std::pair<GroupElement, GroupElement>>& ident);

/// Hermite normal form (upper triangular, positive pivots, entries above each
/// pivot reduced into [0, pivot)) of a full-rank integer lattice given by rows.
/// Returns the square basis matrix.
std::vector<std::vector<std::int64_t>> hermite_normal_form(std::vector<std::vector<std::int64_t>> rows,
                                                           std::size_t cols);

}  // namespace pgroup
