#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/linalg.hpp"

namespace pgroup {

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);

/// G^{p^l}: closure of all p^l-th powers.
Subgroup power_subgroup(const Group& g, int l);
/// Omega_l(G): closure of all elements of order dividing p^l.
Subgroup omega(const Group& g, int l);
/// The raw sets before closure, sorted.
std::vector<std::size_t> power_set(const Group& g, int l);
std::vector<std::size_t> omega_set(const Group& g, int l);

/// Frattini subgroup of S: closure of p-th powers and commutators of elements of S.
Subgroup frattini(const Subgroup& s);

std::uint64_t exponent(const Group& g);
/// element order -> number of elements of that order
std::map<std::uint64_t, std::size_t> order_histogram(const Group& g);

/// Orbits under conjugation, each sorted, listed by smallest element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g);

/// Discrete logarithm of x to base c when x lies in <c>; -1 otherwise.
std::int64_t derived_log(const Group& g, std::size_t x);

/// Abelian invariants of S as exponents n_1 >= n_2 >= ... (S = prod Z_{p^{n_i}}).
std::vector<int> abelian_invariants(const Subgroup& s);
/// Abelian invariants of S/K for a normal subgroup K of S with abelian quotient.
std::vector<int> quotient_invariants(const Subgroup& s, const Subgroup& k);

struct SymplecticForm {
    int prime = 0;
    std::vector<std::size_t> basis;  ///< coset representatives (group indices) of a basis of G/ZG
    FpMatrix matrix;                 ///< matrix[i][j] = f(basis_i, basis_j) with [x, y] = c^f
    std::size_t dimension() const { return basis.size(); }
    /// f(u, v) for coordinate vectors over the basis.
    std::uint32_t pair(const FpVector& u, const FpVector& v) const;
};

/// Commutator pairing on G/ZG over a greedily chosen basis of pc generator images.
/// Throws OutOfClass for abelian input or a degenerate pairing.
SymplecticForm symplectic_form(const Group& g);

struct DarbouxBasis {
    /// Coordinate vectors (x_i, y_i) over the form's basis.
    std::vector<std::pair<FpVector, FpVector>> pairs;
};

/// Symplectic Gram-Schmidt. Throws OutOfClass on a degenerate form.
DarbouxBasis symplectic_basis(const SymplecticForm& f);

/// Group element prod_i basis_i^{v_i}.
std::size_t lift(const Group& g, const SymplecticForm& f, const FpVector& v);

enum class CenterTag { A1 = 1, A2 = 2, A3 = 3, A4 = 4 };
std::string to_string(CenterTag t);

struct CenterClassification {
    CenterTag tag = CenterTag::A1;
    int n = 0;  ///< N = Z_{p^n} x Z_{p^m}
    int m = 0;
    std::vector<int> invariants;         ///< of ZG, nonincreasing
    std::vector<std::size_t> z;          ///< ZG = <z_1> x ... x <z_r>
    std::vector<int> z_orders;           ///< log_p |z_i|, nonincreasing
    std::string n_location;              ///< e.g. "<z1^p> x <z2>"
};

/// Matches ZG against the four possible profiles given the central subgroup N
/// and produces a decomposition locating N. Throws OutOfClass on no match.
CenterClassification classify_center(const Group& g, const Subgroup& n);

}  // namespace pgroup
