#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

struct Fingerprint {
    std::uint64_t order = 0;
    std::uint64_t exponent = 0;
    std::vector<int> abelianization;
    std::vector<int> center;
    std::size_t power_order = 0;   ///< |G^p|
    std::size_t omega1_order = 0;  ///< |Omega_1(G)|
    std::map<std::uint64_t, std::size_t> order_histogram;
    std::size_t class_count = 0;

    bool operator==(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const Group& g);

inline constexpr std::size_t kDefaultIsomorphismBound = 243;  // 3^5

/// Exhaustive search for an isomorphism G -> H: images of the pc generators of G
/// are chosen from last to first among elements of matching order and
/// centrality, checking every power and commutator relation and injectivity on
/// the tail subgroups as soon as they are defined. Throws BudgetExceeded when
/// either order exceeds `bound`.
bool is_isomorphic_bruteforce(const Group& g, const Group& h, std::size_t bound = kDefaultIsomorphismBound);

}  // namespace pgroup
