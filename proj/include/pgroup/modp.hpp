#pragma once

#include <cstdint>
#include <stdexcept>

namespace pgroup {

/// Residue of `x` modulo `m` in [0, m).
constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

/// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) {
    return (x - mod(x, m)) / m;
}

constexpr std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

constexpr bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Inverse of a nonzero residue modulo the prime p (Fermat).
constexpr std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    std::int64_t r = 1, b = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

/// log_p(n) for an exact power of p; -1 otherwise.
constexpr int exact_log(std::int64_t n, std::int64_t p) {
    int l = 0;
    while (n > 1) {
        if (n % p != 0) return -1;
        n /= p;
        ++l;
    }
    return n == 1 ? l : -1;
}

/// Binomial coefficient, exact for the small arguments used here.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace pgroup
