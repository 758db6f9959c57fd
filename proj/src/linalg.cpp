#include "pgroup/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "pgroup/modp.hpp"

namespace pgroup {

Echelon::Echelon(std::uint32_t prime, std::size_t dim, bool track)
    : p_(prime), dim_(dim), track_(track) {}

void Echelon::axpy(FpVector& v, const FpVector& row, std::uint32_t lambda) const {
    const std::uint32_t neg = p_ - lambda;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (row[i] != 0) v[i] = (v[i] + neg * row[i]) % p_;
}

FpVector Echelon::reduce_tracked(FpVector& v) const {
    FpVector lambdas(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t lambda = v[rows_[r].pivot];
        if (lambda == 0) continue;
        lambdas[r] = lambda;
        axpy(v, rows_[r].vec, lambda);
    }
    return lambdas;
}

FpVector Echelon::reduce(FpVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
    for (auto& x : v) x %= p_;
    reduce_tracked(v);
    return v;
}

bool Echelon::insert(const FpVector& v) { return !insert_or_relation(v).has_value(); }

std::optional<FpVector> Echelon::insert_or_relation(const FpVector& input) {
    if (input.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
    FpVector v = input;
    for (auto& x : v) x %= p_;
    const std::size_t id = inserted_++;
    const FpVector lambdas = reduce_tracked(v);

    FpVector comb;
    if (track_) {
        comb.assign(id + 1, 0);
        comb[id] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (lambdas[r] == 0) continue;
            const FpVector& rc = rows_[r].comb;
            const std::uint32_t neg = p_ - lambdas[r];
            for (std::size_t i = 0; i < rc.size(); ++i)
                if (rc[i] != 0) comb[i] = (comb[i] + neg * rc[i]) % p_;
        }
    }

    std::size_t pivot = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
        if (v[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == dim_) {
        return comb;
    }

    const auto scale = static_cast<std::uint32_t>(inv_mod(v[pivot], p_));
    for (auto& x : v) x = x * scale % p_;
    for (auto& x : comb) x = x * scale % p_;
    rows_.push_back(Row{std::move(v), std::move(comb), pivot});
    return std::nullopt;
}

bool Echelon::contains(const FpVector& v) const {
    const FpVector r = reduce(v);
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

std::optional<FpVector> Echelon::coordinates(const FpVector& input) const {
    if (!track_) throw std::logic_error("Echelon::coordinates requires tracking");
    if (input.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
    FpVector v = input;
    for (auto& x : v) x %= p_;
    const FpVector lambdas = reduce_tracked(v);
    for (auto x : v)
        if (x != 0) return std::nullopt;
    FpVector coords(inserted_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (lambdas[r] == 0) continue;
        const FpVector& rc = rows_[r].comb;
        for (std::size_t i = 0; i < rc.size(); ++i)
            coords[i] = (coords[i] + lambdas[r] * rc[i]) % p_;
    }
    return coords;
}

std::size_t rank_mod_p(const FpMatrix& rows, std::uint32_t p) {
    if (rows.empty()) return 0;
    Echelon e(p, rows.front().size());
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::uint32_t determinant_mod_p(FpMatrix m, std::uint32_t p) {
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = (p - det) % p;
        }
        const std::uint64_t pv = m[col][col] % p;
        det = det * pv % p;
        const auto inv = static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(pv), p));
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t f = m[r][col] % p * inv % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = static_cast<std::uint32_t>((m[r][c] + (p - f) * (m[col][c] % p)) % p);
        }
    }
    return static_cast<std::uint32_t>(det);
}

FpMatrix left_nullspace_mod_p(const FpMatrix& rows, std::uint32_t p) {
    FpMatrix out;
    if (rows.empty()) return out;
    Echelon e(p, rows.front().size(), true);
    for (const auto& r : rows) {
        auto rel = e.insert_or_relation(r);
        if (rel) {
            rel->resize(rows.size(), 0);
            out.push_back(std::move(*rel));
        }
    }
    return out;
}

}  // namespace pgroup
