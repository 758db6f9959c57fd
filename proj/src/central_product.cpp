#include "pgroup/central_product.hpp"

#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

namespace {

using Row = std::vector<std::int64_t>;

void subtract_multiple(Row& r, const Row& s, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= q * s[i];
        if (std::llabs(r[i]) > (std::int64_t{1} << 50)) throw std::overflow_error("hermite_normal_form: entry overflow");
    }
}

bool central_supported(const PcPresentation& g, const GroupElement& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !g.generator(i).central) return false;
    return true;
}

// Index of the generator equal to c when c is an independent generator.
std::optional<std::size_t> independent_derived(const PcPresentation& g) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto v = g.derived_vector()[i];
        if (v == 0) continue;
        if (v != 1 || at) return std::nullopt;
        at = i;
    }
    return at;
}

}  // namespace

std::vector<Row> hermite_normal_form(std::vector<Row> rows, std::size_t cols) {
    std::vector<Row> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        for (;;) {
            std::size_t best = rows.size();
            std::size_t nonzero = 0;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][j] == 0) continue;
                ++nonzero;
                if (best == rows.size() || std::llabs(rows[r][j]) < std::llabs(rows[best][j])) best = r;
            }
            if (nonzero == 0) throw std::invalid_argument("hermite_normal_form: lattice is not of full rank");
            if (nonzero == 1) {
                Row pivot = rows[best];
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                if (pivot[j] < 0)
                    for (auto& x : pivot) x = -x;
                basis.push_back(std::move(pivot));
                break;
            }
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != best && rows[r][j] != 0) subtract_multiple(rows[r], rows[best], rows[r][j] / rows[best][j]);
        }
    }
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < j; ++i) subtract_multiple(basis[i], basis[j], floor_div(basis[i][j], basis[j][j]));
    return basis;
}

GroupElement CentralProduct::embed_h(const GroupElement& h) const {
    Exponents v(presentation.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += h[i] * h_images[i][j];
    return presentation.reduce(std::move(v));
}

GroupElement CentralProduct::embed_k(const GroupElement& k) const {
    Exponents v(presentation.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += k[i] * k_images[i][j];
    return presentation.reduce(std::move(v));
}

CentralProduct central_product(const PcPresentation& h, const PcPresentation& k,
                               const std::vector<std::pair<GroupElement, GroupElement>>& ident) {
    if (h.prime() != k.prime()) throw ConstraintError("central product: factors over different primes");
    const int p = h.prime();
    for (const auto& [a, b] : ident) {
        if (a.size() != h.size() || b.size() != k.size())
            throw std::invalid_argument("central product: identified element does not belong to its factor");
        if (!central_supported(h, a) || !central_supported(k, b))
            throw ConstraintError("central product: identified elements must lie in the central generator block");
        if (h.order_log(a) != k.order_log(b))
            throw ConstraintError("central product: identified elements " + h.format(a) + " and " + k.format(b) +
                                  " have different orders");
    }

    // Central columns: ordinary central generators first, independent derived generators last.
    struct Col {
        int src;  // 0 = H, 1 = K
        std::size_t gen;
    };
    std::vector<Col> cols;
    const auto hd = independent_derived(h), kd = independent_derived(k);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h.generator(i).central && hd != i) cols.push_back({0, i});
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k.generator(i).central && kd != i) cols.push_back({1, i});
    if (hd) cols.push_back({0, *hd});
    if (kd) cols.push_back({1, *kd});
    const std::size_t ncols = cols.size();
    std::vector<std::size_t> hcol(h.size(), ncols), kcol(k.size(), ncols);
    for (std::size_t c = 0; c < ncols; ++c) (cols[c].src == 0 ? hcol : kcol)[cols[c].gen] = c;

    auto central_row = [&](const PcPresentation& g, const std::vector<std::size_t>& colmap, const Exponents& v,
                           Row& row, std::int64_t sign) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            if (colmap[j] == ncols)
                throw ConstraintError("central product: relation involves noncentral generator " + g.generator(j).name);
            row[colmap[j]] += sign * v[j];
        }
    };

    std::vector<Row> rows;
    for (std::size_t c = 0; c < ncols; ++c) {
        const PcPresentation& g = cols[c].src == 0 ? h : k;
        Row row(ncols, 0);
        row[c] = g.relative_order(cols[c].gen);
        central_row(g, cols[c].src == 0 ? hcol : kcol, g.power_relation(cols[c].gen), row, -1);
        rows.push_back(std::move(row));
    }
    for (const auto& [a, b] : ident) {
        Row row(ncols, 0);
        central_row(h, hcol, a.exponents(), row, 1);
        central_row(k, kcol, b.exponents(), row, -1);
        rows.push_back(std::move(row));
    }
    const std::vector<Row> hnf = hermite_normal_form(std::move(rows), ncols);

    // expr[c]: column c written over surviving columns (pivot > 1).
    std::vector<Row> expr(ncols, Row(ncols, 0));
    for (std::size_t c = ncols; c-- > 0;) {
        if (hnf[c][c] == 1) {
            for (std::size_t j = c + 1; j < ncols; ++j)
                if (hnf[c][j] != 0) subtract_multiple(expr[c], expr[j], hnf[c][j]);
        } else {
            expr[c][c] = 1;
        }
    }

    // New generator list.
    std::set<std::string> hnames;
    for (const auto& g : h.generators()) hnames.insert(g.name);
    auto kname = [&](std::string n) {
        while (hnames.count(n)) n += "'";
        return n;
    };
    std::vector<Generator> gens;
    std::vector<std::size_t> hpos(h.size()), kpos(k.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h.generator(i).central) {
            hpos[i] = gens.size();
            gens.push_back(h.generator(i));
        }
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!k.generator(i).central) {
            kpos[i] = gens.size();
            gens.push_back({kname(k.generator(i).name), k.generator(i).exponent, false});
        }
    std::vector<std::size_t> colpos(ncols, 0);
    for (std::size_t c = 0; c < ncols; ++c) {
        if (hnf[c][c] == 1) continue;
        const int e = exact_log(hnf[c][c], p);
        if (e < 1) throw std::logic_error("central product: pivot is not a power of p");
        colpos[c] = gens.size();
        const Generator& src = (cols[c].src == 0 ? h : k).generator(cols[c].gen);
        gens.push_back({cols[c].src == 0 ? src.name : kname(src.name), e, true});
    }
    const std::size_t n = gens.size();

    auto to_new = [&](const Row& colvec) {
        Exponents v(n, 0);
        for (std::size_t c = 0; c < ncols; ++c)
            if (colvec[c] != 0) {
                if (hnf[c][c] == 1) throw std::logic_error("central product: eliminated column survived");
                v[colpos[c]] += colvec[c];
            }
        return v;
    };
    auto central_image = [&](const std::vector<std::size_t>& colmap, const Exponents& v) {
        Row acc(ncols, 0);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) subtract_multiple(acc, expr[colmap[j]], -v[j]);
        return to_new(acc);
    };

    CentralProduct out;
    out.presentation = PcPresentation(p, gens);
    PcPresentation& g = out.presentation;

    for (std::size_t c = 0; c < ncols; ++c) {
        if (hnf[c][c] == 1) continue;
        Row acc(ncols, 0);
        for (std::size_t j = c + 1; j < ncols; ++j)
            if (hnf[c][j] != 0) subtract_multiple(acc, expr[j], hnf[c][j]);
        g.set_power(colpos[c], to_new(acc));
    }
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h.generator(i).central) g.set_power(hpos[i], central_image(hcol, h.power_relation(i)));
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!k.generator(i).central) g.set_power(kpos[i], central_image(kcol, k.power_relation(i)));

    out.h_images.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.generator(i).central) {
            out.h_images[i] = central_image(hcol, Exponents(h.generator_element(i).exponents()));
        } else {
            out.h_images[i].assign(n, 0);
            out.h_images[i][hpos[i]] = 1;
        }
    }
    out.k_images.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k.generator(i).central) {
            out.k_images[i] = central_image(kcol, Exponents(k.generator_element(i).exponents()));
        } else {
            out.k_images[i].assign(n, 0);
            out.k_images[i][kpos[i]] = 1;
        }
    }

    const GroupElement ch = g.reduce(central_image(hcol, h.derived_vector()));
    const GroupElement ck = g.reduce(central_image(kcol, k.derived_vector()));
    const GroupElement c = h.is_abelian() && !k.is_abelian() ? ck : ch;
    g.set_derived(c.exponents());

    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            if (!h.generator(i).central && !h.generator(j).central)
                g.set_commutator_entry(hpos[i], hpos[j], h.commutator_entry(i, j));

    if (!k.is_abelian()) {
        std::int64_t t = 0;
        for (std::int64_t s = 1; s < p && t == 0; ++s)
            if (g.power(c, s) == ck) t = s;
        if (t == 0)
            throw OutOfClass("central product: derived subgroups of the factors are not identified");
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < k.size(); ++j)
                if (!k.generator(i).central && !k.generator(j).central)
                    g.set_commutator_entry(kpos[i], kpos[j], mod(k.commutator_entry(i, j) * t, p));
    }
    return out;
}

}  // namespace pgroup
