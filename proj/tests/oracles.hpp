#pragma once

// Brute-force reference computations. They avoid the library's Gröbner,
// linear-algebra and monomial-enumeration code so that agreement with the
// engine is meaningful.

#include "coxdescent/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using namespace coxdescent;

/// Rank of a matrix over GF(p) by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    auto inv = [p](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::uint64_t s = inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = x * s % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = (rows[r][j] + (p - f) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

/// Every exponent vector whose multidegree is `degree`, found by scanning
/// all vectors with entries up to `max_exp`.
inline std::vector<Monomial> brute_monomials(const PolyRing& ring, const Multidegree& degree, int max_exp) {
    std::vector<Monomial> out;
    const int n = ring.num_vars();
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (;;) {
        Multidegree d(static_cast<std::size_t>(ring.grading_rank()), 0);
        for (int i = 0; i < ring.grading_rank(); ++i) {
            for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i)] += ring.grading()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(j)];
        }
        if (d == degree) {
            Monomial m;
            for (int j = 0; j < n; ++j) m.exp[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(j)]);
            out.push_back(m);
        }
        int j = 0;
        while (j < n && e[static_cast<std::size_t>(j)] == max_exp) e[static_cast<std::size_t>(j++)] = 0;
        if (j == n) break;
        ++e[static_cast<std::size_t>(j)];
    }
    return out;
}

/// Coefficient rows of `polys` over a prime field, one column per monomial.
inline std::vector<std::vector<std::uint64_t>> coefficient_rows(const std::vector<Polynomial>& polys) {
    std::map<std::vector<std::uint16_t>, std::size_t> cols;
    for (const Polynomial& f : polys) {
        for (const Term& t : f.terms()) cols.emplace(std::vector<std::uint16_t>(t.mono.exp.begin(), t.mono.exp.end()), 0);
    }
    std::size_t i = 0;
    for (auto& [k, v] : cols) v = i++;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const Polynomial& f : polys) {
        std::vector<std::uint64_t> row(cols.size(), 0);
        for (const Term& t : f.terms()) {
            row[cols[std::vector<std::uint16_t>(t.mono.exp.begin(), t.mono.exp.end())]] = t.coeff.coords[0];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Spanning set of I_L: m*g for generators g and monomials m with
/// deg(m*g) = L (prime fields, homogeneous generators).
inline std::vector<Polynomial> graded_span(const std::vector<Polynomial>& gens, const Multidegree& degree, int max_exp) {
    std::vector<Polynomial> out;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Multidegree rest = degree;
        const Multidegree gd = g.multidegree();
        bool ok = true;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            rest[i] -= gd[i];
            ok = ok && rest[i] >= 0;
        }
        if (!ok) continue;
        for (const Monomial& m : brute_monomials(g.ring(), rest, max_exp)) {
            out.push_back(g.mul_term(m, g.ring().field().one()));
        }
    }
    return out;
}

inline std::size_t span_rank(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return 0;
    return rank_mod_p(coefficient_rows(polys), polys.front().ring().field().characteristic());
}

/// f in span(polys), decided by comparing ranks.
inline bool in_span(const Polynomial& f, std::vector<Polynomial> polys) {
    const std::size_t before = span_rank(polys);
    polys.push_back(f);
    return span_rank(polys) == before;
}

/// Krull dimension of k[x]/(monomials) by trying every variable subset.
inline int subset_dimension(const std::vector<Monomial>& monos, int n) {
    int best = -1;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (const Monomial& m : monos) {
            if ((m.support() & ~s) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace oracle
