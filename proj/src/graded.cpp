#include "coxdescent/graded.hpp"

#include "coxdescent/groebner.hpp"
#include "coxdescent/linalg.hpp"

#include <algorithm>

namespace coxdescent {

std::vector<Polynomial> echelon_basis(const PolyRingPtr& ring, std::span<const Polynomial> polys) {
    std::vector<Monomial> cols;
    for (const Polynomial& f : polys) {
        for (const Term& t : f.terms()) cols.push_back(t.mono);
    }
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return ring->greater(a, b); });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.empty()) return {};

    DenseMatrix m(ring->field(), polys.size(), cols.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const Term& t : polys[r].terms()) {
            auto it = std::lower_bound(cols.begin(), cols.end(), t.mono,
                                       [&](const Monomial& a, const Monomial& b) { return ring->greater(a, b); });
            m.at(r, static_cast<std::size_t>(it - cols.begin())) = t.coeff;
        }
    }
    row_reduce(m);
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!ring->field().is_zero(m.at(r, c))) terms.push_back({cols[c], m.at(r, c)});
        }
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return out;
}

FieldElement coefficient_of(const Polynomial& f, const Monomial& m) {
    for (const Term& t : f.terms()) {
        if (t.mono == m) return t.coeff;
    }
    return f.ring().field().zero();
}

Polynomial reduce_by_echelon(const Polynomial& f, std::span<const Polynomial> echelon) {
    Polynomial r = f;
    const FieldTower& k = f.ring().field();
    for (const Polynomial& b : echelon) {
        const FieldElement c = coefficient_of(r, b.leading_monomial());
        if (!k.is_zero(c)) r.sub_mul_term(c, Monomial{}, b);
    }
    return r;
}

namespace {

// Multiples m*f of the generators landing in degree `degree`, reduced
// modulo J. With `strict`, generators of degree exactly `degree` are skipped.
std::vector<Polynomial> multiples(const Ideal& ideal, const Multidegree& degree, bool strict) {
    const PolyRing& ring = ideal.ring().poly_ring();
    const auto& jgb = ideal.ring().defining_basis();
    std::vector<Polynomial> out;
    for (const Polynomial& f : ideal.gens()) {
        if (f.is_zero()) continue;
        const Multidegree fd = f.multidegree();
        if (strict && fd == degree) continue;
        for (const Monomial& m : monomials_of_degree(ring, degree - fd)) {
            Polynomial g = f.mul_term(m, ring.field().one());
            if (!jgb.empty()) g = reduce(g, jgb);
            if (!g.is_zero()) out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace

std::vector<Polynomial> graded_piece_basis(const Ideal& ideal, const Multidegree& degree) {
    return echelon_basis(ideal.ring().base(), multiples(ideal, degree, false));
}

std::vector<Polynomial> lower_piece_basis(const Ideal& ideal, const Multidegree& degree) {
    return echelon_basis(ideal.ring().base(), multiples(ideal, degree, true));
}

} // namespace coxdescent
