#include "coxdescent/groebner.hpp"

#include "coxdescent/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace coxdescent {

namespace {

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
    for (const Polynomial& g : basis) {
        if (g.leading_monomial().divides(m)) return &g;
    }
    return nullptr;
}

// Reducer lookup over a subset of a store given by indices.
const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& store,
                               const std::vector<std::size_t>& active) {
    for (std::size_t idx : active) {
        if (store[idx].leading_monomial().divides(m)) return &store[idx];
    }
    return nullptr;
}

template <class Lookup>
Polynomial full_reduce(Polynomial f, Lookup&& lookup) {
    const PolyRing& R = f.ring();
    const FieldTower& F = R.field();
    std::vector<Term> rem;
    while (!f.is_zero()) {
        const Term lt = f.terms().front();
        if (const Polynomial* g = lookup(lt.mono)) {
            const FieldElement c = F.div(lt.coeff, g->leading_coeff());
            f.sub_mul_term(c, lt.mono / g->leading_monomial(), *g);
        } else {
            rem.push_back(lt);
            // Drop the leading term.
            f.sub_mul_term(F.one(), Monomial{}, Polynomial::monomial(f.ring_ptr(), lt.mono, lt.coeff));
        }
    }
    return Polynomial::from_terms(f.ring_ptr(), std::move(rem));
}

} // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
    for (const Polynomial& g : basis) {
        if (!same_ring(g.ring(), f.ring())) throw RingError("reduction across different rings");
    }
    return full_reduce(f, [&](const Monomial& m) { return find_reducer(m, basis); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const FieldTower& F = f.ring().field();
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s = f.mul_term(l / f.leading_monomial(), F.inv(f.leading_coeff()));
    s.sub_mul_term(F.inv(g.leading_coeff()), l / g.leading_monomial(), g);
    return s;
}

std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const Polynomial& g : gens) {
        if (!input.empty() && !same_ring(input.front().ring(), g.ring())) throw RingError("generators from different rings");
        if (!g.is_zero()) input.push_back(g.monic());
    }
    if (input.empty()) return {};
    const PolyRingPtr ring = input.front().ring_ptr();
    const PolyRing& R = *ring;
    for (const Polynomial& g : input) {
        if (g.is_constant()) return {Polynomial::constant(ring, R.field().one())};
    }

    std::vector<Polynomial> store;
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;

    // Gebauer-Moller update for a new basis element `h` (index in store).
    auto update = [&](std::size_t h) {
        const Monomial& lh = store[h].leading_monomial();
        std::vector<Pair> cand;
        for (std::size_t g : active) cand.push_back({g, h, lcm(store[g].leading_monomial(), lh)});
        // Chain criterion among the new pairs: drop (g1,h) when another new
        // pair's lcm properly divides it, keep one of equal lcms.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const bool disjoint = coprime(store[cand[a].i].leading_monomial(), lh);
            bool redundant = false;
            if (!disjoint) {
                for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
                    if (a == b) continue;
                    if (!cand[b].lcm.divides(cand[a].lcm)) continue;
                    // Equal lcms: keep one, preferring a coprime partner.
                    redundant = !(cand[b].lcm == cand[a].lcm) || b < a ||
                                coprime(store[cand[b].i].leading_monomial(), lh);
                }
            }
            if (!redundant) kept.push_back(cand[a]);
        }
        // Product criterion: coprime leading monomials need no S-pair, but
        // they still shadow pairs with the same lcm above.
        std::vector<Pair> fresh;
        for (const Pair& p : kept) {
            if (!coprime(store[p.i].leading_monomial(), lh)) fresh.push_back(p);
        }
        // Old pairs whose lcm is divisible by lm(h) with distinct lcms to h
        // are redundant.
        std::vector<Pair> old;
        for (const Pair& p : pairs) {
            const bool divisible = lh.divides(p.lcm);
            const Monomial li = lcm(store[p.i].leading_monomial(), lh);
            const Monomial lj = lcm(store[p.j].leading_monomial(), lh);
            if (!divisible || li == p.lcm || lj == p.lcm) old.push_back(p);
        }
        pairs = std::move(old);
        pairs.insert(pairs.end(), fresh.begin(), fresh.end());
        std::vector<std::size_t> next;
        for (std::size_t g : active) {
            if (!lh.divides(store[g].leading_monomial())) next.push_back(g);
        }
        next.push_back(h);
        active = std::move(next);
    };

    auto lookup = [&](const Monomial& m) { return find_reducer(m, store, active); };

    for (Polynomial& g : input) {
        Polynomial r = full_reduce(g, lookup);
        if (r.is_zero()) continue;
        if (r.is_constant()) return {Polynomial::constant(ring, R.field().one())};
        store.push_back(r.monic());
        update(store.size() - 1);
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const int c = R.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0) best = k;
        }
        const Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Polynomial r = full_reduce(s_polynomial(store[p.i], store[p.j]), lookup);
        if (r.is_zero()) continue;
        if (r.is_constant()) return {Polynomial::constant(ring, R.field().one())};
        store.push_back(r.monic());
        update(store.size() - 1);
    }

    // Minimal basis, then interreduce tails.
    std::vector<Polynomial> minimal;
    for (std::size_t a : active) {
        bool drop = false;
        for (std::size_t b : active) {
            if (a != b && store[b].leading_monomial().divides(store[a].leading_monomial()) &&
                !(store[b].leading_monomial() == store[a].leading_monomial() && b > a)) {
                drop = true;
                break;
            }
        }
        if (!drop) minimal.push_back(store[a]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t l = 0; l < minimal.size(); ++l) {
            if (l != k) others.push_back(minimal[l]);
        }
        const Polynomial& g = minimal[k];
        Polynomial head = Polynomial::monomial(ring, g.leading_monomial(), g.leading_coeff());
        Polynomial tail = g - head;
        reduced.push_back((head + reduce(tail, others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return R.greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    }
    return true;
}

namespace {

// Minimum number of variables meeting every support mask.
int min_cover(std::vector<std::uint32_t> masks, std::uint32_t chosen, int best_so_far, int depth) {
    if (depth >= best_so_far) return best_so_far;
    std::uint32_t pick = 0;
    for (std::uint32_t m : masks) {
        if ((m & chosen) == 0) {
            // Branch on the uncovered mask with the fewest variables.
            if (pick == 0 || std::popcount(m) < std::popcount(pick)) pick = m;
        }
    }
    if (pick == 0) return depth;
    int best = best_so_far;
    for (std::uint32_t rest = pick; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        best = std::min(best, min_cover(masks, chosen | bit, best, depth + 1));
    }
    return best;
}

} // namespace

int monomial_ideal_dimension(std::span<const Monomial> monomials, int num_vars) {
    std::vector<std::uint32_t> masks;
    for (const Monomial& m : monomials) {
        const std::uint32_t s = m.support();
        if (s == 0) return -1;
        masks.push_back(s);
    }
    if (masks.empty()) return num_vars;
    return num_vars - min_cover(masks, 0, num_vars + 1, 0);
}

} // namespace coxdescent
