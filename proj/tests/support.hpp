#pragma once

// Random generators shared by the unit, property and acceptance tests.

#include "coxdescent/coxcheck.hpp"
#include "coxdescent/galois.hpp"

#include <random>
#include <span>
#include <vector>

namespace testsupport {

using namespace coxdescent;

inline std::shared_ptr<const FieldTower> gf(std::uint32_t p, int d = 1) { return std::make_shared<const FieldTower>(p, d); }

inline FieldElement random_element(const FieldTower& k, std::mt19937_64& rng) { return k.element_at(rng() % k.size()); }

inline FieldElement random_nonzero(const FieldTower& k, std::mt19937_64& rng) {
    return k.element_at(1 + rng() % (k.size() - 1));
}

/// Random polynomial of multidegree `degree` with every coefficient drawn
/// uniformly (zero allowed); retried until nonzero when the piece is.
inline Polynomial random_homogeneous(const PolyRingPtr& ring, const Multidegree& degree, std::mt19937_64& rng) {
    const auto monos = monomials_of_degree(*ring, degree);
    for (;;) {
        std::vector<Term> terms;
        for (const Monomial& m : monos) terms.push_back({m, random_element(ring->field(), rng)});
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero() || monos.empty()) return f;
    }
}

/// Random linear form in the variables of `vars`.
inline Polynomial random_linear(const PolyRingPtr& ring, std::span<const int> vars, std::mt19937_64& rng) {
    for (;;) {
        Polynomial f(ring);
        for (int v : vars) f += Polynomial::variable(ring, v).scaled(random_element(ring->field(), rng));
        if (!f.is_zero()) return f;
    }
}

/// Multidegree with entries in [0, bound], not all zero.
inline Multidegree random_degree(std::size_t rank, int bound, std::mt19937_64& rng) {
    for (;;) {
        Multidegree d(rank);
        bool nonzero = false;
        for (auto& x : d) {
            x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound + 1));
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return d;
    }
}

/// Random multihomogeneous regular sequence of length s with degrees in
/// the box [0,bound]^m, retried until the height test passes.
inline std::vector<Polynomial> random_regular_sequence(const CoxAmbient& amb, int s, int bound, std::mt19937_64& rng) {
    const PolyRingPtr& ring = amb.ring().base();
    for (;;) {
        std::vector<Polynomial> fs;
        for (int i = 0; i < s; ++i) {
            fs.push_back(random_homogeneous(ring, random_degree(static_cast<std::size_t>(amb.ring().rank()), bound, rng), rng));
        }
        if (is_complete_intersection(amb, fs)) return fs;
    }
}

/// True when the blocks of `gens` delimited by `bounds` are permuted, up to
/// nonzero scalars, by every power of the action.
inline bool blocks_are_orbits(const SemilinearAction& a, const std::vector<Polynomial>& gens, const std::vector<int>& bounds) {
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        std::vector<Polynomial> block(gens.begin() + bounds[b], gens.begin() + bounds[b + 1]);
        const auto want = monic_sorted(block);
        for (long g = 0; g < a.order(); ++g) {
            std::vector<Polynomial> image;
            for (const Polynomial& h : block) image.push_back(a.apply(h, g));
            if (monic_sorted(image) != want) return false;
        }
    }
    return true;
}

} // namespace testsupport
