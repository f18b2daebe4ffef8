#pragma once

// Invariant strict complete intersections for descent tests: orbit
// generators are built first, then hidden by degree-preserving changes
// of generators.

#include "support.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace testsupport {

struct DescentCase {
    std::string label;
    CoxAmbient ambient;
    SemilinearAction action;
    std::vector<Polynomial> orbit_gens;  // before scrambling
    std::vector<Polynomial> gens;        // scrambled, same ideal
};

/// x_i <-> y_i composed with Frobenius on P^n x P^n.
inline std::pair<CoxAmbient, SemilinearAction> swap_setup(int n, std::uint32_t p, int d) {
    const std::vector<int> dims{n, n};
    CoxAmbient amb = make_product_projective(dims, gf(p, d));
    std::vector<int> perm;
    for (int j = 0; j <= n; ++j) perm.push_back(n + 1 + j);
    for (int j = 0; j <= n; ++j) perm.push_back(j);
    SemilinearAction a(amb.ring_ptr(), 1, perm);
    return {std::move(amb), std::move(a)};
}

/// x_j -> y_j -> z_j -> x_j composed with Frobenius on (P^1)^3.
inline std::pair<CoxAmbient, SemilinearAction> cyclic_setup(std::uint32_t p, int d) {
    const std::vector<int> dims{1, 1, 1};
    CoxAmbient amb = make_product_projective(dims, gf(p, d));
    SemilinearAction a(amb.ring_ptr(), 1, {2, 3, 4, 5, 0, 1});
    return {std::move(amb), std::move(a)};
}

/// Sum of the Galois orbit of f; zero is possible.
inline Polynomial trace(const SemilinearAction& a, const Polynomial& f) {
    Polynomial out(f.ring_ptr());
    for (long g = 0; g < a.order(); ++g) out += a.apply(f, g);
    return out;
}

inline Polynomial random_fixed(const SemilinearAction& a, const Multidegree& degree, std::mt19937_64& rng) {
    for (;;) {
        Polynomial f = trace(a, random_homogeneous(a.ring().base(), degree, rng));
        if (!f.is_zero()) return f;
    }
}

/// [f, a(f), a^2(f), ...] over the degree orbit of f.
inline std::vector<Polynomial> orbit_of(const SemilinearAction& a, const Polynomial& f) {
    std::vector<Polynomial> out{f};
    const int beta = a.degree_orbit_size(f.multidegree());
    for (int i = 1; i < beta; ++i) out.push_back(a.apply(f, i));
    return out;
}

/// Random invertible mixes inside each degree, then random multiples of
/// lower-degree generators, random nonzero scalars and a shuffle.
inline std::vector<Polynomial> scramble(const CoxAmbient& amb, std::vector<Polynomial> gens, std::mt19937_64& rng) {
    const FieldTower& k = amb.ring().field();
    const PolyRing& R = amb.ring().poly_ring();
    const std::size_t s = gens.size();
    std::vector<Multidegree> degs;
    for (const Polynomial& f : gens) degs.push_back(f.multidegree());

    // Each step adds a multiple of another generator, so the ideal is kept.
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (i != j && degs[i] == degs[j] && rng() % 2 == 0) gens[i] += gens[j].scaled(random_element(k, rng));
            if (i < j && degs[i] == degs[j]) gens[i] += gens[j].scaled(random_element(k, rng));
        }
    }
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j || degs[i] == degs[j] || !degree_leq(degs[j], degs[i], R)) continue;
            const Polynomial m = random_homogeneous(amb.ring().base(), degs[i] - degs[j], rng);
            gens[i] += m * gens[j];
        }
    }
    for (Polynomial& f : gens) f = f.scaled(random_nonzero(k, rng));
    std::shuffle(gens.begin(), gens.end(), rng);
    return gens;
}

/// Case `index` cycles through five shapes; each is retried until strict.
inline DescentCase make_descent_case(int index, std::mt19937_64& rng) {
    for (int attempt = 0;; ++attempt) {
        if (attempt == 200) throw std::runtime_error("no strict instance found");
        const int kind = index % 5;
        std::string label;
        std::vector<Polynomial> orbit;
        auto setup = kind == 4 ? cyclic_setup(2, 3) : swap_setup(2, 3, 2);
        const CoxAmbient& amb = setup.first;
        const SemilinearAction& a = setup.second;
        const PolyRingPtr& R = amb.ring().base();
        switch (kind) {
        case 0: {
            label = "P2xP2 orbit of a (1,2) form";
            orbit = orbit_of(a, random_homogeneous(R, {1, 2}, rng));
            break;
        }
        case 1: {
            label = "P2xP2 two fixed (1,1) forms";
            orbit = {random_fixed(a, {1, 1}, rng), random_fixed(a, {1, 1}, rng)};
            break;
        }
        case 2: {
            label = "P2xP2 fixed (1,1) and (2,2) forms";
            orbit = {random_fixed(a, {1, 1}, rng), random_fixed(a, {2, 2}, rng)};
            break;
        }
        case 3: {
            label = "P2xP2 four linear forms";
            const Polynomial l1 = random_homogeneous(R, {1, 0}, rng);
            const Polynomial l2 = random_homogeneous(R, {1, 0}, rng);
            orbit = orbit_of(a, l1);
            for (const Polynomial& f : orbit_of(a, l2)) orbit.push_back(f);
            break;
        }
        default: {
            label = "GF(8) (P1)^3 cyclic orbit";
            orbit = orbit_of(a, random_homogeneous(R, {1, 0, 0}, rng));
            break;
        }
        }
        if (is_strict_ci(amb, orbit).kind != StrictCiVerdict::Kind::strict) continue;
        std::vector<Polynomial> gens = scramble(amb, orbit, rng);
        return DescentCase{label, setup.first, setup.second, std::move(orbit), std::move(gens)};
    }
}

/// Every invariant a descent result must satisfy, as a list of failures.
inline std::vector<std::string> check_descent(const DescentCase& c, const DescentResult& r) {
    std::vector<std::string> problems;
    const Ideal before(c.ambient.ring_ptr(), c.gens), after(c.ambient.ring_ptr(), r.new_gens);
    if (!ideal_equal(before, after)) problems.push_back("ideal changed");
    if (!blocks_are_orbits(c.action, r.new_gens, r.s_bounds)) problems.push_back("blocks are not orbits");
    std::vector<Multidegree> din, dout;
    for (const Polynomial& f : c.gens) din.push_back(f.multidegree());
    for (const Polynomial& f : r.new_gens) dout.push_back(f.multidegree());
    if (r.degree_log.size() != dout.size()) problems.push_back("degree log length");
    for (std::size_t i = 0; i < r.degree_log.size() && i < dout.size(); ++i) {
        if (r.degree_log[i].first != r.degree_log[i].second || r.degree_log[i].second != dout[i]) problems.push_back("degree log entry");
    }
    std::sort(din.begin(), din.end());
    std::sort(dout.begin(), dout.end());
    if (din != dout) problems.push_back("degrees not preserved");
    if (r.s_bounds.empty() || r.s_bounds.back() != static_cast<int>(r.new_gens.size())) problems.push_back("bad s-bounds");
    return problems;
}

} // namespace testsupport
