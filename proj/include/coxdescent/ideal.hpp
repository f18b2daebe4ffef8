#pragma once

#include "coxdescent/multigraded.hpp"

#include <memory>
#include <vector>

namespace coxdescent {

/// A homogeneous ideal I of a multigraded ring R = k[x]/J, stored as a
/// generator list with a lazily computed reduced Gröbner basis of I + J in
/// k[x]. The basis is computed at most once per handle (copies share it)
/// and the computation is synchronized, so handles may be shared across
/// threads.
class Ideal {
public:
    /// Throws RingError for generators from another ring and
    /// InhomogeneousError for inhomogeneous generators.
    Ideal(MultigradedRingPtr ring, std::vector<Polynomial> gens);

    /// The ideal generated by the ring's irrelevant generators.
    static Ideal irrelevant(MultigradedRingPtr ring);

    const MultigradedRing& ring() const noexcept { return *ring_; }
    const MultigradedRingPtr& ring_ptr() const noexcept { return ring_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }

    /// Reduced Gröbner basis of I + J in k[x] (memoized).
    const std::vector<Polynomial>& groebner_basis() const;

    /// The Gröbner basis reported modulo J: elements outside J, minus those
    /// generated modulo J by the others (scanned in basis order). For
    /// polynomial rings this is groebner_basis().
    std::vector<Polynomial> reduced_basis() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool is_unit() const;
    /// True when I is zero in R, i.e. I + J = J.
    bool is_zero() const;

    /// I + other.
    Ideal operator+(const Ideal& other) const;

    /// Builds a handle whose Gröbner basis of I + J is already known.
    static Ideal from_groebner_basis(MultigradedRingPtr ring, std::vector<Polynomial> gb);

private:
    struct Cache;

    MultigradedRingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// True iff both ideals have the same reduced Gröbner basis. Throws
/// RingError when the rings differ.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// I ⊆ J.
bool ideal_contains(const Ideal& big, const Ideal& small);

/// (I : g^∞), computed as the elimination ideal of I + J + (1 - z g) in a
/// ring with one auxiliary variable z ordered first.
Ideal saturate_by_element(const Ideal& ideal, const Polynomial& g);

/// I ∩ K, the elimination ideal of s·I + (1 - s)·K.
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : G^∞) = ⋂_i (I : g_i^∞) over the generators of G. The single
/// saturations run in parallel with OpenMP and are intersected in
/// generator order, so the output does not depend on the thread count.
/// Throws IdealError when G is the zero ideal.
Ideal saturate(const Ideal& ideal, const Ideal& direction);

/// Single-threaded reference for saturate.
Ideal saturate_serial(const Ideal& ideal, const Ideal& direction);

/// Krull dimension of R/I from the leading monomials of the basis.
/// Throws IdealError for the unit ideal.
int dimension(const Ideal& ideal);

/// Krull dimension of R itself (number of variables minus the height of J).
int ring_dimension(const MultigradedRing& ring);

/// dim R - dim R/I. Throws IdealError for the unit ideal.
int height(const Ideal& ideal);

} // namespace coxdescent
