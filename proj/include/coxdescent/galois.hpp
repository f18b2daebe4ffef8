#pragma once

#include "coxdescent/coxcheck.hpp"
#include "coxdescent/errors.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxdescent {

/// Raised by degree_orbits and descend. `kind` names the violated
/// precondition; `internal` means an assertion of the construction failed,
/// which signals inconsistent input.
class DescentError : public Error {
public:
    enum class Kind { not_invariant, not_strict, degree_mismatch, internal };

    DescentError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }
    /// NOT_INVARIANT, NOT_STRICT, DEGREE_MISMATCH or INTERNAL.
    std::string tag() const;

private:
    Kind kind_;
};

/// A ring automorphism over GF(p): coefficients go through a -> a^{p^e} and
/// x_j -> c_j x_{perm[j]}. It generates a finite cyclic group.
class SemilinearAction {
public:
    /// Checks that perm is a permutation, the scalars are nonzero, the map
    /// is compatible with the grading and preserves both the defining ideal
    /// and the irrelevant ideal. Scalars default to 1.
    SemilinearAction(MultigradedRingPtr ring, int frobenius_power, std::vector<int> perm,
                     std::vector<FieldElement> scalars = {});

    /// Frobenius on coefficients, identity on variables.
    static SemilinearAction frobenius(MultigradedRingPtr ring, int frobenius_power);

    const MultigradedRing& ring() const noexcept { return *ring_; }
    const MultigradedRingPtr& ring_ptr() const noexcept { return ring_; }
    int frobenius_power() const noexcept { return frobenius_power_; }
    const std::vector<int>& permutation() const noexcept { return perm_; }
    const std::vector<FieldElement>& scalars() const noexcept { return scalars_; }
    /// Smallest n >= 1 with sigma^n = id.
    long order() const noexcept { return order_; }
    /// Integer matrix P with P deg(x_j) = deg(x_{perm[j]}).
    const std::vector<std::vector<std::int64_t>>& degree_matrix() const noexcept { return degree_matrix_; }

    /// sigma^times(f); negative powers are taken modulo the order.
    Polynomial apply(const Polynomial& f, long times = 1) const;
    Multidegree apply_degree(const Multidegree& degree, long times = 1) const;
    /// Size of the orbit of a degree class.
    int degree_orbit_size(const Multidegree& degree) const;

private:
    MultigradedRingPtr ring_;
    int frobenius_power_;
    std::vector<int> perm_;
    std::vector<FieldElement> scalars_;
    std::vector<std::vector<std::int64_t>> degree_matrix_;
    long order_ = 1;
};

/// sigma(g) in I for every generator g.
bool is_invariant_ideal(const SemilinearAction& action, const Ideal& ideal);

/// One orbit of degree classes: positions [begin, end) of the reordered
/// generator list hold L_1..L_beta repeated gamma times.
struct DegreeOrbitBlock {
    int begin = 0;
    int end = 0;
    int beta = 0;
    int gamma = 0;
    std::vector<Multidegree> classes;
    /// powers[i] is the smallest k with sigma^k L_1 = L_i.
    std::vector<long> powers;
};

struct DegreeOrbitPartition {
    /// order[i] is the input index placed at position i.
    std::vector<int> order;
    std::vector<DegreeOrbitBlock> blocks;
    /// r_0 = 0 < r_1 < ... < r_m = s.
    std::vector<int> r_bounds;
    /// s_0 = 0 < s_1 < ... < s_n = s; each s-block is one period of an r-block.
    std::vector<int> s_bounds;
};

/// Groups the generators by degree orbit (blocks in order of first
/// appearance) so that inside each block the classes repeat with period
/// beta. Throws DescentError(degree_mismatch) when a class occurs with a
/// multiplicity that differs from the rest of its orbit.
DegreeOrbitPartition degree_orbits(const SemilinearAction& action, std::span<const Polynomial> fs);

/// Basis over the fixed field of the vectors of span(V) fixed by
/// tau = sigma^subgroup_index. Computed over GF(p) by restriction of
/// scalars; the GF(p) solutions are put in reduced echelon form (columns:
/// monomials in decreasing order, then power-basis coordinates) and kept
/// greedily while k'-independent. Throws DescentError(internal) if span(V)
/// is not tau-stable.
std::vector<Polynomial> fixed_space(const SemilinearAction& action, std::span<const Polynomial> V, long subgroup_index);

struct DescentResult {
    std::vector<Polynomial> new_gens;
    /// Boundaries of the orbit blocks of new_gens.
    std::vector<int> s_bounds;
    std::vector<int> r_bounds;
    /// ([H_i], [H'_i]) for the reordered input.
    std::vector<std::pair<Multidegree, Multidegree>> degree_log;
    DegreeOrbitPartition partition;
};

/// Rewrites a Galois-invariant strict complete intersection into generators
/// whose blocks are orbits of the action, keeping degrees and the ideal.
/// Stage one makes each generator fixed by the stabilizer of its degree;
/// stage two replaces each degree orbit block by the translates of its
/// first-degree generators unless it already is a union of orbits.
DescentResult descend(const CoxAmbient& ambient, const SemilinearAction& action, std::span<const Polynomial> fs);

/// Monic normalization of each element, sorted; for orbit comparison up to
/// scalars.
std::vector<Polynomial> monic_sorted(std::span<const Polynomial> fs);

} // namespace coxdescent
