#pragma once

#include "coxdescent/polynomial.hpp"

#include <memory>
#include <vector>

namespace coxdescent {

/// A multigraded ring R = k[x]/J together with homogeneous irrelevant
/// generators g_1..g_m. The grading must be positive: some integer row
/// combination gives every variable a strictly positive weight, so every
/// graded piece is finite-dimensional.
class MultigradedRing {
public:
    /// Throws RingError when the grading is not positive, and
    /// InhomogeneousError when a defining or irrelevant generator is not
    /// homogeneous.
    MultigradedRing(PolyRingPtr base, std::vector<Polynomial> defining_ideal, std::vector<Polynomial> irrelevant_gens);

    const PolyRingPtr& base() const noexcept { return base_; }
    const PolyRing& poly_ring() const noexcept { return *base_; }
    const FieldTower& field() const noexcept { return base_->field(); }
    int num_vars() const noexcept { return base_->num_vars(); }
    int rank() const noexcept { return base_->grading_rank(); }
    const std::vector<Polynomial>& defining_ideal() const noexcept { return defining_; }
    const std::vector<Polynomial>& irrelevant_gens() const noexcept { return irrelevant_; }
    bool is_quotient() const noexcept { return !defining_gb_.empty(); }
    /// Reduced Gröbner basis of J.
    const std::vector<Polynomial>& defining_basis() const noexcept { return defining_gb_; }

    Polynomial parse(std::string_view text) const { return Polynomial::parse(base_, text); }
    Polynomial var(std::string_view name) const;

private:
    PolyRingPtr base_;
    std::vector<Polynomial> defining_;
    std::vector<Polynomial> irrelevant_;
    std::vector<Polynomial> defining_gb_;
};

using MultigradedRingPtr = std::shared_ptr<const MultigradedRing>;

/// All monomials of multidegree `degree`, in decreasing monomial order.
/// Empty exactly when the class is not effective.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, const Multidegree& degree);

/// True iff some monomial has multidegree `degree`.
bool is_effective(const PolyRing& ring, const Multidegree& degree);

/// lhs <= rhs iff rhs - lhs is effective.
bool degree_leq(const Multidegree& lhs, const Multidegree& rhs, const PolyRing& ring);

Multidegree operator+(const Multidegree& a, const Multidegree& b);
Multidegree operator-(const Multidegree& a, const Multidegree& b);

} // namespace coxdescent
