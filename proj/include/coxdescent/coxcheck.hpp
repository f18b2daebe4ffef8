#pragma once

#include "coxdescent/ideal.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coxdescent {

enum class AmbientKind { product_projective, segre_p1p1, custom };

/// A Cox ring with its irrelevant ideal, plus how it was built.
class CoxAmbient {
public:
    /// Checks that the irrelevant ideal is proper and of positive height.
    CoxAmbient(MultigradedRingPtr ring, AmbientKind kind, std::vector<int> dims = {});

    const MultigradedRing& ring() const noexcept { return *ring_; }
    const MultigradedRingPtr& ring_ptr() const noexcept { return ring_; }
    AmbientKind kind() const noexcept { return kind_; }
    /// Factor dimensions for products of projective spaces.
    const std::vector<int>& dims() const noexcept { return dims_; }
    const Ideal& irrelevant() const noexcept { return irrelevant_; }

    /// dim Y = dim R - rank of the grading group.
    int variety_dimension() const;

    std::string label() const;

private:
    MultigradedRingPtr ring_;
    AmbientKind kind_;
    std::vector<int> dims_;
    Ideal irrelevant_;
};

/// Variable names x0.., y0.., z0.., ... per factor (x1_0 style past six
/// factors).
std::vector<std::string> default_product_names(std::span<const int> dims);

/// Cox ring of P^{n_1} x ... x P^{n_m}: variables x_{i,j}, the standard
/// block grading and irrelevant generators given by all products taking
/// one variable from each factor.
CoxAmbient make_product_projective(std::span<const int> dims, std::shared_ptr<const FieldTower> field,
                                   std::vector<std::string> names = {}, OrderKind order = OrderKind::grevlex);

/// The Segre quotient k[z00,z01,z10,z11]/(z00 z11 - z01 z10) with all
/// degrees 1 and irrelevant ideal (z00, z01, z10, z11).
CoxAmbient make_segre_p1p1(std::shared_ptr<const FieldTower> field);

/// (I + J : G^∞), reported modulo J: the ideal of the subscheme cut out by I.
Ideal subscheme_ideal(const CoxAmbient& ambient, const Ideal& ideal);

/// True iff height(ideal(fs)) = #fs in R. Each f must be homogeneous and
/// nonzero in R.
bool is_complete_intersection(const CoxAmbient& ambient, std::span<const Polynomial> fs);

struct StrictCiVerdict {
    enum class Kind { strict, not_strict, not_ci };

    Kind kind = Kind::not_ci;
    int height = 0;
    int expected = 0;
    /// For not_strict: the first basis element of the saturation that does
    /// not lie in ideal(fs).
    std::optional<Polynomial> witness;
};

/// Height test first, then saturation against the irrelevant ideal.
StrictCiVerdict is_strict_ci(const CoxAmbient& ambient, std::span<const Polynomial> fs);

} // namespace coxdescent
