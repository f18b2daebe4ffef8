#pragma once

#include "coxdescent/ideal.hpp"

#include <span>
#include <vector>

namespace coxdescent {

/// Reduced row echelon basis of the k'-span of `polys`, with monomials as
/// columns in decreasing monomial order. Every element is monic and its
/// leading monomial occurs in no other element.
std::vector<Polynomial> echelon_basis(const PolyRingPtr& ring, std::span<const Polynomial> polys);

/// Remainder of `f` modulo the span of an echelon basis; zero iff f lies in
/// the span.
Polynomial reduce_by_echelon(const Polynomial& f, std::span<const Polynomial> echelon);

/// Coefficient of `m` in `f` (zero when absent).
FieldElement coefficient_of(const Polynomial& f, const Monomial& m);

/// Echelon basis of I_L: the span of m*f over the generators f of I and
/// monomials m of degree L - deg f. In a quotient ring elements are
/// represented by their normal forms modulo J.
std::vector<Polynomial> graded_piece_basis(const Ideal& ideal, const Multidegree& degree);

/// Echelon basis of (sum over L' < L of I_{L'} R)_L, i.e. the part of I_L
/// generated from strictly lower degrees.
std::vector<Polynomial> lower_piece_basis(const Ideal& ideal, const Multidegree& degree);

} // namespace coxdescent
