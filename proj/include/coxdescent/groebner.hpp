#pragma once

#include "coxdescent/polynomial.hpp"

#include <span>
#include <vector>

namespace coxdescent {

/// Reduced Gröbner basis of the ideal generated by `gens` with respect to
/// the order of their (common) ring.
///
/// Buchberger's algorithm with the normal selection strategy (the pair with
/// the smallest lcm is processed first, ties broken by insertion order),
/// the product criterion and the chain criterion in Gebauer-Moller form.
/// The output is monic, interreduced and sorted by decreasing leading
/// monomial, hence canonical for the ideal and the order. The zero ideal
/// gives an empty basis; the unit ideal gives {1}.
std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens);

/// Remainder of f under full multivariate division by `basis`.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Krull dimension of k[x]/M for the monomial ideal M generated by
/// `monomials` in `num_vars` variables, via minimal vertex covers of the
/// supports. Returns -1 when M contains 1.
int monomial_ideal_dimension(std::span<const Monomial> monomials, int num_vars);

} // namespace coxdescent
