#pragma once

#include "coxdescent/polyring.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxdescent {

struct Term {
    Monomial mono;
    FieldElement coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Exact multivariate polynomial. Terms are kept sorted in decreasing
/// monomial order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    /// The zero polynomial of `ring`.
    explicit Polynomial(PolyRingPtr ring);

    /// Canonicalizes: sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);
    static Polynomial constant(PolyRingPtr ring, const FieldElement& c);
    static Polynomial variable(PolyRingPtr ring, int index);
    static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const FieldElement& c);
    /// Parses `term (('+'|'-') term)*` with variable names from the ring and
    /// field-element coefficients (integers, `t`, or parenthesized sums).
    static Polynomial parse(PolyRingPtr ring, std::string_view text);

    const PolyRing& ring() const noexcept { return *ring_; }
    const PolyRingPtr& ring_ptr() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Monomial& leading_monomial() const;
    const FieldElement& leading_coeff() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const FieldElement& c) const;
    Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
    Polynomial pow(unsigned n) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    /// this - c*m*g, the reduction step.
    void sub_mul_term(const FieldElement& c, const Monomial& m, const Polynomial& g);

    bool is_homogeneous() const;
    /// Throws InhomogeneousError naming two monomials of different degree,
    /// or IdealError for the zero polynomial.
    Multidegree multidegree() const;

    /// Re-expresses the polynomial in `target`, whose variables are this
    /// ring's variables shifted by `offset` positions (offset >= 0 embeds
    /// into a ring with auxiliary variables in front, offset < 0 projects
    /// back and requires the dropped variables to be absent).
    Polynomial shift_to(PolyRingPtr target, int offset) const;

    /// True when variable `index` occurs in some term.
    bool uses_variable(int index) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    Polynomial(PolyRingPtr ring, std::vector<Term> sorted_terms);
    void require_same_ring(const Polynomial& other) const;

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

/// Renders a multidegree as "(a,b,...)".
std::string format_degree(const Multidegree& d);

} // namespace coxdescent
