#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxdescent {

inline constexpr int kMaxExtensionDegree = 8;

/// An element of GF(p^d) in the power basis 1, t, ..., t^{d-1}.
/// Coordinates past the tower's degree are always zero, so structural
/// equality is field equality. `tower_id` ties the value to its tower.
struct FieldElement {
    std::array<std::uint32_t, kMaxExtensionDegree> coords{};
    std::uint64_t tower_id = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(p) together with an extension GF(p^d) = GF(p)[t]/(min_poly).
///
/// The Galois group of the extension is cyclic of order d, generated by
/// the Frobenius a -> a^p. All operations are pure; a tower is immutable
/// after construction and may be shared freely across threads.
class FieldTower {
public:
    /// GF(p^d) with the smallest irreducible monic polynomial of degree d,
    /// ordering candidates by their coefficient vector (c_{d-1}, ..., c_0).
    explicit FieldTower(std::uint32_t p, int d = 1);

    /// GF(p^d) with an explicit monic polynomial, coefficients low to high
    /// (length d+1, last entry 1). Throws FieldError if p is not prime or
    /// the polynomial is reducible.
    FieldTower(std::uint32_t p, std::vector<std::uint32_t> min_poly);

    /// Same, but the polynomial is given as text in `t`, e.g. "t^2+1".
    FieldTower(std::uint32_t p, int d, std::string_view min_poly_text);

    std::uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return d_; }
    /// Number of elements p^d.
    std::uint64_t size() const noexcept { return size_; }
    const std::vector<std::uint32_t>& min_poly() const noexcept { return min_poly_; }
    std::uint64_t id() const noexcept { return id_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of t. For d = 1 this is the root of the linear modulus (zero).
    FieldElement generator() const;
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_coords(std::span<const std::int64_t> coords) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Throws FieldError on division by zero.
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// a^{p^{i mod d}}; negative i counts backwards around the cycle.
    FieldElement frobenius(const FieldElement& a, std::int64_t i) const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;
    bool in_prime_field(const FieldElement& a) const;

    /// Element number `index` in the enumeration by base-p digits of the
    /// coordinates. Used by exhaustive checks on small fields.
    FieldElement element_at(std::uint64_t index) const;

    /// Parses polynomial text in `t` with integer coefficients, e.g. "2*t+1".
    FieldElement parse(std::string_view text) const;
    /// Canonical rendering: descending powers of t, residues in [0, p).
    std::string format(const FieldElement& a) const;
    /// The modulus rendered as text, e.g. "t^2+1".
    std::string format_min_poly() const;

    /// Throws FieldError unless `a` belongs to this tower.
    void check(const FieldElement& a) const;

    friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
        return a.p_ == b.p_ && a.min_poly_ == b.min_poly_;
    }

private:
    void init();
    FieldElement make() const;
    FieldElement frobenius_once(const FieldElement& a) const;

    std::uint32_t p_;
    int d_;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> min_poly_;
    std::uint64_t id_ = 0;
    // Column j holds the coordinates of t^{j p}.
    std::vector<std::array<std::uint32_t, kMaxExtensionDegree>> frobenius_matrix_;
};

bool is_prime(std::uint64_t n);

} // namespace coxdescent
