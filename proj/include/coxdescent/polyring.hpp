#pragma once

#include "coxdescent/field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxdescent {

inline constexpr int kMaxVariables = 16;

/// Exponent tuple. Entries past the ring's variable count stay zero.
struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exp{};

    std::uint32_t total_degree() const noexcept {
        std::uint32_t s = 0;
        for (auto e : exp) s += e;
        return s;
    }
    bool is_one() const noexcept { return total_degree() == 0; }
    /// Bit i set iff variable i occurs.
    std::uint32_t support() const noexcept {
        std::uint32_t m = 0;
        for (int i = 0; i < kMaxVariables; ++i) {
            if (exp[i]) m |= 1u << i;
        }
        return m;
    }
    bool divides(const Monomial& other) const noexcept {
        for (int i = 0; i < kMaxVariables; ++i) {
            if (exp[i] > other.exp[i]) return false;
        }
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Throws RingError on exponent overflow.
Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

enum class OrderKind { grevlex, lex };

/// A monomial order. With `elimination_block = k > 0` the first k variables
/// form a block compared first (by grevlex); ties are broken by `kind` on
/// the remaining variables. This is the block-elimination(k) order.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int elimination_block = 0;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

using Multidegree = std::vector<std::int64_t>;

/// Polynomial ring over a finite field with named variables, an integer
/// grading matrix (one row per grading coordinate, one column per
/// variable) and a monomial order.
class PolyRing {
public:
    PolyRing(std::shared_ptr<const FieldTower> field, std::vector<std::string> names,
             std::vector<std::vector<std::int64_t>> grading, MonomialOrder order = {});

    int num_vars() const noexcept { return static_cast<int>(names_.size()); }
    int grading_rank() const noexcept { return static_cast<int>(grading_.size()); }
    const FieldTower& field() const noexcept { return *field_; }
    const std::shared_ptr<const FieldTower>& field_ptr() const noexcept { return field_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::vector<std::int64_t>>& grading() const noexcept { return grading_; }
    const MonomialOrder& order() const noexcept { return order_; }

    /// Index of a variable by name, or -1.
    int var_index(std::string_view name) const;

    /// Negative, zero or positive as a is smaller, equal or larger than b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    Multidegree degree(const Monomial& m) const;

    /// Integer weights, all strictly positive, that are an integer
    /// combination of the grading rows. Empty when none was found.
    const std::vector<std::int64_t>& positive_weights() const noexcept { return positive_weights_; }
    /// Coefficients c with positive_weights() = c . grading.
    const std::vector<std::int64_t>& positive_combination() const noexcept { return positive_combination_; }
    bool is_positively_graded() const noexcept { return !positive_weights_.empty(); }

    /// Copy of this ring with `aux` variables prepended, each of grading
    /// degree zero, ordered by the block-elimination order that eliminates
    /// exactly the new variables.
    std::shared_ptr<const PolyRing> with_auxiliary(const std::vector<std::string>& aux) const;

    /// Same variables and grading, different order.
    std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

    std::string format(const Monomial& m) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) noexcept;

private:
    std::shared_ptr<const FieldTower> field_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::int64_t>> grading_;
    MonomialOrder order_;
    std::vector<std::int64_t> positive_combination_;
    std::vector<std::int64_t> positive_weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// True when both pointers denote equal rings.
bool same_ring(const PolyRing& a, const PolyRing& b) noexcept;

} // namespace coxdescent
