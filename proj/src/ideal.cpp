#include "coxdescent/ideal.hpp"

#include "coxdescent/errors.hpp"
#include "coxdescent/groebner.hpp"

#include <exception>
#include <mutex>
#include <optional>

namespace coxdescent {

struct Ideal::Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
};

namespace {

void require_same(const Ideal& a, const Ideal& b) {
    if (&a.ring() != &b.ring() && !same_ring(a.ring().poly_ring(), b.ring().poly_ring())) {
        throw RingError("ideals belong to different rings");
    }
}

std::string fresh_name(const PolyRing& ring, std::string base) {
    while (ring.var_index(base) >= 0) base += "_";
    return base;
}

// Generators of I + J lifted into `aux` (one extra leading variable).
std::vector<Polynomial> lifted_gens(const Ideal& ideal, const PolyRingPtr& aux) {
    std::vector<Polynomial> out;
    for (const Polynomial& g : ideal.gens()) out.push_back(g.shift_to(aux, 1));
    for (const Polynomial& g : ideal.ring().defining_basis()) out.push_back(g.shift_to(aux, 1));
    return out;
}

// Drops basis elements that involve variable 0 and maps the rest down.
std::vector<Polynomial> eliminate_first(const std::vector<Polynomial>& gb, const PolyRingPtr& base) {
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb) {
        if (!g.uses_variable(0)) out.push_back(g.shift_to(base, -1));
    }
    return out;
}

} // namespace

Ideal::Ideal(MultigradedRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw RingError("null ring");
    for (const Polynomial& g : gens_) {
        if (!same_ring(g.ring(), ring_->poly_ring())) throw RingError("generator from a different ring");
        if (!g.is_zero()) (void)g.multidegree();
    }
}

Ideal Ideal::irrelevant(MultigradedRingPtr ring) {
    auto gens = ring->irrelevant_gens();
    return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::from_groebner_basis(MultigradedRingPtr ring, std::vector<Polynomial> gb) {
    std::vector<Polynomial> gens;
    const auto& jgb = ring->defining_basis();
    for (const Polynomial& g : gb) {
        if (jgb.empty() || !reduce(g, jgb).is_zero()) gens.push_back(g);
    }
    Ideal out(std::move(ring), std::move(gens));
    std::call_once(out.cache_->once, [&] { out.cache_->gb = std::move(gb); });
    return out;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    std::call_once(cache_->once, [&] {
        std::vector<Polynomial> all = gens_;
        const auto& jgb = ring_->defining_basis();
        all.insert(all.end(), jgb.begin(), jgb.end());
        cache_->gb = reduced_groebner_basis(all);
    });
    return cache_->gb;
}

std::vector<Polynomial> Ideal::reduced_basis() const {
    const auto& gb = groebner_basis();
    const auto& jgb = ring_->defining_basis();
    if (jgb.empty()) return gb;
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb) {
        if (!reduce(g, jgb).is_zero()) out.push_back(g);
    }
    // Modulo J some basis elements become redundant; drop them greedily in
    // basis order.
    for (std::size_t i = 0; i < out.size();) {
        std::vector<Polynomial> rest = jgb;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (j != i) rest.push_back(out[j]);
        }
        if (reduce(out[i], reduced_groebner_basis(rest)).is_zero()) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_->poly_ring())) throw RingError("polynomial from a different ring");
    return reduce(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis();
    return !gb.empty() && gb.front().is_constant();
}

bool Ideal::is_zero() const { return groebner_basis().size() == ring_->defining_basis().size(); }

Ideal Ideal::operator+(const Ideal& other) const {
    require_same(*this, other);
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_same(a, b);
    return a.groebner_basis() == b.groebner_basis();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    require_same(big, small);
    for (const Polynomial& g : small.gens()) {
        if (!big.contains(g)) return false;
    }
    return true;
}

Ideal saturate_by_element(const Ideal& ideal, const Polynomial& g) {
    const MultigradedRingPtr& ring = ideal.ring_ptr();
    const PolyRingPtr& base = ring->base();
    if (!same_ring(g.ring(), *base)) throw RingError("direction from a different ring");
    if (reduce(g, ring->defining_basis()).is_zero()) throw IdealError("cannot saturate by zero");
    if (ideal.is_unit()) return ideal;
    const PolyRingPtr aux = base->with_auxiliary({fresh_name(*base, "_z")});
    std::vector<Polynomial> gens = lifted_gens(ideal, aux);
    // 1 - z*g
    Polynomial z = Polynomial::variable(aux, 0);
    gens.push_back(Polynomial::constant(aux, aux->field().one()) - z * g.shift_to(aux, 1));
    return Ideal::from_groebner_basis(ring, eliminate_first(reduced_groebner_basis(gens), base));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same(a, b);
    const MultigradedRingPtr& ring = a.ring_ptr();
    const PolyRingPtr& base = ring->base();
    const PolyRingPtr aux = base->with_auxiliary({fresh_name(*base, "_s")});
    const Polynomial s = Polynomial::variable(aux, 0);
    const Polynomial one_minus_s = Polynomial::constant(aux, aux->field().one()) - s;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : lifted_gens(a, aux)) gens.push_back(s * f);
    for (const Polynomial& f : lifted_gens(b, aux)) gens.push_back(one_minus_s * f);
    return Ideal::from_groebner_basis(ring, eliminate_first(reduced_groebner_basis(gens), base));
}

namespace {

std::vector<Polynomial> directions(const Ideal& ideal, const Ideal& direction) {
    require_same(ideal, direction);
    std::vector<Polynomial> dirs;
    for (const Polynomial& g : direction.gens()) {
        if (!reduce(g, ideal.ring().defining_basis()).is_zero()) dirs.push_back(g);
    }
    if (dirs.empty()) throw IdealError("saturation with respect to the zero ideal is undefined");
    return dirs;
}

Ideal fold_intersection(std::vector<std::optional<Ideal>>& parts) {
    Ideal acc = *parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, *parts[i]);
    return acc;
}

} // namespace

Ideal saturate_serial(const Ideal& ideal, const Ideal& direction) {
    const std::vector<Polynomial> dirs = directions(ideal, direction);
    std::vector<std::optional<Ideal>> parts;
    for (const Polynomial& g : dirs) parts.emplace_back(saturate_by_element(ideal, g));
    return fold_intersection(parts);
}

Ideal saturate(const Ideal& ideal, const Ideal& direction) {
    const std::vector<Polynomial> dirs = directions(ideal, direction);
    // Warm the shared basis cache before fanning out.
    (void)ideal.groebner_basis();
    std::vector<std::optional<Ideal>> parts(dirs.size());
    std::exception_ptr error;
    const long long n = static_cast<long long>(dirs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            parts[static_cast<std::size_t>(i)].emplace(saturate_by_element(ideal, dirs[static_cast<std::size_t>(i)]));
        } catch (...) {
#pragma omp critical(coxdescent_saturate_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return fold_intersection(parts);
}

int ring_dimension(const MultigradedRing& ring) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : ring.defining_basis()) lms.push_back(g.leading_monomial());
    return monomial_ideal_dimension(lms, ring.num_vars());
}

int dimension(const Ideal& ideal) {
    if (ideal.is_unit()) throw IdealError("dimension of the unit ideal is undefined");
    std::vector<Monomial> lms;
    for (const Polynomial& g : ideal.groebner_basis()) lms.push_back(g.leading_monomial());
    return monomial_ideal_dimension(lms, ideal.ring().num_vars());
}

int height(const Ideal& ideal) { return ring_dimension(ideal.ring()) - dimension(ideal); }

} // namespace coxdescent
