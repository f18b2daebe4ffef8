#include "coxdescent/multigraded.hpp"

#include "coxdescent/errors.hpp"
#include "coxdescent/groebner.hpp"

#include <algorithm>

namespace coxdescent {

MultigradedRing::MultigradedRing(PolyRingPtr base, std::vector<Polynomial> defining_ideal,
                                 std::vector<Polynomial> irrelevant_gens)
    : base_(std::move(base)), defining_(std::move(defining_ideal)), irrelevant_(std::move(irrelevant_gens)) {
    if (!base_) throw RingError("null base ring");
    if (!base_->is_positively_graded()) throw RingError("grading is not positive");
    for (const auto* list : {&defining_, &irrelevant_}) {
        for (const Polynomial& f : *list) {
            if (!same_ring(f.ring(), *base_)) throw RingError("generator from a different ring");
            if (!f.is_zero()) (void)f.multidegree();
        }
    }
    defining_gb_ = reduced_groebner_basis(defining_);
    if (!defining_gb_.empty() && defining_gb_.front().is_constant()) throw RingError("defining ideal is the unit ideal");
}

Polynomial MultigradedRing::var(std::string_view name) const {
    const int i = base_->var_index(name);
    if (i < 0) throw RingError("unknown variable " + std::string(name));
    return Polynomial::variable(base_, i);
}

namespace {

// Depth-first enumeration of exponent vectors of positive weight
// c . degree; the exact multidegree is checked at the leaves. `visit`
// returns false to stop early.
template <class Visit>
void enumerate(const PolyRing& ring, const Multidegree& degree, Visit&& visit) {
    if (static_cast<int>(degree.size()) != ring.grading_rank()) throw RingError("multidegree has wrong rank");
    const auto& w = ring.positive_weights();
    if (w.empty()) throw RingError("grading is not positive");
    const auto& c = ring.positive_combination();
    std::int64_t budget = 0;
    for (std::size_t r = 0; r < degree.size(); ++r) budget += c[r] * degree[r];
    if (budget < 0) return;
    const int n = ring.num_vars();
    Monomial cur;
    bool stop = false;
    auto rec = [&](auto&& self, int j, std::int64_t rest) -> void {
        if (stop) return;
        if (j == n) {
            if (rest == 0 && ring.degree(cur) == degree && !visit(cur)) stop = true;
            return;
        }
        if (j == n - 1) {
            if (rest % w[j] != 0) return;
            const std::int64_t e = rest / w[j];
            if (e > 0xffff) return;
            cur.exp[j] = static_cast<std::uint16_t>(e);
            self(self, j + 1, 0);
            cur.exp[j] = 0;
            return;
        }
        for (std::int64_t e = rest / w[j]; e >= 0 && !stop; --e) {
            if (e > 0xffff) continue;
            cur.exp[j] = static_cast<std::uint16_t>(e);
            self(self, j + 1, rest - e * w[j]);
        }
        cur.exp[j] = 0;
    };
    rec(rec, 0, budget);
}

} // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, const Multidegree& degree) {
    std::vector<Monomial> out;
    enumerate(ring, degree, [&](const Monomial& m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
    return out;
}

bool is_effective(const PolyRing& ring, const Multidegree& degree) {
    bool found = false;
    enumerate(ring, degree, [&](const Monomial&) {
        found = true;
        return false;
    });
    return found;
}

bool degree_leq(const Multidegree& lhs, const Multidegree& rhs, const PolyRing& ring) {
    return is_effective(ring, rhs - lhs);
}

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) throw RingError("multidegree rank mismatch");
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Multidegree operator-(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) throw RingError("multidegree rank mismatch");
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

} // namespace coxdescent
