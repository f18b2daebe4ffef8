#include "coxdescent/galois.hpp"

#include "coxdescent/graded.hpp"
#include "coxdescent/groebner.hpp"
#include "coxdescent/linalg.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>

namespace coxdescent {

std::string DescentError::tag() const {
    switch (kind_) {
    case Kind::not_invariant:
        return "NOT_INVARIANT";
    case Kind::not_strict:
        return "NOT_STRICT";
    case Kind::degree_mismatch:
        return "DEGREE_MISMATCH";
    case Kind::internal:
        return "INTERNAL";
    }
    return "INTERNAL";
}

namespace {

using Rational = boost::rational<std::int64_t>;
using RatMatrix = std::vector<std::vector<Rational>>;

constexpr long kMaxOrder = 1'000'000;

// Inverse of a square rational matrix, or empty when singular.
RatMatrix invert(RatMatrix a) {
    const std::size_t n = a.size();
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0) ++p;
        if (p == n) return {};
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].numerator() == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Columns of the grading that form a basis of Q^r, or empty.
std::vector<int> independent_columns(const std::vector<std::vector<std::int64_t>>& grading, int n) {
    const std::size_t r = grading.size();
    std::vector<int> chosen;
    RatMatrix echelon;  // rows: reduced copies of the chosen columns
    std::vector<std::size_t> pivots;
    for (int j = 0; j < n && chosen.size() < r; ++j) {
        std::vector<Rational> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = grading[i][static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const Rational f = v[pivots[k]];
            if (f.numerator() == 0) continue;
            for (std::size_t i = 0; i < r; ++i) v[i] -= f * echelon[k][i];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x.numerator() != 0; });
        if (it == v.end()) continue;
        const std::size_t p = static_cast<std::size_t>(it - v.begin());
        const Rational piv = v[p];
        for (auto& x : v) x /= piv;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const Rational f = echelon[k][p];
            if (f.numerator() == 0) continue;
            for (std::size_t i = 0; i < r; ++i) echelon[k][i] -= f * v[i];
        }
        echelon.push_back(std::move(v));
        pivots.push_back(p);
        chosen.push_back(j);
    }
    if (chosen.size() < r) return {};
    return chosen;
}

std::vector<std::vector<std::int64_t>> compute_degree_matrix(const PolyRing& ring, const std::vector<int>& perm) {
    const auto& a = ring.grading();
    const std::size_t r = a.size();
    const int n = ring.num_vars();
    const std::vector<int> cols = independent_columns(a, n);
    if (cols.empty()) throw RingError("Galois actions need a grading matrix with independent rows");
    RatMatrix b(r, std::vector<Rational>(r)), c(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            b[i][k] = a[i][static_cast<std::size_t>(cols[k])];
            c[i][k] = a[i][static_cast<std::size_t>(perm[static_cast<std::size_t>(cols[k])])];
        }
    }
    const RatMatrix binv = invert(b);
    std::vector<std::vector<std::int64_t>> p(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            Rational s = 0;
            for (std::size_t l = 0; l < r; ++l) s += c[i][l] * binv[l][k];
            if (s.denominator() != 1) throw RingError("action is not compatible with the grading");
            p[i][k] = s.numerator();
        }
    }
    for (int j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < r; ++k) s += p[i][k] * a[k][static_cast<std::size_t>(j)];
            if (s != a[i][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]) {
                throw RingError("action is not compatible with the grading");
            }
        }
    }
    return p;
}

} // namespace

SemilinearAction::SemilinearAction(MultigradedRingPtr ring, int frobenius_power, std::vector<int> perm,
                                   std::vector<FieldElement> scalars)
    : ring_(std::move(ring)), frobenius_power_(frobenius_power), perm_(std::move(perm)), scalars_(std::move(scalars)) {
    if (!ring_) throw RingError("null ring");
    const int n = ring_->num_vars();
    const FieldTower& k = ring_->field();
    if (static_cast<int>(perm_.size()) != n) throw RingError("variable map must cover every variable");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw RingError("variable map is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (scalars_.empty()) scalars_.assign(static_cast<std::size_t>(n), k.one());
    if (static_cast<int>(scalars_.size()) != n) throw RingError("one scalar per variable expected");
    for (const FieldElement& c : scalars_) {
        k.check(c);
        if (k.is_zero(c)) throw RingError("variable scalars must be nonzero");
    }
    const int d = k.degree();
    frobenius_power_ = ((frobenius_power_ % d) + d) % d;
    degree_matrix_ = compute_degree_matrix(ring_->poly_ring(), perm_);

    // Track sigma^m(x_j) = lambda_j x_{idx_j}.
    std::vector<FieldElement> lambda(static_cast<std::size_t>(n), k.one());
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (long m = 1;; ++m) {
        if (m > kMaxOrder) throw RingError("order of the action is too large");
        bool identity = (static_cast<long>(frobenius_power_) * m) % d == 0;
        for (int j = 0; j < n; ++j) {
            auto& l = lambda[static_cast<std::size_t>(j)];
            int& i = idx[static_cast<std::size_t>(j)];
            l = k.mul(k.frobenius(l, frobenius_power_), scalars_[static_cast<std::size_t>(i)]);
            i = perm_[static_cast<std::size_t>(i)];
            identity = identity && i == j && k.is_one(l);
        }
        if (identity) {
            order_ = m;
            break;
        }
    }

    for (const Polynomial& g : ring_->defining_ideal()) {
        if (!reduce(apply(g), ring_->defining_basis()).is_zero()) {
            throw RingError("action does not preserve the defining ideal");
        }
    }
    if (!ring_->irrelevant_gens().empty()) {
        const Ideal irr = Ideal::irrelevant(ring_);
        for (const Polynomial& g : irr.gens()) {
            if (!irr.contains(apply(g))) throw RingError("action does not preserve the irrelevant ideal");
        }
    }
}

SemilinearAction SemilinearAction::frobenius(MultigradedRingPtr ring, int frobenius_power) {
    std::vector<int> perm(static_cast<std::size_t>(ring->num_vars()));
    std::iota(perm.begin(), perm.end(), 0);
    return SemilinearAction(std::move(ring), frobenius_power, std::move(perm));
}

Polynomial SemilinearAction::apply(const Polynomial& f, long times) const {
    if (!same_ring(f.ring(), ring_->poly_ring())) throw RingError("polynomial from a different ring");
    times %= order_;
    if (times < 0) times += order_;
    const FieldTower& k = ring_->field();
    const PolyRingPtr& base = ring_->base();
    const int n = ring_->num_vars();
    Polynomial cur = f;
    for (long step = 0; step < times; ++step) {
        std::vector<Term> terms;
        terms.reserve(cur.size());
        for (const Term& t : cur.terms()) {
            Term u{Monomial{}, k.frobenius(t.coeff, frobenius_power_)};
            for (int j = 0; j < n; ++j) {
                const auto e = t.mono.exp[static_cast<std::size_t>(j)];
                if (e == 0) continue;
                u.mono.exp[static_cast<std::size_t>(perm_[static_cast<std::size_t>(j)])] = e;
                u.coeff = k.mul(u.coeff, k.pow(scalars_[static_cast<std::size_t>(j)], e));
            }
            terms.push_back(u);
        }
        cur = Polynomial::from_terms(base, std::move(terms));
    }
    return cur;
}

Multidegree SemilinearAction::apply_degree(const Multidegree& degree, long times) const {
    times %= order_;
    if (times < 0) times += order_;
    Multidegree cur = degree;
    const std::size_t r = degree_matrix_.size();
    if (cur.size() != r) throw RingError("multidegree has the wrong length");
    for (long step = 0; step < times; ++step) {
        Multidegree next(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) next[i] += degree_matrix_[i][j] * cur[j];
        }
        cur = std::move(next);
    }
    return cur;
}

int SemilinearAction::degree_orbit_size(const Multidegree& degree) const {
    int size = 1;
    for (Multidegree cur = apply_degree(degree); cur != degree; cur = apply_degree(cur)) ++size;
    return size;
}

bool is_invariant_ideal(const SemilinearAction& action, const Ideal& ideal) {
    if (!same_ring(ideal.ring().poly_ring(), action.ring().poly_ring())) throw RingError("ideal from a different ring");
    for (const Polynomial& g : ideal.gens()) {
        if (!ideal.contains(action.apply(g))) return false;
    }
    return true;
}

DegreeOrbitPartition degree_orbits(const SemilinearAction& action, std::span<const Polynomial> fs) {
    std::vector<Multidegree> degs;
    for (const Polynomial& f : fs) degs.push_back(f.multidegree());
    const int s = static_cast<int>(fs.size());
    std::vector<bool> used(fs.size(), false);
    DegreeOrbitPartition out;
    out.r_bounds.push_back(0);
    out.s_bounds.push_back(0);
    for (int i = 0; i < s; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        DegreeOrbitBlock block;
        block.begin = static_cast<int>(out.order.size());
        block.classes.push_back(degs[static_cast<std::size_t>(i)]);
        for (Multidegree cur = action.apply_degree(block.classes[0]); cur != block.classes[0];
             cur = action.apply_degree(cur)) {
            block.classes.push_back(cur);
        }
        block.beta = static_cast<int>(block.classes.size());
        std::vector<std::vector<int>> members(block.classes.size());
        for (int j = 0; j < s; ++j) {
            for (std::size_t c = 0; c < block.classes.size(); ++c) {
                if (degs[static_cast<std::size_t>(j)] == block.classes[c]) members[c].push_back(j);
            }
        }
        block.gamma = static_cast<int>(members[0].size());
        for (std::size_t c = 0; c < members.size(); ++c) {
            if (static_cast<int>(members[c].size()) != block.gamma) {
                throw DescentError(DescentError::Kind::degree_mismatch,
                                   "degree " + format_degree(block.classes[c]) + " occurs " +
                                       std::to_string(members[c].size()) + " times but its orbit partner " +
                                       format_degree(block.classes[0]) + " occurs " + std::to_string(block.gamma) +
                                       " times");
            }
            block.powers.push_back(static_cast<long>(c));
        }
        for (int j = 0; j < block.gamma; ++j) {
            for (std::size_t c = 0; c < members.size(); ++c) {
                const int idx = members[c][static_cast<std::size_t>(j)];
                out.order.push_back(idx);
                used[static_cast<std::size_t>(idx)] = true;
            }
            out.s_bounds.push_back(static_cast<int>(out.order.size()));
        }
        block.end = static_cast<int>(out.order.size());
        out.r_bounds.push_back(block.end);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

std::vector<Polynomial> fixed_space(const SemilinearAction& action, std::span<const Polynomial> V, long subgroup_index) {
    const PolyRingPtr& base = action.ring().base();
    const FieldTower& k = action.ring().field();
    const std::vector<Polynomial> basis = echelon_basis(base, V);
    if (basis.empty()) return {};
    const std::size_t dim = basis.size();
    const std::size_t d = static_cast<std::size_t>(k.degree());
    const std::uint32_t p = k.characteristic();

    // tau(b_j) = sum_k a[k][j] b_k
    std::vector<std::vector<FieldElement>> a(dim, std::vector<FieldElement>(dim, k.zero()));
    for (std::size_t j = 0; j < dim; ++j) {
        const Polynomial image = action.apply(basis[j], subgroup_index);
        if (!reduce_by_echelon(image, basis).is_zero()) {
            throw DescentError(DescentError::Kind::internal, "span is not stable under the subgroup");
        }
        for (std::size_t r = 0; r < dim; ++r) a[r][j] = coefficient_of(image, basis[r].leading_monomial());
    }
    const long twist = static_cast<long>(action.frobenius_power()) * (subgroup_index % action.order());

    // Frobenius twist of the power basis: frob[l] = F^twist(t^l).
    std::vector<FieldElement> frob;
    for (std::size_t l = 0; l < d; ++l) {
        std::vector<std::int64_t> unit(d, 0);
        unit[l] = 1;
        frob.push_back(k.frobenius(k.from_coords(unit), twist));
    }

    // c_k - sum_j a_kj F(c_j) = 0 over GF(p), coordinates (j, l) -> j*d + l.
    const FieldTower prime(p);
    DenseMatrix sys(prime, dim * d, dim * d);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                const FieldElement col = k.mul(a[r][j], frob[l]);
                for (std::size_t row = 0; row < d; ++row) {
                    std::int64_t v = -static_cast<std::int64_t>(col.coords[row]);
                    if (r == j && row == l) v += 1;
                    sys.at(r * d + row, j * d + l) = prime.from_int(v);
                }
            }
        }
    }
    const auto null = nullspace(sys);

    // Canonical GF(p) echelon form in (monomial, coordinate) columns.
    std::vector<Monomial> monos;
    for (const Polynomial& b : basis) {
        for (const Term& t : b.terms()) monos.push_back(t.mono);
    }
    std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return base->greater(x, y); });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    DenseMatrix solutions(prime, null.size(), monos.size() * d);
    for (std::size_t r = 0; r < null.size(); ++r) {
        Polynomial v(base);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::int64_t> coords(d);
            for (std::size_t l = 0; l < d; ++l) coords[l] = null[r][j * d + l].coords[0];
            const FieldElement c = k.from_coords(coords);
            if (!k.is_zero(c)) v += basis[j].scaled(c);
        }
        for (const Term& t : v.terms()) {
            const auto it = std::lower_bound(monos.begin(), monos.end(), t.mono,
                                             [&](const Monomial& x, const Monomial& y) { return base->greater(x, y); });
            const std::size_t m = static_cast<std::size_t>(it - monos.begin());
            for (std::size_t l = 0; l < d; ++l) solutions.at(r, m * d + l) = prime.from_int(t.coeff.coords[l]);
        }
    }
    row_reduce(solutions);

    std::vector<Polynomial> out;
    std::vector<Polynomial> span;
    for (std::size_t r = 0; r < solutions.rows(); ++r) {
        std::vector<Term> terms;
        for (std::size_t m = 0; m < monos.size(); ++m) {
            std::vector<std::int64_t> coords(d);
            for (std::size_t l = 0; l < d; ++l) coords[l] = solutions.at(r, m * d + l).coords[0];
            const FieldElement c = k.from_coords(coords);
            if (!k.is_zero(c)) terms.push_back({monos[m], c});
        }
        Polynomial v = Polynomial::from_terms(base, std::move(terms));
        if (reduce_by_echelon(v, span).is_zero()) continue;
        out.push_back(v);
        span = echelon_basis(base, out);
    }
    return out;
}

std::vector<Polynomial> monic_sorted(std::span<const Polynomial> fs) {
    std::vector<Polynomial> out;
    for (const Polynomial& f : fs) out.push_back(f.monic());
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
    return out;
}

namespace {

[[noreturn]] void internal(const std::string& what) { throw DescentError(DescentError::Kind::internal, what); }

bool is_literal_orbit(const SemilinearAction& action, std::span<const Polynomial> block) {
    for (const Polynomial& h : block) {
        const Polynomial image = action.apply(h);
        if (std::find(block.begin(), block.end(), image) == block.end()) return false;
    }
    return true;
}

} // namespace

DescentResult descend(const CoxAmbient& ambient, const SemilinearAction& action, std::span<const Polynomial> fs) {
    if (!same_ring(ambient.ring().poly_ring(), action.ring().poly_ring())) {
        throw RingError("action and ambient belong to different rings");
    }
    const MultigradedRingPtr& ring = ambient.ring_ptr();
    const Ideal target(ring, std::vector<Polynomial>(fs.begin(), fs.end()));
    if (!is_invariant_ideal(action, target)) {
        throw DescentError(DescentError::Kind::not_invariant, "ideal is not invariant under the action");
    }
    if (!fs.empty()) {
        const StrictCiVerdict verdict = is_strict_ci(ambient, fs);
        if (verdict.kind == StrictCiVerdict::Kind::not_ci) {
            throw DescentError(DescentError::Kind::not_strict, "not a complete intersection: height " +
                                                                   std::to_string(verdict.height) + ", expected " +
                                                                   std::to_string(verdict.expected));
        }
        if (verdict.kind == StrictCiVerdict::Kind::not_strict) {
            throw DescentError(DescentError::Kind::not_strict,
                               "ideal is not saturated: witness " + verdict.witness->to_string());
        }
    }

    DescentResult result;
    result.partition = degree_orbits(action, fs);
    const DegreeOrbitPartition& part = result.partition;
    std::vector<Polynomial> w;
    for (int i : part.order) w.push_back(fs[static_cast<std::size_t>(i)]);
    const std::size_t s = w.size();
    std::vector<int> beta_at(s);
    for (const DegreeOrbitBlock& b : part.blocks) {
        for (int i = b.begin; i < b.end; ++i) beta_at[static_cast<std::size_t>(i)] = b.beta;
    }

    // Stage one: make f_t fixed by the stabilizer <sigma^beta> of its degree.
    for (std::size_t t = 0; t < s; ++t) {
        const long beta = beta_at[t];
        if (action.apply(w[t], beta) == w[t]) continue;
        std::vector<Polynomial> others;
        for (std::size_t i = 0; i < s; ++i) {
            if (i != t) others.push_back(w[i]);
        }
        const Ideal rest(ring, others);
        const long sub_order = action.order() / std::gcd(action.order(), beta);
        std::vector<Polynomial> orbit;
        for (long k = 0; k < sub_order; ++k) orbit.push_back(action.apply(w[t], k * beta));
        bool replaced = false;
        for (const Polynomial& v : fixed_space(action, orbit, beta)) {
            if (!rest.contains(v)) {
                w[t] = v;
                replaced = true;
                break;
            }
        }
        if (!replaced) internal("no stabilizer-fixed element escapes the other generators");
        if (!ideal_equal(Ideal(ring, w), target)) internal("substitution changed the ideal");
    }

    // Stage two: rebuild each degree orbit block from translates of L_1 generators.
    const auto& jgb = ring->defining_basis();
    for (const DegreeOrbitBlock& b : part.blocks) {
        bool orbits = true;
        for (int j = 0; j < b.gamma && orbits; ++j) {
            const auto first = w.begin() + b.begin + j * b.beta;
            orbits = is_literal_orbit(action, std::span<const Polynomial>(&*first, static_cast<std::size_t>(b.beta)));
        }
        if (orbits) continue;

        const Ideal current(ring, w);
        std::vector<Polynomial> f1;
        for (int j = 0; j < b.gamma; ++j) f1.push_back(w[static_cast<std::size_t>(b.begin + j * b.beta)]);
        const auto piece = graded_piece_basis(current, b.classes[0]);
        const auto lower = lower_piece_basis(current, b.classes[0]);
        std::vector<Polynomial> combined = lower;
        for (const Polynomial& f : f1) combined.push_back(jgb.empty() ? f : reduce(f, jgb));
        if (piece.size() != static_cast<std::size_t>(b.gamma) + lower.size() ||
            echelon_basis(ring->base(), combined).size() != piece.size()) {
            internal("generators of degree " + format_degree(b.classes[0]) +
                     " together with lower-degree multiples do not form a basis of the graded piece");
        }
        for (int j = 0; j < b.gamma; ++j) {
            for (int i = 0; i < b.beta; ++i) {
                w[static_cast<std::size_t>(b.begin + j * b.beta + i)] =
                    action.apply(f1[static_cast<std::size_t>(j)], b.powers[static_cast<std::size_t>(i)]);
            }
        }
        if (!ideal_equal(Ideal(ring, w), target)) internal("orbit assembly changed the ideal");
    }

    for (std::size_t i = 0; i < s; ++i) {
        const Multidegree before = fs[static_cast<std::size_t>(part.order[i])].multidegree();
        const Multidegree after = w[i].multidegree();
        if (before != after) internal("degree changed at position " + std::to_string(i + 1));
        result.degree_log.emplace_back(before, after);
    }
    for (std::size_t i = 0; i + 1 < part.s_bounds.size(); ++i) {
        const auto first = w.begin() + part.s_bounds[i];
        const std::size_t len = static_cast<std::size_t>(part.s_bounds[i + 1] - part.s_bounds[i]);
        if (!is_literal_orbit(action, std::span<const Polynomial>(&*first, len))) internal("block is not an orbit");
    }
    result.new_gens = std::move(w);
    result.s_bounds = part.s_bounds;
    result.r_bounds = part.r_bounds;
    return result;
}

} // namespace coxdescent
