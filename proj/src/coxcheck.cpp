#include "coxdescent/coxcheck.hpp"

#include "coxdescent/errors.hpp"
#include "coxdescent/groebner.hpp"

namespace coxdescent {

CoxAmbient::CoxAmbient(MultigradedRingPtr ring, AmbientKind kind, std::vector<int> dims)
    : ring_(std::move(ring)), kind_(kind), dims_(std::move(dims)), irrelevant_(Ideal::irrelevant(ring_)) {
    if (irrelevant_.is_unit()) throw IdealError("irrelevant ideal must be proper");
    if (irrelevant_.is_zero() || height(irrelevant_) < 1) throw IdealError("irrelevant ideal must have positive height");
}

int CoxAmbient::variety_dimension() const { return ring_dimension(*ring_) - ring_->rank(); }

std::string CoxAmbient::label() const {
    switch (kind_) {
    case AmbientKind::product_projective: {
        std::string s;
        for (int n : dims_) s += (s.empty() ? "P^" : " x P^") + std::to_string(n);
        return s;
    }
    case AmbientKind::segre_p1p1:
        return "segre-p1p1";
    case AmbientKind::custom:
        return "custom";
    }
    return "custom";
}

std::vector<std::string> default_product_names(std::span<const int> dims) {
    static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        for (int j = 0; j <= dims[i]; ++j) {
            if (dims.size() <= 6) {
                names.push_back(letters[i] + std::to_string(j));
            } else {
                names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
            }
        }
    }
    return names;
}

CoxAmbient make_product_projective(std::span<const int> dims, std::shared_ptr<const FieldTower> field,
                                   std::vector<std::string> names, OrderKind order) {
    if (dims.empty()) throw RingError("product of projective spaces needs at least one factor");
    int n = 0;
    for (int d : dims) {
        if (d < 1) throw RingError("projective space dimensions must be positive");
        n += d + 1;
    }
    if (names.empty()) names = default_product_names(dims);
    if (static_cast<int>(names.size()) != n) throw RingError("wrong number of variable names");
    std::vector<std::vector<std::int64_t>> grading(dims.size(), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> blocks;
    int at = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        blocks.emplace_back(at, at + dims[i] + 1);
        for (int j = at; j < at + dims[i] + 1; ++j) grading[i][static_cast<std::size_t>(j)] = 1;
        at += dims[i] + 1;
    }
    auto base = std::make_shared<const PolyRing>(std::move(field), std::move(names), std::move(grading), MonomialOrder{order, 0});
    // One variable per factor, enumerated in lexicographic index order.
    std::vector<Polynomial> irrelevant;
    std::vector<int> pick(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) pick[i] = blocks[i].first;
    for (;;) {
        Monomial m;
        for (int v : pick) m.exp[v] = 1;
        irrelevant.push_back(Polynomial::monomial(base, m, base->field().one()));
        int k = static_cast<int>(dims.size()) - 1;
        while (k >= 0 && pick[k] + 1 == blocks[k].second) {
            pick[k] = blocks[k].first;
            --k;
        }
        if (k < 0) break;
        ++pick[k];
    }
    auto ring = std::make_shared<const MultigradedRing>(base, std::vector<Polynomial>{}, std::move(irrelevant));
    return CoxAmbient(std::move(ring), AmbientKind::product_projective, std::vector<int>(dims.begin(), dims.end()));
}

CoxAmbient make_segre_p1p1(std::shared_ptr<const FieldTower> field) {
    auto base = std::make_shared<const PolyRing>(std::move(field), std::vector<std::string>{"z00", "z01", "z10", "z11"},
                                                 std::vector<std::vector<std::int64_t>>{{1, 1, 1, 1}});
    std::vector<Polynomial> irrelevant;
    for (int i = 0; i < 4; ++i) irrelevant.push_back(Polynomial::variable(base, i));
    std::vector<Polynomial> defining{Polynomial::parse(base, "z00*z11-z01*z10")};
    auto ring = std::make_shared<const MultigradedRing>(base, std::move(defining), std::move(irrelevant));
    return CoxAmbient(std::move(ring), AmbientKind::segre_p1p1);
}

Ideal subscheme_ideal(const CoxAmbient& ambient, const Ideal& ideal) {
    return saturate(ideal, ambient.irrelevant());
}

namespace {

void check_generators(const CoxAmbient& ambient, std::span<const Polynomial> fs) {
    for (const Polynomial& f : fs) {
        if (!same_ring(f.ring(), ambient.ring().poly_ring())) throw RingError("generator from a different ring");
        (void)f.multidegree();
        if (reduce(f, ambient.ring().defining_basis()).is_zero()) throw IdealError("generator is zero in the Cox ring");
    }
}

} // namespace

bool is_complete_intersection(const CoxAmbient& ambient, std::span<const Polynomial> fs) {
    check_generators(ambient, fs);
    Ideal I(ambient.ring_ptr(), std::vector<Polynomial>(fs.begin(), fs.end()));
    if (I.is_unit()) return false;
    return height(I) == static_cast<int>(fs.size());
}

StrictCiVerdict is_strict_ci(const CoxAmbient& ambient, std::span<const Polynomial> fs) {
    check_generators(ambient, fs);
    Ideal I(ambient.ring_ptr(), std::vector<Polynomial>(fs.begin(), fs.end()));
    StrictCiVerdict v;
    v.kind = StrictCiVerdict::Kind::not_ci;
    v.expected = static_cast<int>(fs.size());
    v.height = I.is_unit() ? ring_dimension(ambient.ring()) + 1 : height(I);
    if (v.height != v.expected) return v;
    const Ideal sat = subscheme_ideal(ambient, I);
    if (ideal_equal(I, sat)) {
        v.kind = StrictCiVerdict::Kind::strict;
        return v;
    }
    v.kind = StrictCiVerdict::Kind::not_strict;
    for (const Polynomial& g : sat.reduced_basis()) {
        if (!I.contains(g)) {
            v.witness = g;
            break;
        }
    }
    return v;
}

} // namespace coxdescent
