#include "coxdescent/coxcheck.hpp"
#include "coxdescent/errors.hpp"
#include "coxdescent/groebner.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace coxdescent;
using testsupport::gf;

namespace {

struct P1P1 {
    CoxAmbient amb = make_product_projective(std::vector<int>{1, 1}, gf(101));
    Polynomial p(const char* s) const { return amb.ring().parse(s); }
    Ideal ideal(std::initializer_list<const char*> gens) const {
        std::vector<Polynomial> fs;
        for (const char* g : gens) fs.push_back(p(g));
        return Ideal(amb.ring_ptr(), fs);
    }
};

std::vector<std::string> strings(const std::vector<Polynomial>& fs) {
    std::vector<std::string> out;
    for (const Polynomial& f : fs) out.push_back(f.to_string());
    return out;
}

} // namespace

TEST_CASE("reduced Gröbner bases") {
    P1P1 r;
    CHECK(strings(r.ideal({"x0*y0", "x1*y1"}).groebner_basis()) == std::vector<std::string>{"x0*y0", "x1*y1"});
    CHECK(strings(r.ideal({"x0", "x0+x1"}).groebner_basis()) == std::vector<std::string>{"x0", "x1"});
    CHECK(strings(r.ideal({"x0*y0^2", "x1^2*y1"}).groebner_basis()) == std::vector<std::string>{"x0*y0^2", "x1^2*y1"});
    CHECK(r.ideal({}).groebner_basis().empty());
    CHECK(strings(r.ideal({"2*x0*y0", "x0*y0"}).groebner_basis()) == std::vector<std::string>{"x0*y0"});
}

TEST_CASE("a basis that needs S-pairs") {
    P1P1 r;
    // x0*y0 - x1*y1 and x0*y1: S-pair gives x1*y1^2.
    const Ideal I = r.ideal({"x0*y0 - x1*y1", "x0*y1"});
    const auto& gb = I.groebner_basis();
    CHECK(is_groebner_basis(gb));
    CHECK(I.contains(r.p("x1*y1^2")));
    for (const Polynomial& g : gb) CHECK(g.leading_coeff() == r.amb.ring().field().one());
    for (std::size_t i = 1; i < gb.size(); ++i) CHECK(r.amb.ring().poly_ring().greater(gb[i - 1].leading_monomial(), gb[i].leading_monomial()));
}

TEST_CASE("normal forms") {
    P1P1 r;
    const Ideal I = r.ideal({"x0*y0", "x1*y1"});
    CHECK(I.normal_form(r.p("x0*y0 + x1*y1")).is_zero());
    CHECK(I.normal_form(r.p("x0*x1")) == r.p("x0*x1"));
    CHECK(r.ideal({"x0"}).normal_form(r.p("1")) == r.p("1"));
}

TEST_CASE("ideal equality") {
    P1P1 r;
    CHECK(ideal_equal(r.ideal({"x0", "x1"}), r.ideal({"x0+3*x1", "x1"})));
    CHECK_FALSE(ideal_equal(r.ideal({"x0", "y0"}), r.ideal({"x0", "x1", "y0"})));
    const Ideal I = r.ideal({"x0*y0", "x1*y1"});
    CHECK_FALSE(ideal_equal(I, saturate(I, r.amb.irrelevant())));
    CHECK(ideal_equal(r.ideal({}), r.ideal({})));
    const CoxAmbient other = make_product_projective(std::vector<int>{1, 1}, gf(103));
    CHECK_THROWS_AS(ideal_equal(I, Ideal(other.ring_ptr(), {})), RingError);
}

TEST_CASE("saturation examples") {
    P1P1 r;
    const Ideal& G = r.amb.irrelevant();
    const Ideal s1 = saturate(r.ideal({"x0*y0", "x1*y1"}), G);
    CHECK(s1.contains(r.p("x0*x1")));
    CHECK(strings(s1.groebner_basis()) == std::vector<std::string>{"x0*x1", "x0*y0", "x1*y1", "y0*y1"});
    CHECK(strings(saturate(r.ideal({"x0", "x1*y0"}), G).groebner_basis()) == std::vector<std::string>{"x0", "y0"});
    const Ideal s3 = saturate(r.ideal({"x0*y0^2", "x1^2*y1"}), G);
    CHECK(s3.contains(r.p("x0^2*x1^2")));
    CHECK_THROWS_AS(saturate(r.ideal({"x0"}), r.ideal({})), IdealError);
    const Ideal I = r.ideal({"x0*y0", "x1*y1"});
    CHECK(saturate(I, I).is_unit());
}

TEST_CASE("saturation of two points agrees with the intersection of their ideals up to degree (3,3)") {
    // (x0y0, x1y1) cuts out the points x0=y1=0 and x1=y0=0. The oracle is the
    // intersection of the monomial ideals (x0,y1) and (x1,y0), degree by degree.
    P1P1 r;
    const Ideal sat = saturate(r.ideal({"x0*y0", "x1*y1"}), r.amb.irrelevant());
    const PolyRing& R = r.amb.ring().poly_ring();
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            std::vector<Polynomial> oracle_piece;
            for (const Monomial& m : oracle::brute_monomials(R, {a, b}, 3)) {
                const bool in_first = m.exp[0] > 0 || m.exp[3] > 0;
                const bool in_second = m.exp[1] > 0 || m.exp[2] > 0;
                if (in_first && in_second) oracle_piece.push_back(Polynomial::monomial(r.amb.ring().base(), m, R.field().one()));
            }
            const auto engine_piece = oracle::graded_span(sat.groebner_basis(), {a, b}, 3);
            CHECK(oracle::span_rank(engine_piece) == oracle_piece.size());
            for (const Polynomial& f : engine_piece) CHECK(oracle::in_span(f, oracle_piece));
        }
    }
}

TEST_CASE("dimension and height") {
    P1P1 r;
    CHECK(dimension(r.ideal({"x0", "y0"})) == 2);
    CHECK(dimension(r.ideal({"x0*y0", "x1*y1"})) == 2);
    CHECK(dimension(r.ideal({})) == 4);
    CHECK(height(r.ideal({"x0*y0", "x1*y1"})) == 2);
    CHECK(height(r.amb.irrelevant()) == 2);
    CHECK(height(r.ideal({"x0"})) == 1);
    CHECK(oracle::subset_dimension({r.p("x0*y0").leading_monomial(), r.p("x1*y1").leading_monomial()}, 4) == 2);
}

TEST_CASE("unit ideal has no dimension") {
    const auto k = gf(101);
    auto base = std::make_shared<const PolyRing>(k, std::vector<std::string>{"a", "b"}, std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    auto ring = std::make_shared<const MultigradedRing>(base, std::vector<Polynomial>{}, std::vector<Polynomial>{});
    const Ideal unit(ring, {Polynomial::constant(base, k->one())});
    CHECK(unit.is_unit());
    CHECK_THROWS_AS(dimension(unit), IdealError);
}

TEST_CASE("monomial dimension agrees with subset search") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Monomial> monos;
        const int count = static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i) {
            Monomial m;
            for (int j = 0; j < n; ++j) {
                if (rng() % 3 == 0) m.exp[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(1 + rng() % 2);
            }
            monos.push_back(m);
        }
        CHECK(monomial_ideal_dimension(monos, n) == oracle::subset_dimension(monos, n));
    }
}

TEST_CASE("Gröbner basis invariants on random ideals") {
    std::mt19937_64 rng(8);
    const CoxAmbient amb = make_product_projective(std::vector<int>{1, 2}, gf(7));
    for (int round = 0; round < 25; ++round) {
        std::vector<Polynomial> fs;
        const int s = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < s; ++i) {
            fs.push_back(testsupport::random_homogeneous(amb.ring().base(), testsupport::random_degree(2, 2, rng), rng));
        }
        const Ideal I(amb.ring_ptr(), fs);
        const auto& gb = I.groebner_basis();
        CHECK(is_groebner_basis(gb));
        for (const Polynomial& f : fs) CHECK(I.normal_form(f).is_zero());
        for (std::size_t i = 0; i < gb.size(); ++i) {
            for (std::size_t j = i + 1; j < gb.size(); ++j) CHECK(reduce(s_polynomial(gb[i], gb[j]), gb).is_zero());
        }
        const Ideal sat = saturate(I, amb.irrelevant());
        CHECK(ideal_contains(sat, I));
        CHECK(ideal_equal(saturate(sat, amb.irrelevant()), sat));
    }
}

TEST_CASE("lex and grevlex give the same ideal") {
    std::mt19937_64 rng(2);
    const auto k = gf(101);
    const auto grevlex = make_product_projective(std::vector<int>{1, 1}, k, {}, OrderKind::grevlex);
    const auto lex = make_product_projective(std::vector<int>{1, 1}, k, {}, OrderKind::lex);
    for (int round = 0; round < 10; ++round) {
        const auto fs = testsupport::random_regular_sequence(grevlex, 1, 2, rng);
        std::vector<Polynomial> moved;
        for (const Polynomial& f : fs) moved.push_back(Polynomial::parse(lex.ring().base(), f.to_string()));
        const Ideal a(grevlex.ring_ptr(), fs), b(lex.ring_ptr(), moved);
        CHECK(height(a) == height(b));
        CHECK(is_groebner_basis(b.groebner_basis()));
    }
}
