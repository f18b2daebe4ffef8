#include "coxdescent/coxcheck.hpp"
#include "coxdescent/errors.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace coxdescent;
using testsupport::gf;

namespace {

PolyRingPtr p1p1(std::uint32_t p = 101, int d = 1) {
    return std::make_shared<const PolyRing>(gf(p, d), std::vector<std::string>{"x0", "x1", "y0", "y1"},
                                            std::vector<std::vector<std::int64_t>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    const auto R = p1p1();
    const Polynomial x0 = Polynomial::variable(R, 0), x1 = Polynomial::variable(R, 1);
    CHECK((x0 + x1) * (x0 - x1) == Polynomial::parse(R, "x0^2 - x1^2"));
    const Polynomial f = Polynomial::parse(R, "3*x0*y0 + 5*x1^2 - y1");
    CHECK((f + (-f)).is_zero());
    CHECK((f - f).is_zero());

    const auto R3 = p1p1(3);
    const Polynomial s = Polynomial::variable(R3, 0) + Polynomial::variable(R3, 1);
    CHECK(s.pow(3) == Polynomial::parse(R3, "x0^3+x1^3"));
    CHECK(s * s * s == s.pow(3));
}

TEST_CASE("ring mismatch is an error") {
    const auto a = p1p1(101), b = p1p1(103);
    CHECK_THROWS_AS(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), RingError);
}

TEST_CASE("multidegree") {
    const auto R = p1p1();
    CHECK(Polynomial::parse(R, "x0*y0").multidegree() == Multidegree{1, 1});
    CHECK(Polynomial::parse(R, "x0").multidegree() == Multidegree{1, 0});
    try {
        (void)Polynomial::parse(R, "x0*y0 + x1").multidegree();
        FAIL("expected an inhomogeneity error");
    } catch (const InhomogeneousError& e) {
        CHECK(e.first() == "x0*y0");
        CHECK(e.second() == "x1");
    }
    CHECK_THROWS_AS(Polynomial(R).multidegree(), IdealError);
}

TEST_CASE("monomials of a degree") {
    const auto R = p1p1();
    const auto m11 = monomials_of_degree(*R, {1, 1});
    REQUIRE(m11.size() == 4);
    std::vector<std::string> names;
    for (const Monomial& m : m11) names.push_back(R->format(m));
    CHECK(names == std::vector<std::string>{"x0*y0", "x1*y0", "x0*y1", "x1*y1"});
    const auto m00 = monomials_of_degree(*R, {0, 0});
    REQUIRE(m00.size() == 1);
    CHECK(m00[0].is_one());
    CHECK(monomials_of_degree(*R, {-1, 0}).empty());
}

TEST_CASE("monomial counts on products of projective spaces match binomials") {
    for (const std::vector<int>& dims : {std::vector<int>{1, 1}, {1, 2}, {2, 2}, {3}, {1, 1, 1}, {2, 3}}) {
        const CoxAmbient amb = make_product_projective(dims, gf(7));
        const PolyRing& R = amb.ring().poly_ring();
        for (int round = 0; round < 27; ++round) {
            Multidegree d(dims.size());
            std::int64_t want = 1;
            int r = round;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                d[i] = r % 3;
                r /= 3;
                want *= binom(dims[i] + d[i], d[i]);
            }
            const auto monos = monomials_of_degree(R, d);
            CHECK(static_cast<std::int64_t>(monos.size()) == want);
            CHECK(monos.size() == oracle::brute_monomials(R, d, 2).size());
            for (std::size_t i = 1; i < monos.size(); ++i) CHECK(R.greater(monos[i - 1], monos[i]));
        }
    }
}

TEST_CASE("degree order") {
    const auto R = p1p1();
    CHECK(degree_leq({1, 0}, {1, 1}, *R));
    CHECK_FALSE(degree_leq({1, 0}, {0, 1}, *R));
    CHECK(degree_leq({2, 1}, {2, 1}, *R));
}

TEST_CASE("degree order is a partial order on a box") {
    const auto R = p1p1();
    std::vector<Multidegree> box;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) box.push_back({a, b});
    for (const auto& a : box) {
        CHECK(degree_leq(a, a, *R));
        for (const auto& b : box) {
            if (degree_leq(a, b, *R) && degree_leq(b, a, *R)) CHECK(a == b);
            for (const auto& c : box) {
                if (degree_leq(a, b, *R) && degree_leq(b, c, *R)) CHECK(degree_leq(a, c, *R));
            }
        }
    }
}

TEST_CASE("multidegree is additive") {
    const auto R = p1p1(7);
    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
        const Multidegree a = testsupport::random_degree(2, 2, rng), b = testsupport::random_degree(2, 2, rng);
        const Polynomial f = testsupport::random_homogeneous(R, a, rng);
        const Polynomial g = testsupport::random_homogeneous(R, b, rng);
        CHECK((f * g).multidegree() == a + b);
    }
}

TEST_CASE("positivity of gradings") {
    CHECK(p1p1()->is_positively_graded());
    // Row difference x - y gives weights (1,1,-1): not positive, but rows (1,1,0),(0,1,1) are.
    CHECK(PolyRing(gf(5), {"a", "b", "c"}, {{1, 1, 0}, {0, 1, 1}}).is_positively_graded());
    CHECK_THROWS_AS(MultigradedRing(std::make_shared<const PolyRing>(gf(5), std::vector<std::string>{"a", "b"},
                                                                     std::vector<std::vector<std::int64_t>>{{1, -1}}),
                                    {}, {}),
                    RingError);
    // Positive only through a combination of rows.
    CHECK(PolyRing(gf(5), {"a", "b"}, {{2, -1}, {-1, 1}}).is_positively_graded());
}

TEST_CASE("canonical printing and parsing") {
    const auto R = p1p1();
    CHECK(Polynomial::parse(R, "x1^2*100 + x0^2").to_string() == "x0^2+100*x1^2");
    CHECK(Polynomial::parse(R, "-x0").to_string() == "100*x0");
    CHECK(Polynomial(R).to_string() == "0");
    CHECK(Polynomial::parse(R, " 2 * x0 ^ 2 * y1 - 1*x1*x0*y0 ").to_string() == "100*x0*x1*y0+2*x0^2*y1");
    const auto K = p1p1(3, 2);
    const Polynomial f = Polynomial::parse(K, "(2*t+1)*x0 + t*y0 + 2*y1");
    CHECK(f.to_string() == "(2*t+1)*x0+t*y0+2*y1");
    CHECK(Polynomial::parse(K, f.to_string()) == f);
    CHECK_THROWS_AS(Polynomial::parse(R, "x0 + z"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(R, "x0 +"), ParseError);
}

TEST_CASE("printing round-trips random polynomials") {
    std::mt19937_64 rng(17);
    const auto K = p1p1(5, 2);
    for (int round = 0; round < 100; ++round) {
        const Polynomial f = testsupport::random_homogeneous(K, testsupport::random_degree(2, 3, rng), rng);
        CHECK(Polynomial::parse(K, f.to_string()) == f);
    }
}

TEST_CASE("variable names") {
    CHECK_THROWS_AS(PolyRing(gf(5), {"t", "x"}, {{1, 1}}), RingError);
    CHECK_THROWS_AS(PolyRing(gf(5), {"x", "x"}, {{1, 1}}), RingError);
}

TEST_CASE("exponent overflow is detected") {
    const auto R = p1p1();
    Monomial big;
    big.exp[0] = 60000;
    CHECK_THROWS_AS(big * big, RingError);
}
