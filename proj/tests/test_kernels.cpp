#include "coxdescent/linalg.hpp"

#include "support.hpp"

#include <doctest.h>
#include <omp.h>

using namespace coxdescent;
using testsupport::gf;

namespace {

DenseMatrix random_matrix(const FieldTower& k, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    DenseMatrix m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            // Sparse-ish rows and a few repeated rows exercise rank deficiency.
            if (rng() % 3 == 0) m.at(r, c) = testsupport::random_element(k, rng);
        }
    }
    for (std::size_t r = 1; r < rows; r += 7) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = m.at(r - 1, c);
    }
    return m;
}

struct ThreadGuard {
    int saved = omp_get_max_threads();
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

} // namespace

TEST_CASE("parallel row reduction matches the serial reference") {
    ThreadGuard guard;
    std::mt19937_64 rng(77);
    const auto k = gf(101, 2);
    const auto p = gf(7);
    for (int round = 0; round < 12; ++round) {
        const FieldTower& field = round % 2 ? *k : *p;
        const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
        const DenseMatrix m = random_matrix(field, rows, cols, rng);
        DenseMatrix ref = m;
        const auto ref_pivots = row_reduce_serial(ref);
        for (int threads = 1; threads <= 4; ++threads) {
            omp_set_num_threads(threads);
            DenseMatrix par = m;
            CHECK(row_reduce(par) == ref_pivots);
            CHECK(par == ref);
        }
        CHECK(rank(m) == ref_pivots.size());
    }
}

TEST_CASE("nullspace vectors are annihilated") {
    std::mt19937_64 rng(5);
    const auto k = gf(5, 3);
    for (int round = 0; round < 10; ++round) {
        const DenseMatrix m = random_matrix(*k, 1 + rng() % 8, 1 + rng() % 10, rng);
        const auto null = nullspace(m);
        CHECK(null.size() + rank(m) == m.cols());
        for (const auto& v : null) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                FieldElement s = k->zero();
                for (std::size_t c = 0; c < m.cols(); ++c) s = k->add(s, k->mul(m.at(r, c), v[c]));
                CHECK(k->is_zero(s));
            }
        }
    }
}

TEST_CASE("parallel saturation matches the serial reference") {
    ThreadGuard guard;
    std::mt19937_64 rng(19);
    const std::vector<std::vector<int>> shapes = {{1, 1}, {1, 2}, {2, 2}};
    for (int round = 0; round < 6; ++round) {
        const CoxAmbient amb = make_product_projective(shapes[static_cast<std::size_t>(round) % shapes.size()], gf(31));
        std::vector<Polynomial> fs;
        for (int i = 0; i < 2; ++i) {
            fs.push_back(testsupport::random_homogeneous(amb.ring().base(), testsupport::random_degree(2, 2, rng), rng));
        }
        const Ideal I(amb.ring_ptr(), fs);
        const auto ref = saturate_serial(I, amb.irrelevant()).groebner_basis();
        for (int threads = 1; threads <= 4; ++threads) {
            omp_set_num_threads(threads);
            CHECK(saturate(Ideal(amb.ring_ptr(), fs), amb.irrelevant()).groebner_basis() == ref);
        }
    }
}
